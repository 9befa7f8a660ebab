use std::sync::Arc;

use crate::error::Result;
use crate::lie::{dual_gram, restricted_roots, weyl_group, LieAlgebra, RootDatum, WeylGroup};
use crate::nupoly::NuPolynomial;
use crate::scalar::Rational;
use crate::uea::{OrderKind, PbwOrder};

/// An algebra together with its two PBW orders and derived root data.
/// Orders carry the rewrite memo, so reuse one context per algebra.
#[derive(Debug, Clone)]
pub struct Context {
    pub algebra: Arc<LieAlgebra>,
    pub pr: Arc<PbwOrder>,
    pub b: Arc<PbwOrder>,
    pub roots: RootDatum,
    pub weyl: WeylGroup,
    pub gram: Vec<Vec<Rational>>,
}

impl Context {
    pub fn new(algebra: LieAlgebra) -> Self {
        let algebra = Arc::new(algebra);
        Context {
            pr: PbwOrder::new(Arc::clone(&algebra), OrderKind::Pr),
            b: PbwOrder::new(Arc::clone(&algebra), OrderKind::B),
            roots: restricted_roots(&algebra),
            weyl: weyl_group(&algebra),
            gram: dual_gram(&algebra),
            algebra,
        }
    }

    pub fn sl(n: usize) -> Result<Self> {
        Ok(Self::new(LieAlgebra::special_linear(n)?))
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(Self::new(LieAlgebra::from_name(name)?))
    }

    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn order(&self, kind: OrderKind) -> &Arc<PbwOrder> {
        match kind {
            OrderKind::Pr => &self.pr,
            OrderKind::B => &self.b,
        }
    }

    /// `ρ` as constant polynomials, one per Cartan coordinate.
    pub fn rho_polys(&self) -> Vec<NuPolynomial> {
        self.roots
            .rho
            .iter()
            .map(|v| NuPolynomial::rational(self.rank(), v.clone()))
            .collect()
    }
}
