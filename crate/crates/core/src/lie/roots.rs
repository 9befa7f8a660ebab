use num_traits::{One, Zero};

use super::algebra::LieAlgebra;
use crate::linalg;
use crate::scalar::{int, Gaussian, Rational};

/// Restricted roots of a split algebra, in Cartan-value coordinates
/// (`α ↦ (α(h_1), …, α(h_r))`). Positive roots come first, then their
/// negatives in the same order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub roots: Vec<Vec<Rational>>,
    /// Indices into `roots`.
    pub simple_system: Vec<usize>,
    pub multiplicities: Vec<usize>,
    pub rho: Vec<Rational>,
    /// Coefficients of each root in the simple system.
    pub simple_coeffs: Vec<Vec<i64>>,
}

impl RootDatum {
    pub fn positive(&self) -> &[Vec<Rational>] {
        &self.roots[..self.roots.len() / 2]
    }
}

pub fn restricted_roots(alg: &LieAlgebra) -> RootDatum {
    let pos = alg.positive_roots();
    let mut roots: Vec<Vec<Rational>> = pos.iter().map(|r| r.values.clone()).collect();
    roots.extend(pos.iter().map(|r| r.values.iter().map(|v| -v).collect::<Vec<_>>()));
    let mut simple_coeffs: Vec<Vec<i64>> = pos.iter().map(|r| r.simple_coeffs.clone()).collect();
    simple_coeffs.extend(pos.iter().map(|r| r.simple_coeffs.iter().map(|c| -c).collect::<Vec<_>>()));
    let simple_system: Vec<usize> = (0..pos.len()).filter(|&k| pos[k].height == 1).collect();
    // split form: every root space is one-dimensional
    let multiplicities = vec![1; roots.len()];
    let mut rho = vec![Rational::zero(); alg.rank()];
    for (r, m) in pos.iter().zip(&multiplicities) {
        for (acc, v) in rho.iter_mut().zip(&r.values) {
            *acc += v * int(*m as i64);
        }
    }
    let half = Rational::new(1.into(), 2.into());
    for v in rho.iter_mut() {
        *v *= &half;
    }
    RootDatum {
        roots,
        simple_system,
        multiplicities,
        rho,
        simple_coeffs,
    }
}

/// Gram matrix of the Killing-dual inner product on `𝔞*` in Cartan-value
/// coordinates: `⟨λ, μ⟩ = λᵀ G μ` with `G = (B|_𝔞)⁻¹`.
pub fn dual_gram(alg: &LieAlgebra) -> Vec<Vec<Rational>> {
    linalg::inverse(&alg.cartan_killing()).expect("Killing form is nondegenerate on a")
}

pub fn inner(gram: &[Vec<Rational>], x: &[Rational], y: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            acc += xi * &gram[i][j] * yj;
        }
    }
    acc
}

/// Complex-bilinear extension of the inner product.
pub fn inner_complex(gram: &[Vec<Rational>], x: &[Gaussian], y: &[Gaussian]) -> Gaussian {
    let mut acc = Gaussian::zero();
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            acc += xi * Gaussian::from(gram[i][j].clone()) * yj;
        }
    }
    acc
}

/// Reflection `s_α` as a matrix acting on Cartan-value column vectors.
pub fn reflection(gram: &[Vec<Rational>], alpha: &[Rational]) -> Vec<Vec<Rational>> {
    let r = alpha.len();
    let aa = inner(gram, alpha, alpha);
    // s(λ) = λ − 2⟨λ,α⟩/⟨α,α⟩ α; ⟨λ,α⟩ = Σ_j λ_j (Gα)_j
    let g_alpha: Vec<Rational> = (0..r)
        .map(|j| (0..r).map(|k| &gram[j][k] * &alpha[k]).sum())
        .collect();
    let two = int(2);
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let id = if i == j { Rational::one() } else { Rational::zero() };
                    id - &two * &alpha[i] * &g_alpha[j] / &aa
                })
                .collect()
        })
        .collect()
}
