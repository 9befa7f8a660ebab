use std::fmt;

use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::roots::{dual_gram, inner, inner_complex, restricted_roots};
use super::weyl::WeylGroup;
use crate::error::{Error, Result};
use crate::nupoly::NuPolynomial;
use crate::scalar::{self, Gaussian, Rational};

/// `ν ∈ 𝔞*_ℂ`, stored by its values `ν(h_i)` on the Cartan basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectralParameter {
    /// Indeterminates `ν_1, …, ν_r`.
    Formal(usize),
    Numeric(Vec<Gaussian>),
}

impl SpectralParameter {
    pub fn rank(&self) -> usize {
        match self {
            SpectralParameter::Formal(r) => *r,
            SpectralParameter::Numeric(v) => v.len(),
        }
    }

    /// Parses `formal` or a comma-separated list of Gaussian literals.
    pub fn parse(s: &str, rank: usize) -> Result<Self> {
        if s.trim() == "formal" {
            return Ok(SpectralParameter::Formal(rank));
        }
        let vals = s
            .split(',')
            .map(scalar::parse_gaussian)
            .collect::<Result<Vec<_>>>()?;
        if vals.len() != rank {
            return Err(Error::Dimension {
                expected: rank,
                got: vals.len(),
            });
        }
        Ok(SpectralParameter::Numeric(vals))
    }

    pub fn numeric(&self) -> Result<&[Gaussian]> {
        match self {
            SpectralParameter::Numeric(v) => Ok(v),
            SpectralParameter::Formal(_) => Err(Error::NotNumeric),
        }
    }

    /// Coordinates as polynomials: variables when formal, constants when numeric.
    pub fn coordinates(&self) -> Vec<NuPolynomial> {
        match self {
            SpectralParameter::Formal(r) => (0..*r).map(|i| NuPolynomial::var(*r, i)).collect(),
            SpectralParameter::Numeric(v) => v
                .iter()
                .map(|c| NuPolynomial::constant(v.len(), c.clone()))
                .collect(),
        }
    }

    pub fn real_part(&self) -> Result<Vec<Rational>> {
        Ok(self.numeric()?.iter().map(|z| z.re.clone()).collect())
    }

    pub fn imag_part(&self) -> Result<Vec<Rational>> {
        Ok(self.numeric()?.iter().map(|z| z.im.clone()).collect())
    }
}

/// `‖ν‖`, kept as its exact square with a symbolic square root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Norm {
    pub squared: Rational,
}

impl Norm {
    pub fn to_f64(&self) -> f64 {
        scalar::to_f64(&self.squared).sqrt()
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sqrt({})", self.squared)
    }
}

/// `‖ν‖² = ⟨Re ν, Re ν⟩ + ⟨Im ν, Im ν⟩` in the Killing-dual inner product.
pub fn astar_norm(alg: &LieAlgebra, nu: &SpectralParameter) -> Result<Norm> {
    let gram = dual_gram(alg);
    let re = nu.real_part()?;
    let im = nu.imag_part()?;
    if re.len() != alg.rank() {
        return Err(Error::Dimension {
            expected: alg.rank(),
            got: re.len(),
        });
    }
    Ok(Norm {
        squared: inner(&gram, &re, &re) + inner(&gram, &im, &im),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Regularity {
    pub regular: bool,
    /// Indices into the Weyl group elements.
    pub stabilizer: Vec<usize>,
}

pub fn is_regular(alg: &LieAlgebra, wg: &WeylGroup, nu: &SpectralParameter) -> Result<Regularity> {
    let v = nu.numeric()?;
    let gram = dual_gram(alg);
    let rd = restricted_roots(alg);
    let regular = rd.positive().iter().all(|a| {
        let a: Vec<Gaussian> = a.iter().cloned().map(Gaussian::from).collect();
        !inner_complex(&gram, v, &a).is_zero()
    });
    let stabilizer = wg.stabilizer(v);
    debug_assert_eq!(regular, stabilizer.len() == 1);
    Ok(Regularity { regular, stabilizer })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::weyl::weyl_group;
    use crate::scalar::{gauss_int, rat};

    #[test]
    fn sl2_norm() {
        let g = LieAlgebra::special_linear(2).unwrap();
        let nu = SpectralParameter::Numeric(vec![gauss_int(0, 2)]);
        // oracle: 1x1 Killing matrix [8] inverted gives 1/8; 2^2 / 8
        assert_eq!(astar_norm(&g, &nu).unwrap().squared, rat(4, 8));
        let zero = SpectralParameter::Numeric(vec![gauss_int(0, 0)]);
        assert_eq!(astar_norm(&g, &zero).unwrap().squared, rat(0, 1));
        for r in 1..5i64 {
            let nu = SpectralParameter::Numeric(vec![gauss_int(0, 2 * r)]);
            assert_eq!(astar_norm(&g, &nu).unwrap().squared, rat(r * r, 2));
        }
        assert_eq!(
            astar_norm(&g, &SpectralParameter::Formal(1)),
            Err(Error::NotNumeric)
        );
    }

    #[test]
    fn regularity() {
        let g = LieAlgebra::special_linear(2).unwrap();
        let w = weyl_group(&g);
        let r = is_regular(&g, &w, &SpectralParameter::Numeric(vec![gauss_int(0, 1)])).unwrap();
        assert!(r.regular);
        assert_eq!(r.stabilizer, vec![0]);

        let g3 = LieAlgebra::special_linear(3).unwrap();
        let w3 = weyl_group(&g3);
        // ⟨ν, α2⟩ = 0: with G = B⁻¹ that means ν ∝ values of the ω1 coweight direction, ν = i(1, 0)
        let nu = SpectralParameter::Numeric(vec![gauss_int(0, 1), gauss_int(0, 0)]);
        let r = is_regular(&g3, &w3, &nu).unwrap();
        assert!(!r.regular);
        assert_eq!(r.stabilizer.len(), 2);
        let s = r.stabilizer[1];
        // the nontrivial stabilizer element is s_{α2}
        let rd = restricted_roots(&g3);
        let a2 = &rd.roots[rd.simple_system[1]];
        let minus: Vec<Rational> = a2.iter().map(|v| -v).collect();
        assert_eq!(w3.apply(s, a2), minus);

        let zero = SpectralParameter::Numeric(vec![gauss_int(0, 0); 2]);
        let r = is_regular(&g3, &w3, &zero).unwrap();
        assert!(!r.regular);
        assert_eq!(r.stabilizer.len(), 6);
    }

    #[test]
    fn parse() {
        assert_eq!(
            SpectralParameter::parse("formal", 2).unwrap(),
            SpectralParameter::Formal(2)
        );
        assert_eq!(
            SpectralParameter::parse("2i, 1", 2).unwrap(),
            SpectralParameter::Numeric(vec![gauss_int(0, 2), gauss_int(1, 0)])
        );
        assert!(SpectralParameter::parse("2i", 2).is_err());
    }
}
