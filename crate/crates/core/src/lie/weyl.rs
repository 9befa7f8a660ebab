use std::collections::HashMap;

use super::algebra::LieAlgebra;
use super::roots::{dual_gram, inner, reflection, restricted_roots};
use crate::linalg::{self, Matrix};
use crate::nupoly::NuPolynomial;
use crate::scalar::{Gaussian, Rational};

/// Weyl group as rational matrices on `𝔞*` (Cartan-value coordinates).
/// `elements[0]` is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylGroup {
    pub elements: Vec<Matrix<Rational>>,
    pub generators: Vec<Matrix<Rational>>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn apply(&self, w: usize, lambda: &[Rational]) -> Vec<Rational> {
        linalg::mat_vec(&self.elements[w], lambda)
    }

    pub fn apply_complex(&self, w: usize, lambda: &[Gaussian]) -> Vec<Gaussian> {
        let m: Matrix<Gaussian> = self.elements[w]
            .iter()
            .map(|r| r.iter().cloned().map(Gaussian::from).collect())
            .collect();
        linalg::mat_vec(&m, lambda)
    }

    /// Indices of elements fixing `lambda`.
    pub fn stabilizer(&self, lambda: &[Gaussian]) -> Vec<usize> {
        (0..self.order())
            .filter(|&w| self.apply_complex(w, lambda) == lambda)
            .collect()
    }

    /// `P ∘ w`, for `P` a polynomial function on `𝔞*`.
    pub fn act_on_polynomial(&self, w: usize, p: &NuPolynomial) -> NuPolynomial {
        p.linear_substitute(&self.elements[w])
    }

    /// Index of the first element under which `p` is not invariant.
    pub fn invariance_failure(&self, p: &NuPolynomial) -> Option<usize> {
        (0..self.order()).find(|&w| &self.act_on_polynomial(w, p) != p)
    }

    /// Dimension of the subspace of `𝔞*` (equivalently `𝔞`) fixed by the
    /// listed elements.
    pub fn fixed_dimension(&self, subgroup: &[usize]) -> usize {
        let r = self.elements[0].len();
        let mut rows: Matrix<Rational> = Vec::new();
        for &w in subgroup {
            for (i, row) in self.elements[w].iter().enumerate() {
                let mut d = row.clone();
                d[i] -= Rational::from_integer(1.into());
                rows.push(d);
            }
        }
        if rows.is_empty() {
            return r;
        }
        r - linalg::rank(&rows)
    }
}

/// Closure of the simple reflections under composition.
pub fn weyl_group(alg: &LieAlgebra) -> WeylGroup {
    let gram = dual_gram(alg);
    let rd = restricted_roots(alg);
    let generators: Vec<Matrix<Rational>> = rd
        .simple_system
        .iter()
        .map(|&k| reflection(&gram, &rd.roots[k]))
        .collect();
    let id = linalg::identity::<Rational>(alg.rank());
    let mut elements = vec![id.clone()];
    let mut seen: HashMap<Matrix<Rational>, usize> = HashMap::from([(id, 0)]);
    let mut frontier = 0;
    while frontier < elements.len() {
        let w = elements[frontier].clone();
        for s in &generators {
            let sw = linalg::mat_mul(s, &w);
            if !seen.contains_key(&sw) {
                seen.insert(sw.clone(), elements.len());
                elements.push(sw);
            }
        }
        frontier += 1;
    }
    WeylGroup {
        elements,
        generators,
    }
}

/// Checks `⟨wλ, wμ⟩ = ⟨λ, μ⟩` on the root set.
pub fn preserves_inner_product(alg: &LieAlgebra, wg: &WeylGroup) -> bool {
    let gram = dual_gram(alg);
    let rd = restricted_roots(alg);
    (0..wg.order()).all(|w| {
        rd.roots.iter().all(|a| {
            rd.roots.iter().all(|b| {
                inner(&gram, &wg.apply(w, a), &wg.apply(w, b)) == inner(&gram, a, b)
            })
        })
    })
}
