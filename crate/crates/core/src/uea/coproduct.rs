use std::collections::BTreeMap;
use std::sync::Arc;

use super::element::UeaElement;
use super::order::{PbwOrder, Word};
use crate::error::Result;
use crate::nupoly::NuPolynomial;

/// Element of `U(𝔤_ℂ) ⊗ U(𝔤_ℂ)` with `ν`-polynomial coefficients, both legs
/// canonical for the same order.
#[derive(Debug, Clone)]
pub struct Tensor {
    order: Arc<PbwOrder>,
    terms: BTreeMap<(Word, Word), NuPolynomial>,
}

impl PartialEq for Tensor {
    fn eq(&self, other: &Self) -> bool {
        self.order.same_as(&other.order) && self.terms == other.terms
    }
}

impl Eq for Tensor {}

impl Tensor {
    pub fn zero(order: &Arc<PbwOrder>) -> Self {
        Tensor {
            order: Arc::clone(order),
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, key: (Word, Word), c: NuPolynomial) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&key) {
            Some(x) => x + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Word, Word), NuPolynomial> {
        &self.terms
    }

    pub fn order(&self) -> &Arc<PbwOrder> {
        &self.order
    }

    /// Explicit pairs `(u′, u″)`; the coefficient is carried by `u″`.
    pub fn pairs(&self) -> Vec<(UeaElement, UeaElement)> {
        let rank = self.order.rank();
        self.terms
            .iter()
            .map(|((a, b), c)| {
                let left = UeaElement::from_sorted_terms(&self.order, [(a.clone(), NuPolynomial::one(rank))])
                    .expect("coproduct words are sorted");
                let right = UeaElement::from_sorted_terms(&self.order, [(b.clone(), c.clone())])
                    .expect("coproduct words are sorted");
                (left, right)
            })
            .collect()
    }

    /// `(ε ⊗ id)`.
    pub fn counit_left(&self) -> UeaElement {
        let mut u = UeaElement::zero(&self.order);
        for ((a, b), c) in &self.terms {
            if a.is_empty() {
                u.add_term(b.clone(), c.clone());
            }
        }
        u
    }

    /// `(id ⊗ ε)`.
    pub fn counit_right(&self) -> UeaElement {
        let mut u = UeaElement::zero(&self.order);
        for ((a, b), c) in &self.terms {
            if b.is_empty() {
                u.add_term(a.clone(), c.clone());
            }
        }
        u
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn multiply(&self, other: &Tensor) -> Result<Tensor> {
        self.order.check_same(&other.order)?;
        let rank = self.order.rank();
        let mut out = Tensor::zero(&self.order);
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let one = NuPolynomial::one(rank);
                let ac = UeaElement::from_sorted_terms(&self.order, [(a.clone(), one.clone())])?
                    .multiply(&UeaElement::from_sorted_terms(&self.order, [(c.clone(), one.clone())])?)?;
                let bd = UeaElement::from_sorted_terms(&self.order, [(b.clone(), one.clone())])?
                    .multiply(&UeaElement::from_sorted_terms(&self.order, [(d.clone(), one)])?)?;
                let coeff = c1 * c2;
                for (w1, x) in ac.terms() {
                    for (w2, y) in bd.terms() {
                        out.add_term((w1.clone(), w2.clone()), &(x * y) * &coeff);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// `Δ(x) = x ⊗ 1 + 1 ⊗ x` on letters, extended multiplicatively. On a sorted
/// word this is the sum over splittings of its positions into two subwords.
pub fn coproduct(u: &UeaElement) -> Tensor {
    let mut t = Tensor::zero(u.order());
    for (w, c) in u.terms() {
        let k = w.len();
        assert!(k < 32, "word too long for subset enumeration");
        for mask in 0u32..(1u32 << k) {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (i, &l) in w.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    left.push(l);
                } else {
                    right.push(l);
                }
            }
            t.add_term((left, right), c.clone());
        }
    }
    t
}

/// Counit: the constant coefficient.
pub fn counit(u: &UeaElement) -> NuPolynomial {
    u.coeff(&[])
}
