//! Center elements of `U(𝔤_ℂ)`: Casimir, Gelfand invariants, exact kernel
//! computation, and the centrality test.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::element::UeaElement;
use super::order::{Letter, Word};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::lie::Family;
use crate::linalg::{self, SparseEchelon};
use crate::scalar::{int, Rational};

/// Largest `dim U^{≤d}` accepted by [`center_basis`].
pub const CENTER_SOLVE_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Casimir {
    /// `Σ x_i x^i` over a Killing-dual basis pair.
    pub dual_basis: UeaElement,
    /// `8 ·` the dual-basis Casimir; on `sl₂` this is `H² + 2X₊X₋ + 2X₋X₊`,
    /// i.e. four times the Laplacian-normalized Casimir.
    pub four_c: UeaElement,
}

impl Casimir {
    /// The Laplacian-normalized Casimir `C = four_c / 4`.
    pub fn laplacian(&self) -> UeaElement {
        self.four_c.scale_rational(&Rational::new(1.into(), 4.into()))
    }
}

pub fn casimir(ctx: &Context) -> Casimir {
    let alg = &ctx.algebra;
    let binv = linalg::inverse(&alg.killing_matrix().to_vec()).expect("Killing form is nondegenerate");
    let order = &ctx.pr;
    let vecs: Vec<UeaElement> = (0..alg.dim()).map(|i| UeaElement::basis_vector(order, i)).collect();
    let mut c = UeaElement::zero(order);
    for i in 0..alg.dim() {
        for j in 0..alg.dim() {
            if binv[i][j].is_zero() {
                continue;
            }
            c = &c + &(&vecs[i] * &vecs[j]).scale_rational(&binv[i][j]);
        }
    }
    let four_c = c.scale_rational(&int(8));
    Casimir {
        dual_basis: c,
        four_c,
    }
}

/// Result of [`verify_central`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Centrality {
    pub central: bool,
    /// Standard basis index of the first letter with `[z, x] ≠ 0`.
    pub witness: Option<usize>,
    pub witness_label: Option<String>,
}

pub fn verify_central(ctx: &Context, z: &UeaElement) -> Result<Centrality> {
    let alg = &ctx.algebra;
    for idx in 0..alg.dim() {
        let x = UeaElement::basis_vector(z.order(), idx);
        if !z.commutator(&x)?.is_zero() {
            return Ok(Centrality {
                central: false,
                witness: Some(idx),
                witness_label: Some(alg.basis()[idx].label.clone()),
            });
        }
    }
    Ok(Centrality {
        central: true,
        witness: None,
        witness_label: None,
    })
}

pub fn require_central(ctx: &Context, z: &UeaElement) -> Result<()> {
    let c = verify_central(ctx, z)?;
    match c.witness_label {
        None => Ok(()),
        Some(witness) => Err(Error::NotCentral { witness }),
    }
}

fn binomial(n: usize, k: usize) -> usize {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}

/// Sorted words of length `1..=d` over `letters` with total weight zero.
fn weight_zero_words(ctx: &Context, d: usize) -> Vec<Word> {
    let order = &ctx.pr;
    let n = order.len() as Letter;
    let r = ctx.rank();
    let mut out = Vec::new();
    let mut stack: Vec<(Word, Vec<Rational>)> = vec![(Vec::new(), vec![Rational::zero(); r])];
    while let Some((w, wt)) = stack.pop() {
        if !w.is_empty() && wt.iter().all(Zero::is_zero) {
            out.push(w.clone());
        }
        if w.len() == d {
            continue;
        }
        let start = w.last().copied().unwrap_or(0);
        for l in start..n {
            let lw = order.letter(l).weight.as_ref().expect("pr letters are weight vectors");
            let mut w2 = w.clone();
            w2.push(l);
            let wt2: Vec<Rational> = wt.iter().zip(lw).map(|(a, b)| a + b).collect();
            stack.push((w2, wt2));
        }
    }
    // highest degree first so kernel vectors are normalized on top-degree words
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

/// Basis of `{z ∈ U(𝔤)^{≤d} : [z, 𝔤] = 0}` modulo constants, in the pr order.
pub fn center_basis(ctx: &Context, d: usize) -> Result<Vec<UeaElement>> {
    let dim = ctx.algebra.dim();
    let size = binomial(dim + d, d);
    if size > CENTER_SOLVE_LIMIT {
        return Err(Error::TooLarge {
            size,
            limit: CENTER_SOLVE_LIMIT,
        });
    }
    let order = &ctx.pr;
    // central elements commute with 𝔞, hence are of weight zero
    let domain = weight_zero_words(ctx, d);
    let letters: Vec<UeaElement> = (0..dim).map(|i| UeaElement::basis_vector(order, i)).collect();
    // rows indexed by (letter, output word); columns by domain word
    let mut rows: BTreeMap<(usize, Word), BTreeMap<usize, Rational>> = BTreeMap::new();
    for (col, w) in domain.iter().enumerate() {
        let lin = order.normal_form_word(w);
        let u = UeaElement::from_linear(order, &lin);
        for (i, x) in letters.iter().enumerate() {
            let c = u.commutator(x)?;
            for (ow, coeff) in c.terms() {
                let v = coeff.constant_term().re;
                rows.entry((i, ow.clone())).or_default().insert(col, v);
            }
        }
    }
    let mut ech = SparseEchelon::new();
    for (_, row) in rows {
        ech.push(row);
    }
    let kernel = ech.kernel(domain.len());
    Ok(kernel
        .into_iter()
        .map(|v| {
            let mut z = UeaElement::zero(order);
            for (col, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    z = &z + &UeaElement::from_linear(order, &BTreeMap::from([(domain[col].clone(), c)]));
                }
            }
            z
        })
        .collect())
}

/// `Σ E_{i₁i₂} E_{i₂i₃} ⋯ E_{i_k i₁}` in `U(𝔤𝔩_n)`, projected to `U(𝔰𝔩_n)` by
/// substituting `E_ii = x_ii + Z/n` and keeping the `Z`-free component.
pub fn gelfand_invariant(ctx: &Context, k: usize) -> Result<UeaElement> {
    if k < 2 {
        return Err(Error::InvalidDegree(k));
    }
    let alg = &ctx.algebra;
    match alg.family() {
        Family::SpecialLinear => {}
    }
    let n = alg.matrix_size();
    let order = &ctx.pr;
    // E_ij as elements of U(sl_n); Z-free part of E_ii is e_ii − I/n
    let e = |i: usize, j: usize| -> UeaElement {
        let mut v = vec![Rational::zero(); alg.dim()];
        if i != j {
            let idx = (0..alg.dim())
                .find(|&t| alg.defining_matrix(t)[i][j] == 1)
                .expect("elementary matrix in basis");
            v[idx] = int(1);
        } else {
            // diag(e_ii − I/n) = Σ_k c_k h_k with c_k = Σ_{j ≤ k} d_j
            let nn = Rational::from_integer((n as i64).into());
            let mut partial = Rational::zero();
            for kk in 0..n - 1 {
                let d = if kk == i { int(1) } else { Rational::zero() } - Rational::from_integer(1.into()) / &nn;
                partial += d;
                v[alg.cartan_index(kk)] = partial.clone();
            }
        }
        UeaElement::from_vector(order, &v)
    };
    let gens: Vec<Vec<UeaElement>> = (0..n).map(|i| (0..n).map(|j| e(i, j)).collect()).collect();
    // P = E^(k-1) entrywise in U, then trace(P · E)
    let mut power = gens.clone();
    for _ in 1..k - 1 {
        let mut next = vec![vec![UeaElement::zero(order); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = UeaElement::zero(order);
                for l in 0..n {
                    acc = &acc + &(&power[i][l] * &gens[l][j]);
                }
                next[i][j] = acc;
            }
        }
        power = next;
    }
    let mut c = UeaElement::zero(order);
    for i in 0..n {
        for l in 0..n {
            c = &c + &(&power[i][l] * &gens[l][i]);
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nupoly::NuPolynomial;
    use crate::scalar::rat;

    fn words(ctx: &Context, terms: &[(&[&str], i64)]) -> UeaElement {
        let order = &ctx.pr;
        UeaElement::normal_form(
            order,
            terms.iter().map(|(w, c)| {
                (
                    w.iter().map(|l| order.letter_by_label(l).unwrap()).collect::<Word>(),
                    NuPolynomial::rational(ctx.rank(), int(*c)),
                )
            }),
        )
        .unwrap()
    }

    #[test]
    fn sl2_casimir_normalizations() {
        let ctx = Context::sl(2).unwrap();
        let c = casimir(&ctx);
        let expected = words(&ctx, &[(&["H", "H"], 1), (&["X+", "X-"], 2), (&["X-", "X+"], 2)]);
        assert_eq!(c.four_c, expected);
        assert_eq!(c.dual_basis, expected.scale_rational(&rat(1, 8)));
        assert_eq!(c.four_c.degree(), 2);
        assert!(verify_central(&ctx, &c.dual_basis).unwrap().central);
    }

    #[test]
    fn non_central_witness() {
        let ctx = Context::sl(2).unwrap();
        let h = words(&ctx, &[(&["H"], 1)]);
        let v = verify_central(&ctx, &h).unwrap();
        assert!(!v.central);
        assert_eq!(v.witness_label.as_deref(), Some("X+"));
        assert_eq!(
            require_central(&ctx, &h),
            Err(Error::NotCentral { witness: "X+".into() })
        );
    }

    #[test]
    fn sl3_casimir_commutes_with_every_letter() {
        let ctx = Context::sl(3).unwrap();
        let c = casimir(&ctx);
        for i in 0..8 {
            let x = UeaElement::basis_vector(&ctx.pr, i);
            assert!(c.dual_basis.commutator(&x).unwrap().is_zero());
        }
    }

    #[test]
    fn center_basis_sl2() {
        let ctx = Context::sl(2).unwrap();
        assert!(center_basis(&ctx, 1).unwrap().is_empty());
        let b = center_basis(&ctx, 2).unwrap();
        assert_eq!(b.len(), 1);
        // proportional to C: compare after normalizing the H² coefficient
        let c = casimir(&ctx).four_c;
        let h = ctx.pr.letter_by_label("H").unwrap();
        let lead = b[0].coeff(&[h, h]).constant_term().re;
        assert_eq!(b[0].scale_rational(&(Rational::from_integer(1.into()) / lead)), c);
    }

    #[test]
    fn gelfand_quadratic_is_casimir_multiple() {
        for n in [2, 3] {
            let ctx = Context::sl(n).unwrap();
            let g2 = gelfand_invariant(&ctx, 2).unwrap();
            let c = casimir(&ctx).dual_basis;
            // c_2 = Σ E_ij E_ji restricted to sl_n is the trace-form Casimir, 2n · dual-basis
            assert_eq!(g2, c.scale_rational(&int(2 * n as i64)));
        }
        assert_eq!(
            gelfand_invariant(&Context::sl(2).unwrap(), 1),
            Err(Error::InvalidDegree(1))
        );
    }

    #[test]
    fn guard_rejects_large_requests() {
        let ctx = Context::sl(4).unwrap();
        assert!(matches!(center_basis(&ctx, 5), Err(Error::TooLarge { .. })));
    }
}
