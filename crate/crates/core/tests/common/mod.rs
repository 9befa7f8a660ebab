#![allow(dead_code)]

use std::sync::Arc;

use cartan_lift::context::Context;
use cartan_lift::scalar::{gauss_int, int};
use cartan_lift::uea::{Letter, PbwOrder, Word};
use cartan_lift::{NuPolynomial, UeaElement};
use rand::Rng;

/// Element from `(labels, integer coefficient)` pairs; words need not be sorted.
pub fn el(order: &Arc<PbwOrder>, terms: &[(&[&str], i64)]) -> UeaElement {
    UeaElement::normal_form(
        order,
        terms.iter().map(|(w, c)| {
            (
                w.iter().map(|l| order.letter_by_label(l).unwrap()).collect::<Word>(),
                NuPolynomial::rational(order.rank(), int(*c)),
            )
        }),
    )
    .unwrap()
}

pub fn random_word(rng: &mut impl Rng, letters: usize, max_len: usize) -> Vec<Letter> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_range(0..letters) as Letter).collect()
}

/// Random element with small Gaussian-integer coefficients, optionally `ν`-dependent.
pub fn random_element(rng: &mut impl Rng, ctx: &Context, order: &Arc<PbwOrder>, terms: usize, max_len: usize) -> UeaElement {
    let r = ctx.rank();
    let expr: Vec<(Word, NuPolynomial)> = (0..terms)
        .map(|_| {
            let w = random_word(rng, order.len(), max_len);
            let c = gauss_int(rng.gen_range(-3..=3), rng.gen_range(-2..=2));
            let mut p = NuPolynomial::constant(r, c);
            if rng.gen_bool(0.3) {
                p = &p * &NuPolynomial::var(r, rng.gen_range(0..r));
            }
            (w, p)
        })
        .collect();
    UeaElement::normal_form(order, expr).unwrap()
}
