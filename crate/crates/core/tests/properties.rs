mod common;

use std::sync::OnceLock;

use cartan_lift::context::Context;
use cartan_lift::hc;
use cartan_lift::json;
use cartan_lift::model::{self, Functional, TrigPolynomial};
use cartan_lift::scalar::{gauss_int, int, rat, Gaussian, Rational};
use cartan_lift::uea::{casimir, coproduct, counit, gelfand_invariant, Linear, Part};
use cartan_lift::{NuPolynomial, UeaElement};
use common::{random_element, random_word};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sl2() -> &'static Context {
    static C: OnceLock<Context> = OnceLock::new();
    C.get_or_init(|| Context::sl(2).unwrap())
}

fn sl3() -> &'static Context {
    static C: OnceLock<Context> = OnceLock::new();
    C.get_or_init(|| Context::sl(3).unwrap())
}

fn ctx_for(n: usize) -> &'static Context {
    if n == 2 {
        sl2()
    } else {
        sl3()
    }
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_vector(rng: &mut impl Rng, dim: usize) -> Vec<Rational> {
    (0..dim).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect()
}

fn random_trig(rng: &mut impl Rng, nvars: usize) -> TrigPolynomial {
    TrigPolynomial::from_gaussian(
        nvars,
        (0..rng.gen_range(1..5)).map(|_| (rng.gen_range(-4..=4), gauss_int(rng.gen_range(-5..=5), rng.gen_range(-5..=5)))),
    )
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rewriting_is_confluent(seed in any::<u64>(), n in 2usize..=3, b_order in any::<bool>()) {
        let ctx = ctx_for(n);
        let order = if b_order { &ctx.b } else { &ctx.pr };
        let mut r = rng(seed);
        let mut lin = Linear::new();
        for _ in 0..3 {
            *lin.entry(random_word(&mut r, order.len(), 5)).or_insert_with(|| int(0)) += int(r.gen_range(-4..=4));
        }
        lin.retain(|_, c| *c != int(0));
        let a = order.reduce_with_strategy(&lin, |k| r.gen_range(0..k));
        let b = order.reduce_with_strategy(&lin, |k| k - 1);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn multiplication_is_associative_and_filtered(seed in any::<u64>(), n in 2usize..=3) {
        let ctx = ctx_for(n);
        let mut r = rng(seed);
        let x = random_element(&mut r, ctx, &ctx.pr, 3, 3);
        let y = random_element(&mut r, ctx, &ctx.pr, 3, 3);
        let z = random_element(&mut r, ctx, &ctx.pr, 2, 2);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() && !y.is_zero() {
            prop_assert!((&x * &y).degree() <= x.degree() + y.degree());
            let c = x.commutator(&y).unwrap();
            prop_assert!(c.is_zero() || c.degree() < x.degree() + y.degree());
        }
    }

    #[test]
    fn order_change_round_trips(seed in any::<u64>(), n in 2usize..=3) {
        let ctx = ctx_for(n);
        let mut r = rng(seed);
        let x = random_element(&mut r, ctx, &ctx.pr, 4, 4);
        let xb = x.change_order(&ctx.b).unwrap();
        prop_assert_eq!(xb.change_order(&ctx.pr).unwrap(), x.clone());
        // base change is an algebra map
        let y = random_element(&mut r, ctx, &ctx.pr, 3, 2);
        prop_assert_eq!((&x * &y).change_order(&ctx.b).unwrap(), &xb * &y.change_order(&ctx.b).unwrap());
    }

    #[test]
    fn translations_compose(seed in any::<u64>(), n in 2usize..=3) {
        let ctx = ctx_for(n);
        let mut r = rng(seed);
        let rk = ctx.rank();
        let u = random_element(&mut r, ctx, &ctx.b, 5, 4)
            .filter_terms(|w| w.iter().all(|&l| matches!(ctx.b.letter(l).part, Part::Cartan | Part::PositiveNilpotent)));
        let lam: Vec<NuPolynomial> = (0..rk).map(|_| NuPolynomial::constant(rk, gauss_int(r.gen_range(-3..=3), r.gen_range(-3..=3)))).collect();
        let mu: Vec<NuPolynomial> = (0..rk).map(|i| NuPolynomial::var(rk, i)).collect();
        let sum: Vec<NuPolynomial> = lam.iter().zip(&mu).map(|(a, b)| a + b).collect();
        let lhs = u.tau_translate(&mu).unwrap().tau_translate(&lam).unwrap();
        prop_assert_eq!(lhs, u.tau_translate(&sum).unwrap());
        let zero = vec![NuPolynomial::zero(rk); rk];
        prop_assert_eq!(u.tau_translate(&zero).unwrap(), u);
    }

    #[test]
    fn counit_and_coproduct(seed in any::<u64>(), n in 2usize..=3) {
        let ctx = ctx_for(n);
        let mut r = rng(seed);
        let u = random_element(&mut r, ctx, &ctx.pr, 3, 3);
        let v = random_element(&mut r, ctx, &ctx.pr, 2, 2);
        let du = coproduct(&u);
        prop_assert_eq!(du.counit_left(), u.clone());
        prop_assert_eq!(du.counit_right(), u.clone());
        prop_assert_eq!(coproduct(&(&u * &v)), du.multiply(&coproduct(&v)).unwrap());
        prop_assert_eq!(counit(&(&u * &v)), &counit(&u) * &counit(&v));
    }

    #[test]
    fn transpose_is_an_anti_involution(seed in any::<u64>(), n in 2usize..=3) {
        let ctx = ctx_for(n);
        let mut r = rng(seed);
        let x = random_element(&mut r, ctx, &ctx.b, 3, 3);
        let y = random_element(&mut r, ctx, &ctx.b, 3, 2);
        prop_assert_eq!(x.transpose().transpose(), x.clone());
        prop_assert_eq!((&x * &y).transpose(), &y.transpose() * &x.transpose());
    }

    #[test]
    fn killing_form_is_invariant_and_jacobi_holds(seed in any::<u64>(), n in 2usize..=4) {
        let alg = cartan_lift::LieAlgebra::special_linear(n).unwrap();
        let mut r = rng(seed);
        let d = alg.dim();
        for _ in 0..5 {
            let (x, y, z) = (random_vector(&mut r, d), random_vector(&mut r, d), random_vector(&mut r, d));
            prop_assert_eq!(alg.killing_form(&alg.bracket(&x, &y), &z), alg.killing_form(&x, &alg.bracket(&y, &z)));
            let jac = add(
                &add(&alg.bracket(&x, &alg.bracket(&y, &z)), &alg.bracket(&y, &alg.bracket(&z, &x))),
                &alg.bracket(&z, &alg.bracket(&x, &y)),
            );
            prop_assert!(jac.iter().all(|c| *c == int(0)));
            prop_assert_eq!(alg.theta(&alg.theta(&x)), x.clone());
            prop_assert_eq!(alg.theta(&alg.bracket(&x, &y)), alg.bracket(&alg.theta(&x), &alg.theta(&y)));
        }
    }

    #[test]
    fn iwasawa_parts_reassemble(seed in any::<u64>(), n in 2usize..=4) {
        let alg = cartan_lift::LieAlgebra::special_linear(n).unwrap();
        let mut r = rng(seed);
        let x = random_vector(&mut r, alg.dim());
        let p = alg.iwasawa_components(&x);
        prop_assert_eq!(add(&add(&p.n, &p.a), &p.k), x);
        prop_assert_eq!(alg.theta(&p.k), p.k.clone());
        for (idx, b) in alg.basis().iter().enumerate() {
            use cartan_lift::lie::PartTag;
            if !matches!(b.tag, PartTag::PositiveNilpotent(_)) {
                prop_assert_eq!(&p.n[idx], &int(0));
            }
            if !matches!(b.tag, PartTag::Cartan(_)) {
                prop_assert_eq!(&p.a[idx], &int(0));
            }
        }
    }

    #[test]
    fn model_action_is_a_representation(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_trig(&mut r, 1);
        let nu = NuPolynomial::var(1, 0);
        prop_assert!(model::representation_failures(&f, &nu).is_empty());
        let ctx = sl2();
        let x = random_element(&mut r, ctx, &ctx.b, 2, 2);
        let y = random_element(&mut r, ctx, &ctx.b, 2, 2);
        let lhs = model::act_element(&(&x * &y), &f, &nu).unwrap();
        let rhs = model::act_element(&x, &model::act_element(&y, &f, &nu).unwrap(), &nu).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dual_action_matches_transpose(seed in any::<u64>()) {
        let ctx = sl2();
        let mut r = rng(seed);
        let u = random_element(&mut r, ctx, &ctx.b, 3, 3);
        let f = random_trig(&mut r, 1);
        let nu = NuPolynomial::var(1, 0);
        let lhs = model::dual_act(&u, &Functional::Delta, &nu, &f).unwrap();
        let rhs = model::act_element(&u.transpose(), &f, &nu).unwrap().value_at_identity();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn json_round_trips(seed in any::<u64>(), n in 2usize..=3, b_order in any::<bool>()) {
        let ctx = ctx_for(n);
        let order = if b_order { &ctx.b } else { &ctx.pr };
        let mut r = rng(seed);
        let u = random_element(&mut r, ctx, order, 4, 3);
        let s = json::to_string(&json::uea_to_json(&u));
        prop_assert_eq!(json::parse_uea(ctx, &s).unwrap(), u);
        let f = random_trig(&mut r, 1);
        prop_assert_eq!(json::trig_from_json(&json::trig_to_json(&f), 1).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn hc_images_are_weyl_invariant(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3) {
        let ctx = sl3();
        let c2 = casimir(ctx).four_c;
        let c3 = gelfand_invariant(ctx, 3).unwrap();
        let one = UeaElement::one(&ctx.pr);
        let z = &(&c2.scale_rational(&int(a)) + &c3.scale_rational(&int(b))) + &one.scale_rational(&int(c));
        let p = hc::hc_image(ctx, &z).unwrap();
        prop_assert!(ctx.weyl.invariance_failure(&p).is_none());
        for w in 0..ctx.weyl.order() {
            prop_assert_eq!(ctx.weyl.act_on_polynomial(w, &p), p.clone());
        }
    }

    #[test]
    fn cartan_span_matches_fixed_subspace(re1 in -4i64..=4, im1 in -4i64..=4, re2 in -4i64..=4, im2 in -4i64..=4, wall in 0usize..4) {
        let ctx = sl3();
        let v1 = gauss_int(re1, im1);
        let mut v2 = gauss_int(re2, im2);
        let nu: Vec<Gaussian> = match wall {
            0 => vec![v1, v2],
            1 => vec![Gaussian::from(int(0)), v2],
            2 => { v2 = -v1.clone(); vec![v1, v2] }
            _ => vec![v1, Gaussian::from(int(0))],
        };
        let ps: Vec<NuPolynomial> = [2, 3]
            .iter()
            .map(|&k| hc::hc_image(ctx, &gelfand_invariant(ctx, k).unwrap()).unwrap())
            .collect();
        let s = hc::cartan_span(ctx, &ps, &nu).unwrap();
        prop_assert_eq!(s.dim, s.fixed_dim);
        prop_assert_ne!(s.verdict, hc::SpanVerdict::Mismatch);
        prop_assert_eq!(s.regular, s.dim == 2);
    }
}
