//! Acceptance criteria. Runs without the libtest harness so every criterion
//! prints one PASS/FAIL line; the process fails if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cartan_lift::context::Context;
use cartan_lift::hc::{self, construct_annihilator, SpanVerdict};
use cartan_lift::lie::inner_complex;
use cartan_lift::model::{self, TrigPolynomial};
use cartan_lift::scalar::{self, gauss, gauss_int, int, rat, Gaussian};
use cartan_lift::uea::{casimir, gelfand_invariant, Word};
use cartan_lift::{NuPolynomial, UeaElement};
use common::{el, random_element, random_word};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Option<u64>);

fn ensure(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

/// `4C` in the `(𝔫, 𝔞, 𝔨)` order equals `H² − 2H + 4X₊² − 4X₊W`.
fn criterion_1() -> Check {
    let ctx = Context::sl(2).map_err(|e| e.to_string())?;
    let b = &ctx.b;
    let expected = el(b, &[(&["H", "H"], 1), (&["H"], -2), (&["X+", "X+"], 4), (&["X+", "W"], -4)]);
    // Oracle: write X₋ = X₊ − W and reduce the raw words by random rewriting.
    let x = b.letter_by_label("X+").unwrap();
    let h = b.letter_by_label("H").unwrap();
    let w = b.letter_by_label("W").unwrap();
    let raw: Vec<(Word, i64)> = vec![
        (vec![h, h], 1),
        (vec![x, x], 2),
        (vec![x, w], -2),
        (vec![x, x], 2),
        (vec![w, x], -2),
    ];
    let mut lin = cartan_lift::uea::Linear::new();
    for (wd, c) in raw {
        *lin.entry(wd).or_insert_with(|| int(0)) += int(c);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let oracle = UeaElement::from_linear(b, &b.reduce_with_strategy(&lin, |n| rng.gen_range(0..n)));
    ensure(oracle == expected, format!("rewrite oracle gave {oracle}"))?;
    let engine = casimir(&ctx).four_c.change_order(b).map_err(|e| e.to_string())?;
    ensure(engine == expected, format!("engine gave {engine}"))?;
    Ok(format!("4C = {engine}"))
}

/// `χ_ν(C)` at `ν(H) = 2ir` is `−1/4 − r²` with `C = 4C/4`.
fn criterion_2() -> Check {
    let ctx = Context::sl(2).unwrap();
    let c = casimir(&ctx).laplacian();
    let p = hc::hc_image(&ctx, &c).map_err(|e| e.to_string())?;
    let r = NuPolynomial::var(1, 0);
    let chi_r = p.compose(&[r.scale(&gauss_int(0, 2))]);
    let expected = &(&r * &r).scale(&gauss_int(-1, 0)) - &NuPolynomial::rational(1, rat(1, 4));
    ensure(chi_r == expected, format!("χ(r) = {chi_r}"))?;
    // Oracle: 4C acts by 8(⟨ν,ν⟩ − ⟨ρ,ρ⟩) on the Killing-dual form.
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let nu = vec![gauss(rat(rng.gen_range(-20..20), 7), rat(rng.gen_range(-20..20), 5))];
        let rho: Vec<Gaussian> = ctx.roots.rho.iter().map(|v| Gaussian::from(v.clone())).collect();
        let want = (inner_complex(&ctx.gram, &nu, &nu) - inner_complex(&ctx.gram, &rho, &rho)) * Gaussian::from(int(2));
        ensure(p.evaluate(&nu) == want, "quadratic-form oracle disagrees")?;
    }
    Ok(format!("χ = {}", chi_r.display_with(&["r".to_string()])))
}

/// `H_part = 2ν(H)·H`, `J = H² + 4X₊²`, the normalized form, and top cancellation.
fn criterion_3() -> Check {
    let ctx = Context::sl(2).unwrap();
    let a = construct_annihilator(&ctx, &casimir(&ctx).four_c).map_err(|e| e.to_string())?;
    let two_nu = NuPolynomial::var(1, 0).scale(&gauss_int(2, 0));
    ensure(a.h_part == vec![two_nu], format!("H_part = {:?}", a.h_part))?;
    let j = el(&ctx.b, &[(&["H", "H"], 1), (&["X+", "X+"], 4)]);
    ensure(a.j == j, format!("J = {}", a.j))?;
    let shown = a.normalized_display().unwrap_or_default();
    ensure(shown == "H + (H²+4X₊²)/(4i r)", format!("display {shown:?}"))?;
    ensure(a.certificates.top_cancel, "top_cancel false")?;
    ensure(a.certificates.all(), format!("certificate {:?} false", a.certificates.first_failure()))?;
    Ok(shown)
}

/// `Ω(φ₀ ⊗ δ) = 0` on every test mode `|m| ≤ 16`; `H` alone does not annihilate.
fn criterion_4() -> Check {
    let ctx = Context::sl(2).unwrap();
    let a = construct_annihilator(&ctx, &casimir(&ctx).four_c).map_err(|e| e.to_string())?;
    let rep = model::apply_annihilator(&a, 16).map_err(|e| e.to_string())?;
    ensure(rep.identically_zero, format!("max residual {}", rep.max_residual))?;
    ensure(rep.modes.len() == 33, format!("{} modes tested", rep.modes.len()))?;
    let h = UeaElement::letter_by_label(&ctx.b, "H").unwrap();
    let control = model::residual_report(&h, 16).map_err(|e| e.to_string())?;
    ensure(!control.identically_zero, "control H annihilates")?;
    Ok(format!("{} modes exact zero, control residual {}", rep.modes.len(), control.max_residual))
}

/// `sl₃`: Casimir and the cubic invariant certify; the span is `𝔞` at regular `ν̃`.
fn criterion_5() -> Check {
    let ctx = Context::sl(3).unwrap();
    let c2 = casimir(&ctx).four_c;
    let c3 = gelfand_invariant(&ctx, 3).map_err(|e| e.to_string())?;
    let mut ps = Vec::new();
    for (name, z) in [("casimir", &c2), ("gelfand:3", &c3)] {
        let a = construct_annihilator(&ctx, z).map_err(|e| format!("{name}: {e}"))?;
        ensure(a.certificates.all(), format!("{name}: flag false"))?;
        ps.push(a.p);
    }
    let nu = [gauss_int(0, 1), gauss_int(0, 2)];
    let s = hc::cartan_span(&ctx, &ps, &nu).map_err(|e| e.to_string())?;
    ensure(s.regular && s.dim == 2 && s.verdict == SpanVerdict::FullCartan, format!("span {s:?}"))?;
    Ok("six flags on both, dim S = 2".into())
}

/// W-invariance and multiplicativity of the Harish-Chandra image.
fn criterion_6() -> Check {
    for n in [2, 3] {
        let ctx = Context::sl(n).unwrap();
        let c = casimir(&ctx).four_c;
        let c2 = &c * &c;
        let p = hc::hc_image(&ctx, &c).map_err(|e| e.to_string())?;
        let p2 = hc::hc_image(&ctx, &c2).map_err(|e| e.to_string())?;
        ensure(ctx.weyl.invariance_failure(&p).is_none(), format!("sl{n}: P(C) not invariant"))?;
        ensure(ctx.weyl.invariance_failure(&p2).is_none(), format!("sl{n}: P(C²) not invariant"))?;
        ensure(p2 == &p * &p, format!("sl{n}: P(C²) ≠ P(C)²"))?;
        if n == 3 {
            let g = gelfand_invariant(&ctx, 3).map_err(|e| e.to_string())?;
            let pg = hc::hc_image(&ctx, &g).map_err(|e| e.to_string())?;
            let pcg = hc::hc_image(&ctx, &(&c * &g)).map_err(|e| e.to_string())?;
            ensure(ctx.weyl.invariance_failure(&pg).is_none(), "sl3: P(gelfand 3) not invariant")?;
            ensure(pcg == &p * &pg, "sl3: P(C·Z₃) ≠ P(C)P(Z₃)")?;
        }
    }
    Ok("sl2, sl3".into())
}

/// The model action against finite differences of the induced picture.
fn criterion_7() -> Check {
    let nu = gauss(rat(1, 3), rat(3, 2));
    let probes = model::act_oracle(&nu, 12).map_err(|e| e.to_string())?;
    let worst = probes.iter().map(|p| p.rel_error).fold(0.0, f64::max);
    ensure(probes.len() == 48, "probe count")?;
    ensure(worst <= 1e-5, format!("max relative error {worst:.3e}"))?;
    let formal = NuPolynomial::var(1, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let f = TrigPolynomial::from_gaussian(
            1,
            (0..4).map(|_| (rng.gen_range(-5..=5), gauss_int(rng.gen_range(-4..=4), rng.gen_range(-4..=4)))),
        );
        let bad = model::representation_failures(&f, &formal);
        ensure(bad.is_empty(), format!("bracket fails on {bad:?}"))?;
    }
    Ok(format!("48 probes, max relative error {worst:.2e}"))
}

/// Confluence, associativity and the filtration of the PBW engine.
fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let ctx3 = Context::sl(3).unwrap();
    let ctx2 = Context::sl(2).unwrap();
    for case in 0..200 {
        let ctx = if case % 2 == 0 { &ctx2 } else { &ctx3 };
        let order = if case % 4 < 2 { &ctx.pr } else { &ctx.b };
        let mut lin = cartan_lift::uea::Linear::new();
        for _ in 0..3 {
            let w = random_word(&mut rng, order.len(), 5);
            *lin.entry(w).or_insert_with(|| int(0)) += rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        }
        lin.retain(|_, c| *c != int(0));
        let a = order.reduce_with_strategy(&lin, |n| rng.gen_range(0..n));
        let b = order.reduce_with_strategy(&lin, |_| 0);
        ensure(a == b, format!("case {case}: two strategies disagree"))?;
        let mut direct = cartan_lift::uea::Linear::new();
        for (w, c) in &lin {
            for (v, d) in order.normal_form_word(w) {
                *direct.entry(v).or_insert_with(|| int(0)) += c * d;
            }
        }
        direct.retain(|_, c| *c != int(0));
        ensure(a == direct, format!("case {case}: memoized insertion disagrees"))?;
    }
    for case in 0..100 {
        let ctx = if case % 2 == 0 { &ctx2 } else { &ctx3 };
        let order = if case % 3 == 0 { &ctx.b } else { &ctx.pr };
        let x = random_element(&mut rng, ctx, order, 3, 3);
        let y = random_element(&mut rng, ctx, order, 3, 3);
        let z = random_element(&mut rng, ctx, order, 3, 2);
        ensure(&(&x * &y) * &z == &x * &(&y * &z), format!("case {case}: associativity"))?;
        let xy = &x * &y;
        if !x.is_zero() && !y.is_zero() {
            ensure(xy.degree() <= x.degree() + y.degree(), format!("case {case}: degree grew"))?;
            let comm = x.commutator(&y).unwrap();
            ensure(
                comm.is_zero() || comm.degree() < x.degree() + y.degree(),
                format!("case {case}: gr U is not commutative"),
            )?;
        }
    }
    Ok("200 confluence, 100 associativity/filtration cases".into())
}

/// Fejér square roots: exact unit mass, nonnegative, defect decreasing in `j`.
fn criterion_9() -> Check {
    let mut defects = Vec::new();
    for j in [4usize, 8, 16] {
        let row = model::fejer_row(j).map_err(|e| e.to_string())?;
        ensure(row.mass == "1/1", format!("j={j}: mass {}", row.mass))?;
        ensure(row.nonnegative, format!("j={j}: negative value"))?;
        let f = model::fejer_sqrt(j).map_err(|e| e.to_string())?;
        // Oracle: quadrature of |f|² on a grid finer than its bandwidth.
        let pts = 8 * j * j;
        let mean = (0..pts)
            .map(|k| {
                let t = std::f64::consts::PI * k as f64 / pts as f64;
                f.evaluate(t, &[Complex::new(0.0, 0.0)]).norm_sqr()
            })
            .sum::<f64>()
            / pts as f64;
        ensure((mean - 1.0).abs() < 1e-9, format!("j={j}: quadrature mass {mean}"))?;
        defects.push(scalar::parse_rational(&row.first_mode_defect).unwrap());
    }
    ensure(defects.windows(2).all(|w| w[1] < w[0]), "defect not decreasing")?;
    let shown: Vec<String> = defects.iter().map(scalar::format_rational).collect();
    Ok(format!("defects {}", shown.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("normal form of 4C in the (n,a,k) order", criterion_1, Some(1)),
        ("infinitesimal character of C", criterion_2, None),
        ("sl2 annihilating pair", criterion_3, None),
        ("annihilation of phi0 x delta, N=16", criterion_4, Some(30)),
        ("sl3 certificates and Cartan span", criterion_5, Some(60)),
        ("Harish-Chandra image properties", criterion_6, None),
        ("model action finite-difference oracle", criterion_7, None),
        ("PBW confluence, associativity, filtration", criterion_8, None),
        ("Fejer approximate identity", criterion_9, None),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(s)) if took > Duration::from_secs(*s) => Err(format!("took {took:.2?}, limit {s} s")),
            (o, _) => o,
        };
        let limit = limit.map(|s| format!(", limit {s} s")).unwrap_or_default();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({took:.2?}{limit}): {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({took:.2?}{limit}): {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
