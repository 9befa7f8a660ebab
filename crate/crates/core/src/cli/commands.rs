use std::path::Path;

use serde_json::{json, Value};

use super::{ModelCheckKind, OrderArg, VerifyKind};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::hc::{self, b_correction, construct_annihilator, construct_annihilator_unchecked, SpanVerdict};
use crate::json;
use crate::lie::{astar_norm, SpectralParameter};
use crate::model::{self, ModelLetter, TrigPolynomial};
use crate::nupoly::NuPolynomial;
use crate::scalar::{self, Gaussian};
use crate::uea::{casimir, center_basis, gelfand_invariant, verify_central, OrderKind, UeaElement};

type Outcome = Result<(bool, Value)>;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("payloads serialize")
}

fn gaussian_json(z: &Gaussian) -> Value {
    json!({ "re": scalar::format_rational(&z.re), "im": scalar::format_rational(&z.im) })
}

/// `casimir` (as `8 ·` the dual-basis Casimir), `gelfand:<k>` or `solve:<d>`.
pub fn center_element(ctx: &Context, spec: &str) -> Result<UeaElement> {
    if spec == "casimir" {
        return Ok(casimir(ctx).four_c);
    }
    let bad = || Error::Parse(format!("unknown center element {spec:?}"));
    let (kind, arg) = spec.split_once(':').ok_or_else(bad)?;
    let k: usize = arg.trim().parse().map_err(|_| bad())?;
    match kind {
        "gelfand" => gelfand_invariant(ctx, k),
        "solve" => {
            if k <= 1 {
                return Err(Error::DegenerateDegree(k));
            }
            let basis = center_basis(ctx, k)?;
            let top = basis.iter().map(UeaElement::degree).max().unwrap_or(0);
            basis
                .into_iter()
                .find(|z| z.degree() == top && top >= 2)
                .ok_or(Error::DegenerateDegree(top))
        }
        _ => Err(bad()),
    }
}

pub fn annihilator(algebra: &str, center: &str, nu: &str) -> Outcome {
    let ctx = Context::from_name(algebra)?;
    let nu = SpectralParameter::parse(nu, ctx.rank())?;
    let z = center_element(&ctx, center)?;
    let ann = construct_annihilator_unchecked(&ctx, &z)?;
    let names: Vec<String> = (1..=ctx.rank()).map(|i| format!("ν{i}")).collect();
    let mut payload = json!({
        "annihilator": json::annihilator_to_json(&ctx, &ann),
        "display": {
            "H_part": ann.h_part.iter().map(|c| c.display_with(&names)).collect::<Vec<_>>(),
            "J": ann.j.pretty(),
            "P": ann.p.display_with(&names),
        },
    });
    if let SpectralParameter::Numeric(v) = &nu {
        let chi = ann.p.evaluate(v);
        payload["numeric"] = json!({
            "chi": gaussian_json(&chi),
            "norm_squared": scalar::format_rational(&astar_norm(&ctx.algebra, &nu)?.squared),
            "export": ann.numeric_export(&ctx, &nu)?,
        });
    }
    Ok((ann.certificates.all(), payload))
}

pub fn span(algebra: &str, degrees: &[usize], nu: &str) -> Outcome {
    let ctx = Context::from_name(algebra)?;
    let nu = SpectralParameter::parse(nu, ctx.rank())?;
    let v = nu.numeric()?;
    let ps = degrees
        .iter()
        .map(|&k| hc::hc_image(&ctx, &gelfand_invariant(&ctx, k)?))
        .collect::<Result<Vec<_>>>()?;
    let s = hc::cartan_span(&ctx, &ps, v)?;
    let payload = json!({
        "degrees": degrees,
        "dim": s.dim,
        "basis": s.basis.iter().map(|b| b.iter().map(gaussian_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "regular": s.regular,
        "w0_order": s.w0_order,
        "fixed_dim": s.fixed_dim,
        "verdict": s.verdict,
    });
    Ok((s.verdict != SpanVerdict::Mismatch, payload))
}

pub fn model_check(check: ModelCheckKind, n: usize) -> Outcome {
    match check {
        ModelCheckKind::ActOracle => {
            let nu = Gaussian::new(scalar::int(0), scalar::rat(3, 2));
            let probes = model::act_oracle(&nu, 12)?;
            let max = probes.iter().map(|p| p.rel_error).fold(0.0, f64::max);
            let f = TrigPolynomial::from_gaussian(1, [(2, scalar::gauss_int(1, 0)), (-1, scalar::gauss_int(0, 2))]);
            let rep = model::representation_failures(&f, &NuPolynomial::var(1, 0));
            let ok = max <= 1e-5 && rep.is_empty();
            Ok((
                ok,
                json!({
                    "probes": probes.len(),
                    "step": model::FD_STEP,
                    "tolerance": 1e-5,
                    "max_rel_error": max,
                    "representation_failures": rep,
                }),
            ))
        }
        ModelCheckKind::DualDelta => dual_delta(n),
        ModelCheckKind::Annihilation => {
            let ctx = Context::sl(2)?;
            let ann = construct_annihilator(&ctx, &casimir(&ctx).four_c)?;
            let rep = model::apply_annihilator(&ann, n)?;
            let h = UeaElement::letter_by_label(&ctx.b, "H")?;
            let control = model::residual_report(&h, n)?;
            Ok((
                rep.identically_zero && !control.identically_zero,
                json!({
                    "residual": rep,
                    "control_H_alone": {
                        "identically_zero": control.identically_zero,
                        "max_residual": control.max_residual,
                    },
                }),
            ))
        }
        ModelCheckKind::PxSpan => {
            let i = scalar::gauss_int(0, 1);
            let (rank, window) = model::px_span_rank(&i, 4, 4);
            let real = [ModelLetter::H, ModelLetter::XPlus, ModelLetter::XMinus]
                .iter()
                .all(|&x| model::is_real(&model::p_function(x, &i)));
            Ok((
                rank == window && real,
                json!({ "rank": rank, "window": window, "real": real,
                        "p_H": json::trig_to_json(&model::p_function(ModelLetter::H, &i)) }),
            ))
        }
        ModelCheckKind::Fejer => {
            let rows = [4, 8, 16].iter().map(|&j| model::fejer_row(j)).collect::<Result<Vec<_>>>()?;
            let defects = rows
                .iter()
                .map(|r| scalar::parse_rational(&r.first_mode_defect))
                .collect::<Result<Vec<_>>>()?;
            let mass_ok = rows.iter().all(|r| r.mass == "1/1" && r.nonnegative);
            let decreasing = defects.windows(2).all(|w| w[1] < w[0]);
            Ok((mass_ok && decreasing, json!({ "rows": rows, "mass_exact": mass_ok, "decreasing": decreasing })))
        }
    }
}

/// `(I′(X)δ)(f) = −δ(I(X)f)` on `|m| ≤ n`, and `I′(X)δ = −(ν+ρ)(X)δ` for `X ∈ {H, X₊}`.
fn dual_delta(n: usize) -> Outcome {
    let ctx = Context::sl(2)?;
    let nu_h = NuPolynomial::var(1, 0);
    let shift = &nu_h + &NuPolynomial::one(1);
    let mut consistency = true;
    let mut lemma = true;
    for label in ["X+", "H", "W"] {
        let u = UeaElement::letter_by_label(&ctx.b, label)?;
        let x: ModelLetter = label.parse()?;
        for m in -(n as i64)..=n as i64 {
            let f = TrigPolynomial::mode(1, m);
            let lhs = model::dual_act(&u, &model::Functional::Delta, &nu_h, &f)?;
            consistency &= lhs == -model::act(x, &f, &nu_h).value_at_identity();
            let expected = match x {
                ModelLetter::H => Some(-&shift),
                ModelLetter::XPlus => Some(NuPolynomial::zero(1)),
                _ => None,
            };
            if let Some(e) = expected {
                lemma &= lhs == e;
            }
        }
    }
    let xm = UeaElement::letter_by_label(&ctx.pr, "X-")?;
    for m in -(n as i64)..=n as i64 {
        let f = TrigPolynomial::mode(1, m);
        let lhs = model::dual_act(&xm, &model::Functional::Delta, &nu_h, &f)?;
        consistency &= lhs == -model::act(ModelLetter::XMinus, &f, &nu_h).value_at_identity();
    }
    Ok((consistency && lemma, json!({ "modes": n, "consistency": consistency, "lemma": lemma })))
}

pub fn verify(algebra: &str, input: &Path, what: VerifyKind) -> Outcome {
    let ctx = Context::from_name(algebra)?;
    let text = std::fs::read_to_string(input).map_err(|e| Error::Parse(format!("{}: {e}", input.display())))?;
    let z = json::parse_uea(&ctx, &text)?;
    match what {
        VerifyKind::Central => {
            let c = verify_central(&ctx, &z)?;
            Ok((c.central, json!({ "central": c.central, "witness": c.witness_label })))
        }
        VerifyKind::HcInvariant => {
            let c = verify_central(&ctx, &z)?;
            if !c.central {
                return Ok((false, json!({ "central": false, "witness": c.witness_label })));
            }
            let p = hc::hc_image(&ctx, &z)?;
            let failing = ctx.weyl.invariance_failure(&p);
            Ok((
                failing.is_none(),
                json!({
                    "central": true,
                    "P": json::poly_to_json(&p),
                    "weyl_order": ctx.weyl.order(),
                    "invariant": failing.is_none(),
                    "failing_element": failing,
                }),
            ))
        }
        VerifyKind::PrB => {
            let pr = hc::pr_projection(&ctx, &z)?;
            let pr_ok = hc::pr_certificate(&ctx, &z, &pr)?;
            let bc = b_correction(&ctx, &z)?;
            Ok((
                pr_ok && bc.certified(),
                json!({
                    "pr_ok": pr_ok,
                    "b_membership_ok": bc.membership_ok,
                    "b_degree_ok": bc.degree_ok,
                    "pr": json::uea_to_json(&pr),
                    "b": json::uea_to_json(&bc.b),
                    "remainder": json::uea_to_json(&bc.remainder),
                }),
            ))
        }
    }
}

pub fn element(algebra: &str, center: &str, order: OrderArg) -> Outcome {
    let ctx = Context::from_name(algebra)?;
    let kind = match order {
        OrderArg::Pr => OrderKind::Pr,
        OrderArg::B => OrderKind::B,
    };
    let z = center_element(&ctx, center)?.change_order(ctx.order(kind))?;
    Ok((true, to_value(&json::uea_to_json(&z))))
}

pub fn algebra(algebra: &str) -> Outcome {
    let ctx = Context::from_name(algebra)?;
    Ok((true, to_value(&json::algebra_to_json(&ctx.algebra))))
}
