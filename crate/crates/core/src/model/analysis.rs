//! End-to-end checks in the model: annihilation of `φ₀ ⊗ δ`, the functions
//! `p_X`, Fejér square roots, and the finite-difference oracle.

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::action::{
    act, evaluate_extension, mat_mul, model_word, rotation, DualVector, Functional, ModelLetter, ModelState,
};
use super::trig::TrigPolynomial;
use crate::error::{Error, Result};
use crate::hc::Annihilator;
use crate::linalg;
use crate::nupoly::NuPolynomial;
use crate::scalar::{self, gauss, int, Gaussian, Rational};
use crate::uea::{coproduct, UeaElement};

/// `Δ(u)(φ₀ ⊗ δ)`, with the first leg evaluated exactly.
pub fn apply_to_spherical_delta(u: &UeaElement, nu_h: &NuPolynomial) -> Result<ModelState> {
    let phi0 = TrigPolynomial::one(nu_h.nvars());
    let mut state = ModelState::default();
    for (left, right) in coproduct(u).pairs() {
        let (w1, _) = left.terms().iter().next().expect("pair legs are monomials");
        let (w2, c) = right.terms().iter().next().expect("pair legs are monomials");
        let v = super::action::act_word(&model_word(&left, w1)?, &phi0, nu_h).scale(c);
        if v.is_zero() {
            continue;
        }
        state.terms.push((
            v,
            DualVector {
                base: Functional::Delta,
                word: model_word(&right, w2)?,
            },
        ));
    }
    Ok(state)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModeResidual {
    pub m: i64,
    pub zero: bool,
    /// Largest exact coefficient size, as `"p/q"`.
    pub max_coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub n_test: usize,
    pub identically_zero: bool,
    pub max_residual: String,
    pub modes: Vec<ModeResidual>,
}

/// Pairs `Δ(u)(φ₀ ⊗ δ)` against every test mode `|m| ≤ n_test` with formal `ν`.
pub fn residual_report(u: &UeaElement, n_test: usize) -> Result<ResidualReport> {
    let nu_h = NuPolynomial::var(1, 0);
    let state = apply_to_spherical_delta(u, &nu_h)?;
    let mut modes = Vec::new();
    let mut max = Rational::zero();
    for m in -(n_test as i64)..=n_test as i64 {
        let res = state.contract(&TrigPolynomial::mode(1, m), &nu_h);
        let size = res.max_coeff_size();
        if size > max {
            max = size.clone();
        }
        modes.push(ModeResidual {
            m,
            zero: res.is_zero(),
            max_coeff: scalar::format_rational(&size),
        });
    }
    Ok(ResidualReport {
        n_test,
        identically_zero: modes.iter().all(|r| r.zero),
        max_residual: scalar::format_rational(&max),
        modes,
    })
}

/// Checks that `Ω = H_part + J` kills `φ₀ ⊗ δ`; refuses uncertified input.
pub fn apply_annihilator(ann: &Annihilator, n_test: usize) -> Result<ResidualReport> {
    if !ann.certificates.all() {
        return Err(Error::Uncertified);
    }
    if ann.rank() != 1 || ann.j.order().algebra().matrix_size() != 2 {
        return Err(Error::DomainViolation("the model realizes sl2 only".into()));
    }
    if n_test < ann.degree + 2 {
        return Err(Error::InvalidDegree(n_test));
    }
    residual_report(&ann.omega(), n_test)
}

/// `μ_X(θ)` with `H₀(Ad(k)X) = μ_X H`.
pub fn iwasawa_coefficient(x: ModelLetter) -> TrigPolynomial {
    let half = Gaussian::from(scalar::rat(1, 2));
    match x {
        ModelLetter::H => TrigPolynomial::cos2(1),
        ModelLetter::XPlus | ModelLetter::XMinus => TrigPolynomial::sin2(1).scale_gaussian(&half),
        ModelLetter::W => TrigPolynomial::zero(1),
    }
}

/// `p_X(k) = (1/i) ν̃(H₀(Ad(k)X))` for `ν̃ ∈ i𝔞*`, given by `ν̃(H)`.
pub fn p_function(x: ModelLetter, nu_tilde_h: &Gaussian) -> TrigPolynomial {
    let c = nu_tilde_h * scalar::gauss_int(0, -1);
    iwasawa_coefficient(x).scale_gaussian(&c)
}

/// Real-valuedness: `p̄ = p`.
pub fn is_real(p: &TrigPolynomial) -> bool {
    &p.conj() == p
}

/// Rank of the span of products of `{1, p_H, p_{X₊}, p_{X₋}}` of degree
/// at most `max_degree`, restricted to modes `|n| ≤ window`, and the window size.
pub fn px_span_rank(nu_tilde_h: &Gaussian, max_degree: usize, window: i64) -> (usize, usize) {
    let gens: Vec<TrigPolynomial> = [ModelLetter::H, ModelLetter::XPlus, ModelLetter::XMinus]
        .iter()
        .map(|&x| p_function(x, nu_tilde_h))
        .collect();
    let mut layer = vec![TrigPolynomial::one(1)];
    let mut all = layer.clone();
    for _ in 0..max_degree {
        let next: Vec<TrigPolynomial> = layer
            .iter()
            .flat_map(|p| gens.iter().map(move |g| p * g))
            .collect();
        all.extend(next.iter().cloned());
        layer = next;
    }
    let rows: linalg::Matrix<Gaussian> = all
        .iter()
        .map(|p| (-window..=window).map(|n| p.coeff(n).constant_term()).collect())
        .collect();
    (linalg::rank(&rows), (2 * window + 1) as usize)
}

/// `f_j = (1/j) Σ_{n=0}^{j²−1} e^{2inθ}`; `|f_j|²` is the Fejér kernel of
/// order `j² − 1`.
pub fn fejer_sqrt(j: usize) -> Result<TrigPolynomial> {
    if j == 0 {
        return Err(Error::InvalidDegree(0));
    }
    let c = Gaussian::from(Rational::new(1.into(), (j as i64).into()));
    Ok(TrigPolynomial::from_gaussian(1, (0..(j * j) as i64).map(|n| (n, c.clone()))))
}

pub fn modulus_squared(f: &TrigPolynomial) -> TrigPolynomial {
    f * &f.conj()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FejerRow {
    pub j: usize,
    /// Constant Fourier coefficient of `|f_j|²`.
    pub mass: String,
    /// Coefficient of `e^{2iθ}` in `|f_j|²`.
    pub first_mode: String,
    /// `|1 − first_mode|`, the distance from the `δ` value.
    pub first_mode_defect: String,
    pub nonnegative: bool,
}

pub fn fejer_row(j: usize) -> Result<FejerRow> {
    let f = fejer_sqrt(j)?;
    let sq = modulus_squared(&f);
    let mass = sq.coeff(0).constant_term();
    let first = sq.coeff(1).constant_term();
    let defect = scalar::gauss_size(&(Gaussian::from(int(1)) - &first));
    let nonnegative = (0..256).all(|k| {
        let t = std::f64::consts::PI * k as f64 / 256.0;
        let v = sq.evaluate(t, &[Complex::zero()]);
        // grid points can be exact zeros of the kernel; allow roundoff
        v.re >= -1e-9 && v.im.abs() < 1e-9
    });
    Ok(FejerRow {
        j,
        mass: scalar::format_rational(&mass.re),
        first_mode: scalar::format_rational(&first.re),
        first_mode_defect: scalar::format_rational(&defect),
        nonnegative,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleProbe {
    pub letter: ModelLetter,
    pub mode: i64,
    pub theta: f64,
    pub rel_error: f64,
}

pub const FD_STEP: f64 = 1e-4;

/// Central difference of `t ↦ f(k(θ) exp(tX))` at `t = 0`.
pub fn finite_difference(x: ModelLetter, f: &TrigPolynomial, theta: f64, nu_h: Complex<f64>) -> Result<Complex<f64>> {
    let k = rotation(theta);
    let plus = evaluate_extension(f, &mat_mul(&k, &x.exp(FD_STEP)), nu_h)?;
    let minus = evaluate_extension(f, &mat_mul(&k, &x.exp(-FD_STEP)), nu_h)?;
    Ok((plus - minus) / (2.0 * FD_STEP))
}

/// Compares [`act`] against [`finite_difference`] on `probes` deterministic
/// `(mode, θ)` pairs per letter. Relative error is `|fd − exact| / max(|exact|, 1)`.
pub fn act_oracle(nu_h: &Gaussian, probes: usize) -> Result<Vec<OracleProbe>> {
    let exact_nu = NuPolynomial::constant(1, nu_h.clone());
    let nu_c = scalar::to_c64(nu_h);
    let mut out = Vec::new();
    for x in ModelLetter::ALL {
        for p in 0..probes {
            let mode = (p as i64 % 7) - 3;
            let theta = 0.1 + 0.523 * p as f64;
            let f = TrigPolynomial::from_gaussian(
                1,
                [(mode, gauss(int(1), scalar::rat(1, 2))), (mode + 1, Gaussian::from(scalar::rat(-1, 3)))],
            );
            let exact = act(x, &f, &exact_nu).evaluate(theta, &[nu_c]);
            let fd = finite_difference(x, &f, theta, nu_c)?;
            out.push(OracleProbe {
                letter: x,
                mode,
                theta,
                rel_error: (fd - exact).norm() / exact.norm().max(1.0),
            });
        }
    }
    Ok(out)
}

/// `act([X,Y], f) = act(X, act(Y, f)) − act(Y, act(X, f))` for every letter pair.
pub fn representation_failures(f: &TrigPolynomial, nu_h: &NuPolynomial) -> Vec<(ModelLetter, ModelLetter)> {
    let mut bad = Vec::new();
    for x in ModelLetter::ALL {
        for y in ModelLetter::ALL {
            let lhs = x.bracket(y).into_iter().fold(TrigPolynomial::zero(f.nvars()), |acc, (l, c)| {
                &acc + &act(l, f, nu_h).scale_gaussian(&Gaussian::from(int(c)))
            });
            let rhs = &act(x, &act(y, f, nu_h), nu_h) - &act(y, &act(x, f, nu_h), nu_h);
            if lhs != rhs {
                bad.push((x, y));
            }
        }
    }
    bad
}
