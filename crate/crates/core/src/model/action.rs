use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::trig::TrigPolynomial;
use crate::error::{Error, Result};
use crate::nupoly::NuPolynomial;
use crate::scalar::{self, Gaussian};
use crate::uea::UeaElement;

/// The four letters of `sl₂` the model acts by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModelLetter {
    #[serde(rename = "H")]
    H,
    #[serde(rename = "X+")]
    XPlus,
    #[serde(rename = "X-")]
    XMinus,
    #[serde(rename = "W")]
    W,
}

impl ModelLetter {
    pub const ALL: [ModelLetter; 4] = [ModelLetter::H, ModelLetter::XPlus, ModelLetter::XMinus, ModelLetter::W];

    pub fn label(self) -> &'static str {
        match self {
            ModelLetter::H => "H",
            ModelLetter::XPlus => "X+",
            ModelLetter::XMinus => "X-",
            ModelLetter::W => "W",
        }
    }

    /// `exp(tX)` as a real 2×2 matrix.
    pub fn exp(self, t: f64) -> [[f64; 2]; 2] {
        match self {
            ModelLetter::H => [[t.exp(), 0.0], [0.0, (-t).exp()]],
            ModelLetter::XPlus => [[1.0, t], [0.0, 1.0]],
            ModelLetter::XMinus => [[1.0, 0.0], [t, 1.0]],
            ModelLetter::W => rotation(t),
        }
    }

    /// `[X, Y]` as integer combination of letters.
    pub fn bracket(self, other: ModelLetter) -> Vec<(ModelLetter, i64)> {
        use ModelLetter::*;
        match (self, other) {
            (H, XPlus) => vec![(XPlus, 2)],
            (H, XMinus) => vec![(XMinus, -2)],
            (XPlus, XMinus) => vec![(H, 1)],
            // W = X₊ − X₋
            (H, W) => vec![(XPlus, 2), (XMinus, 2)],
            (XPlus, W) => vec![(H, -1)],
            (XMinus, W) => vec![(H, -1)],
            (a, b) if a == b => vec![],
            (a, b) => b.bracket(a).into_iter().map(|(l, c)| (l, -c)).collect(),
        }
    }
}

impl fmt::Display for ModelLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for ModelLetter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "H" => Ok(ModelLetter::H),
            "X+" => Ok(ModelLetter::XPlus),
            "X-" => Ok(ModelLetter::XMinus),
            "W" => Ok(ModelLetter::W),
            _ => Err(Error::UnknownLetter(s.to_string())),
        }
    }
}

/// `k(θ) = [[cos θ, sin θ], [−sin θ, cos θ]]`.
pub fn rotation(theta: f64) -> [[f64; 2]; 2] {
    let (s, c) = theta.sin_cos();
    [[c, s], [-s, c]]
}

pub fn mat_mul(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    let mut m = [[0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    m
}

/// `I_ν(X) f` in closed form, with `c = ν(H) + 1` and `f′ = df/dθ`:
///
/// ```text
/// H:  c cos2θ f + sin2θ f′
/// X₊: (c/2) sin2θ f + sin²θ f′
/// X₋: (c/2) sin2θ f − cos²θ f′
/// W:  f′
/// ```
pub fn act(x: ModelLetter, f: &TrigPolynomial, nu_h: &NuPolynomial) -> TrigPolynomial {
    let r = f.nvars();
    let c = nu_h + &NuPolynomial::one(r);
    let half_c = c.scale_rational(&scalar::rat(1, 2));
    let df = f.derivative();
    match x {
        ModelLetter::H => &(&TrigPolynomial::cos2(r) * f).scale(&c) + &(&TrigPolynomial::sin2(r) * &df),
        ModelLetter::XPlus => &(&TrigPolynomial::sin2(r) * f).scale(&half_c) + &(&TrigPolynomial::sin_sq(r) * &df),
        ModelLetter::XMinus => &(&TrigPolynomial::sin2(r) * f).scale(&half_c) - &(&TrigPolynomial::cos_sq(r) * &df),
        ModelLetter::W => df,
    }
}

/// Word action, rightmost letter first.
pub fn act_word(w: &[ModelLetter], f: &TrigPolynomial, nu_h: &NuPolynomial) -> TrigPolynomial {
    w.iter().rev().fold(f.clone(), |g, &x| act(x, &g, nu_h))
}

/// Letters of an `sl₂` element's order translated to model letters.
pub fn model_word(u: &UeaElement, w: &[crate::uea::Letter]) -> Result<Vec<ModelLetter>> {
    w.iter().map(|&l| u.order().letter(l).label.parse()).collect()
}

/// `I_ν(u) f` for `u` with `ν`-polynomial coefficients.
pub fn act_element(u: &UeaElement, f: &TrigPolynomial, nu_h: &NuPolynomial) -> Result<TrigPolynomial> {
    let mut out = TrigPolynomial::zero(f.nvars());
    for (w, c) in u.terms() {
        out = &out + &act_word(&model_word(u, w)?, f, nu_h).scale(c);
    }
    Ok(out)
}

/// `I_ν(wᵗ) f` where `(x₁⋯x_k)ᵗ = (−1)^k x_k⋯x₁`.
pub fn act_transpose_word(w: &[ModelLetter], f: &TrigPolynomial, nu_h: &NuPolynomial) -> TrigPolynomial {
    let g = w.iter().fold(f.clone(), |g, &x| act(x, &g, nu_h));
    if w.len().is_multiple_of(2) {
        g
    } else {
        -&g
    }
}

/// `f(g)` for the extension `f(nak) = e^{⟨ν+ρ, log a⟩} f(k)`, via the rows of `g`.
pub fn evaluate_extension(f: &TrigPolynomial, g: &[[f64; 2]; 2], nu_h: Complex<f64>) -> Result<Complex<f64>> {
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if det.abs() < 1e-12 {
        return Err(Error::Singular);
    }
    if (det - 1.0).abs() > 1e-9 {
        return Err(Error::DomainViolation(format!("det g = {det}")));
    }
    let a2 = g[1][0].hypot(g[1][1]);
    let theta = (-g[1][0] / a2).atan2(g[1][1] / a2);
    let t = -a2.ln();
    Ok((nu_h + 1.0).scale(t).exp() * f.evaluate(theta, &[nu_h][..f.nvars()]))
}

/// A functional on `V_K` given by an exact evaluation rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Functional {
    /// `δ(f) = f(1)`.
    Delta,
    Truncated(TruncatedFunctional),
}

impl Functional {
    pub fn pair(&self, f: &TrigPolynomial) -> NuPolynomial {
        match self {
            Functional::Delta => f.value_at_identity(),
            Functional::Truncated(t) => t.pair(f),
        }
    }
}

/// Values `Φ(e^{2inθ})` for `|n| ≤ N`, zero beyond.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedFunctional {
    pub n: usize,
    pub values: BTreeMap<i64, Gaussian>,
}

impl TruncatedFunctional {
    /// `T(f)`, the conjugate-linear embedding `g ↦ ⟨g, f⟩`.
    pub fn embed(f: &TrigPolynomial, n: usize) -> Self {
        let values = (-(n as i64)..=n as i64)
            .map(|m| (m, f.coeff(m).constant_term().conj()))
            .collect();
        TruncatedFunctional { n, values }
    }

    /// `Φ_N`: the values of `Φ` on `|m| ≤ N`.
    pub fn truncate(phi: &Functional, n: usize, nvars: usize) -> Self {
        let values = (-(n as i64)..=n as i64)
            .map(|m| (m, phi.pair(&TrigPolynomial::mode(nvars, m)).constant_term()))
            .collect();
        TruncatedFunctional { n, values }
    }

    pub fn pair(&self, f: &TrigPolynomial) -> NuPolynomial {
        let mut acc = NuPolynomial::zero(f.nvars());
        for (m, c) in f.modes() {
            if let Some(v) = self.values.get(m) {
                acc = acc + c.scale(v);
            }
        }
        acc
    }
}

/// `δ` as a rule and `δ_N = Σ_{|n|≤N} e^{2inθ}`.
pub fn delta_and_truncate(n: usize, nvars: usize) -> (Functional, TrigPolynomial) {
    let dn = TrigPolynomial::from_modes(
        nvars,
        (-(n as i64)..=n as i64).map(|m| (m, NuPolynomial::one(nvars))),
    );
    (Functional::Delta, dn)
}

/// `I′_ν(x₁⋯x_k) Φ`, evaluated lazily on test vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualVector {
    pub base: Functional,
    pub word: Vec<ModelLetter>,
}

impl DualVector {
    /// `(I′_ν(u)Φ)(f) = Φ(I_ν(uᵗ) f)`.
    pub fn evaluate(&self, f: &TrigPolynomial, nu_h: &NuPolynomial) -> NuPolynomial {
        self.base.pair(&act_transpose_word(&self.word, f, nu_h))
    }
}

/// `(I′_ν(u)Φ)(f)` for an element `u`.
pub fn dual_act(u: &UeaElement, phi: &Functional, nu_h: &NuPolynomial, f: &TrigPolynomial) -> Result<NuPolynomial> {
    let mut acc = NuPolynomial::zero(f.nvars());
    for (w, c) in u.terms() {
        let dv = DualVector {
            base: phi.clone(),
            word: model_word(u, w)?,
        };
        acc = acc + &dv.evaluate(f, nu_h) * c;
    }
    Ok(acc)
}

/// A finite sum `Σ v_i ⊗ Φ_i` in `V_K ⊗ V′_K`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModelState {
    pub terms: Vec<(TrigPolynomial, DualVector)>,
}

impl ModelState {
    /// `Σ Φ_i(f) v_i`.
    pub fn contract(&self, f: &TrigPolynomial, nu_h: &NuPolynomial) -> TrigPolynomial {
        self.terms
            .iter()
            .fold(TrigPolynomial::zero(f.nvars()), |acc, (v, phi)| {
                &acc + &v.scale(&phi.evaluate(f, nu_h))
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gauss_int;

    fn nu() -> NuPolynomial {
        NuPolynomial::var(1, 0)
    }

    #[test]
    fn spherical_vector() {
        let phi0 = TrigPolynomial::one(1);
        assert!(act(ModelLetter::W, &phi0, &nu()).is_zero());
        let c = &nu() + &NuPolynomial::one(1);
        assert_eq!(act(ModelLetter::H, &phi0, &nu()), TrigPolynomial::cos2(1).scale(&c));
        let e3 = TrigPolynomial::mode(1, 3);
        assert_eq!(act(ModelLetter::W, &e3, &nu()), e3.scale_gaussian(&gauss_int(0, 6)));
    }

    #[test]
    fn delta_truncation() {
        let (delta, d2) = delta_and_truncate(2, 1);
        let t = TruncatedFunctional::embed(&d2, 3);
        for m in -3i64..=3 {
            let e = TrigPolynomial::mode(1, m);
            let diff = &t.pair(&e) - &delta.pair(&e);
            assert_eq!(diff.is_zero(), m.abs() <= 2, "mode {m}");
        }
        let (_, d0) = delta_and_truncate(0, 1);
        assert_eq!(d0, TrigPolynomial::one(1));
        let trunc = TruncatedFunctional::truncate(&delta, 2, 1);
        assert!(trunc.values.values().all(|v| v == &gauss_int(1, 0)));
    }

    #[test]
    fn extension_basics() {
        let f = TrigPolynomial::from_gaussian(1, [(1, gauss_int(2, 1)), (-2, gauss_int(0, 3))]);
        let nu_h = Complex::new(0.0, 1.5);
        let id = [[1.0, 0.0], [0.0, 1.0]];
        let v = evaluate_extension(&f, &id, nu_h).unwrap();
        assert!((v - Complex::new(2.0, 4.0)).norm() < 1e-12);
        let t = 0.7;
        let g = ModelLetter::H.exp(t / 2.0);
        let v = evaluate_extension(&TrigPolynomial::one(1), &g, nu_h).unwrap();
        assert!((v - ((nu_h + 1.0) * (t / 2.0)).exp()).norm() < 1e-12);
        assert_eq!(evaluate_extension(&f, &[[1.0, 2.0], [2.0, 4.0]], nu_h), Err(Error::Singular));
    }
}
