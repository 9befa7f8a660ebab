//! Projection to `U(𝔞)`, Harish-Chandra images, the correction `b(z)` and
//! the annihilating pair `(H_part, J)`.
//!
//! Everything is exact. For central `z` of degree `d` the operator
//!
//! ```text
//! Ω = τ_{ν+ρ}(pr z) − τ_{ν+ρ}(b z) − χ_ν(z)
//! ```
//!
//! has no `ν`-degree `d` part; its degree `d − 1` part is `Σ ∂_i P_d(ν) h_i`
//! and the rest is `J`.

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::context::Context;
use crate::error::{Error, Result};
use crate::lie::{astar_norm, is_regular, SpectralParameter};
use crate::linalg;
use crate::nupoly::NuPolynomial;
use crate::scalar::{self, Gaussian};
use crate::uea::{verify_central, Letter, Part, PbwOrder, UeaElement, Word};

fn is_cartan_word(order: &PbwOrder, w: &[Letter]) -> bool {
    w.iter().all(|&l| order.letter(l).part == Part::Cartan)
}

/// Reads an element of `U(𝔞)` as a polynomial on `𝔞*` (variable `i` is `λ(h_i)`).
pub fn cartan_polynomial(u: &UeaElement) -> Result<NuPolynomial> {
    let order = u.order();
    let r = order.rank();
    let mut p = NuPolynomial::zero(r);
    for (w, c) in u.terms() {
        if let Some(&l) = w.iter().find(|&&l| order.letter(l).cartan.is_none()) {
            return Err(Error::DomainViolation(order.letter(l).label.clone()));
        }
        if !c.is_constant() {
            return Err(Error::DomainViolation("ν-dependent coefficient".into()));
        }
        let mut e = vec![0u32; r];
        for &l in w {
            e[order.letter(l).cartan.unwrap()] += 1;
        }
        p.add_term(e, c.constant_term());
    }
    Ok(p)
}

/// Inverse of [`cartan_polynomial`]: a polynomial on `𝔞*` as an element of `U(𝔞)`.
pub fn polynomial_to_cartan(order: &std::sync::Arc<PbwOrder>, p: &NuPolynomial) -> UeaElement {
    let r = order.rank();
    let terms = p.terms().map(|(e, c)| {
        let w: Word = e
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(order.cartan_letter(i), k as usize))
            .collect();
        (w, NuPolynomial::constant(r, c.clone()))
    });
    UeaElement::normal_form(order, terms).expect("Cartan letters belong to every order")
}

/// Sum of the pure-`𝔞` monomials of `z` in the `(𝔫, 𝔞, 𝔫̄)` order.
pub fn pr_projection(ctx: &Context, z: &UeaElement) -> Result<UeaElement> {
    let zp = z.change_order(&ctx.pr)?;
    Ok(zp.filter_terms(|w| is_cartan_word(&ctx.pr, w)))
}

/// `z − pr(z)` has no pure-`𝔞` monomial (the empty word included).
pub fn pr_certificate(ctx: &Context, z: &UeaElement, pr: &UeaElement) -> Result<bool> {
    let rest = z.change_order(&ctx.pr)?.try_sub(&pr.change_order(&ctx.pr)?)?;
    Ok(rest.terms().keys().all(|w| !is_cartan_word(&ctx.pr, w)))
}

fn harish_chandra_unchecked(ctx: &Context, pr: &UeaElement) -> Result<NuPolynomial> {
    cartan_polynomial(&pr.tau_translate(&ctx.rho_polys())?)
}

/// `P = τ_ρ(pr z)` as a polynomial on `𝔞*`.
pub fn hc_image(ctx: &Context, z: &UeaElement) -> Result<NuPolynomial> {
    crate::uea::require_central(ctx, z)?;
    harish_chandra_unchecked(ctx, &pr_projection(ctx, z)?)
}

/// `χ_ν(z) = P(ν)`; a constant polynomial for numeric `ν`.
pub fn infinitesimal_character(ctx: &Context, z: &UeaElement, nu: &SpectralParameter) -> Result<NuPolynomial> {
    if nu.rank() != ctx.rank() {
        return Err(Error::Dimension {
            expected: ctx.rank(),
            got: nu.rank(),
        });
    }
    Ok(hc_image(ctx, z)?.compose(&nu.coordinates()))
}

/// Output of [`b_correction`]; both elements are in the `(𝔫, 𝔞, 𝔨)` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BCorrection {
    pub b: UeaElement,
    /// `z − pr(z) + b(z)`, every monomial ending in a compact letter.
    pub remainder: UeaElement,
    /// Membership certificate for `remainder ∈ U(𝔤)𝔨` and `b ∈ U(𝔫)U(𝔞)`.
    pub membership_ok: bool,
    /// `𝔞`-degree of `b` is at most `d − 2`.
    pub degree_ok: bool,
}

impl BCorrection {
    pub fn certified(&self) -> bool {
        self.membership_ok && self.degree_ok
    }
}

pub fn b_correction(ctx: &Context, z: &UeaElement) -> Result<BCorrection> {
    let pr = pr_projection(ctx, z)?;
    b_correction_with(ctx, z, &pr)
}

fn b_correction_with(ctx: &Context, z: &UeaElement, pr: &UeaElement) -> Result<BCorrection> {
    let order = &ctx.b;
    let d = z.degree();
    let diff = z.change_order(order)?.try_sub(&pr.change_order(order)?)?;
    let has_compact = |w: &Word| w.iter().any(|&l| order.letter(l).part == Part::Compact);
    let b = -&diff.filter_terms(|w| !has_compact(w));
    // recompute rather than reuse the split
    let remainder = diff.try_add(&b)?;
    let ends_compact = remainder
        .terms()
        .keys()
        .all(|w| w.last().is_some_and(|&l| order.letter(l).part == Part::Compact));
    let b_in_na = b.terms().keys().all(|w| {
        w.iter()
            .all(|&l| matches!(order.letter(l).part, Part::PositiveNilpotent | Part::Cartan))
    });
    let degree_ok = b
        .terms()
        .keys()
        .all(|w| b.part_count(w, Part::Cartan) + 2 <= d.max(2));
    Ok(BCorrection {
        b,
        remainder,
        membership_ok: ends_compact && b_in_na,
        degree_ok,
    })
}

/// `P′(ν) = Σ_i ∂_i P(ν) h_i`, as coefficients on the Cartan basis.
pub fn gradient(p: &NuPolynomial, at: &[NuPolynomial]) -> Vec<NuPolynomial> {
    (0..p.nvars()).map(|i| p.derivative(i).compose(at)).collect()
}

pub fn gradient_numeric(p: &NuPolynomial, at: &[Gaussian]) -> Vec<Gaussian> {
    (0..p.nvars()).map(|i| p.derivative(i).evaluate(at)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificates {
    pub central_ok: bool,
    pub pr_ok: bool,
    pub b_ok: bool,
    pub degree_ok: bool,
    pub gradient_match: bool,
    pub top_cancel: bool,
}

impl Certificates {
    pub fn all(&self) -> bool {
        self.first_failure().is_none()
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        [
            ("central_ok", self.central_ok),
            ("pr_ok", self.pr_ok),
            ("b_ok", self.b_ok),
            ("degree_ok", self.degree_ok),
            ("gradient_match", self.gradient_match),
            ("top_cancel", self.top_cancel),
        ]
        .into_iter()
        .find(|(_, ok)| !ok)
        .map(|(name, _)| name)
    }
}

/// The pair `(H_part, J)` built from a central element, with its certificates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Annihilator {
    pub degree: usize,
    /// Coefficients of `H_part` on `h_1, …, h_r`, homogeneous of `ν`-degree `d − 1`.
    pub h_part: Vec<NuPolynomial>,
    /// `(𝔫, 𝔞, 𝔨)` order; `ν`-degree at most `d − 2`.
    pub j: UeaElement,
    pub source: UeaElement,
    pub p: NuPolynomial,
    pub pr: UeaElement,
    pub b: UeaElement,
    pub certificates: Certificates,
}

/// Builds the annihilator and fails on the first false certificate.
pub fn construct_annihilator(ctx: &Context, z: &UeaElement) -> Result<Annihilator> {
    let ann = construct_annihilator_unchecked(ctx, z)?;
    match ann.certificates.first_failure() {
        None => Ok(ann),
        Some(flag) => Err(Error::CertificationFailure { flag: flag.into() }),
    }
}

/// Builds the annihilator and reports certificates without enforcing them.
pub fn construct_annihilator_unchecked(ctx: &Context, z: &UeaElement) -> Result<Annihilator> {
    let d = z.degree();
    if d <= 1 {
        return Err(Error::DegenerateDegree(d));
    }
    let r = ctx.rank();
    let central_ok = verify_central(ctx, z)?.central;
    let pr = pr_projection(ctx, z)?;
    let pr_ok = pr_certificate(ctx, z, &pr)?;
    let p = harish_chandra_unchecked(ctx, &pr)?;
    let bc = b_correction_with(ctx, z, &pr)?;

    let nu = SpectralParameter::Formal(r).coordinates();
    let lambda: Vec<NuPolynomial> = nu.iter().zip(ctx.rho_polys()).map(|(a, b)| a + &b).collect();
    let chi = UeaElement::scalar(&ctx.b, p.compose(&nu));
    let omega = pr
        .change_order(&ctx.b)?
        .tau_translate(&lambda)?
        .try_sub(&bc.b.tau_translate(&lambda)?)?
        .try_sub(&chi)?;

    let top = (d - 1) as u32;
    let h_elem = omega.nu_homogeneous(top);
    let j = omega.try_sub(&h_elem)?;
    let top_cancel = omega.nu_degree().is_none_or(|k| k < d as u32);
    let degree_ok = j.nu_degree().is_none_or(|k| k + 2 <= d as u32);

    let mut h_part = vec![NuPolynomial::zero(r); r];
    let mut h_linear = true;
    for (w, c) in h_elem.terms() {
        match (w.len(), ctx.b.letter(w[0]).cartan) {
            (1, Some(i)) => h_part[i] = c.clone(),
            _ => h_linear = false,
        }
    }
    let expected = gradient(&p.homogeneous(d as u32), &nu);
    let gradient_match = h_linear && h_part == expected;

    Ok(Annihilator {
        degree: d,
        h_part,
        j,
        source: z.clone(),
        p,
        pr,
        b: bc.b.clone(),
        certificates: Certificates {
            central_ok,
            pr_ok,
            b_ok: bc.certified(),
            degree_ok,
            gradient_match,
            top_cancel,
        },
    })
}

impl Annihilator {
    pub fn rank(&self) -> usize {
        self.h_part.len()
    }

    /// `H_part` as an element of `U(𝔞)` in the order of `J`.
    pub fn h_part_element(&self) -> UeaElement {
        let order = self.j.order();
        let terms = self
            .h_part
            .iter()
            .enumerate()
            .map(|(i, c)| (vec![order.cartan_letter(i)], c.clone()));
        UeaElement::from_sorted_terms(order, terms).expect("single letters are sorted")
    }

    /// `Ω = H_part + J`.
    pub fn omega(&self) -> UeaElement {
        &self.h_part_element() + &self.j
    }

    /// Rank one only: substitutes `ν(H) = 2ir` and divides by the leading
    /// coefficient of `H_part`, giving e.g. `H + (H²+4X₊²)/(4i r)`.
    pub fn normalized_display(&self) -> Option<String> {
        if self.rank() != 1 {
            return None;
        }
        let sub = [NuPolynomial::var(1, 0).scale(&scalar::gauss_int(0, 2))];
        let h = self.h_part[0].compose(&sub);
        let k = (self.degree - 1) as u32;
        if h.len() != 1 || h.degree() != Some(k) {
            return None;
        }
        let c = h.coeff(&[k]);
        let order = self.j.order();
        let hname = &order.letter(order.cartan_letter(0)).pretty;
        if self.j.is_zero() {
            return Some(hname.clone());
        }
        let mut jr = UeaElement::zero(order);
        for (w, coeff) in self.j.terms() {
            let term = UeaElement::from_sorted_terms(order, [(w.clone(), coeff.compose(&sub))]).ok()?;
            jr = &jr + &term;
        }
        let rpow = if k == 1 { "r".to_string() } else { format!("r^{k}") };
        let cs = scalar::pretty_gaussian(&c);
        let denom = if c.is_one() { rpow } else { format!("{cs} {rpow}") };
        Some(format!("{hname} + ({})/({denom})", jr.pretty_with(&["r".to_string()])))
    }

    /// Floating evaluation at a numeric `ν`, divided by `‖ν‖^{d−1}`.
    pub fn numeric_export(&self, ctx: &Context, nu: &SpectralParameter) -> Result<NumericExport> {
        let v = nu.numeric()?;
        let norm = astar_norm(&ctx.algebra, nu)?.to_f64();
        let scale = norm.powi(self.degree as i32 - 1);
        let c64 = |z: &Gaussian| {
            let z = scalar::to_c64(z) / scale;
            [z.re, z.im]
        };
        let order = self.j.order();
        Ok(NumericExport {
            approximate: true,
            norm,
            h_part: self.h_part.iter().map(|c| c64(&c.evaluate(v))).collect(),
            j: self
                .j
                .terms()
                .iter()
                .map(|(w, c)| NumericTerm {
                    word: w.iter().map(|&l| order.letter(l).label.clone()).collect(),
                    coeff: c64(&c.evaluate(v)),
                })
                .collect(),
        })
    }
}

/// `H_part/‖ν‖^{d−1}` and `J/‖ν‖^{d−1}` in double precision.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericExport {
    pub approximate: bool,
    pub norm: f64,
    pub h_part: Vec<[f64; 2]>,
    pub j: Vec<NumericTerm>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericTerm {
    pub word: Vec<String>,
    pub coeff: [f64; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpanVerdict {
    /// `S = 𝔞`.
    #[serde(rename = "full-Cartan")]
    FullCartan,
    /// `S = 𝔞^{W₀}` with `W₀` nontrivial.
    #[serde(rename = "fixed-subspace")]
    FixedSubspace,
    #[serde(rename = "mismatch")]
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanSpan {
    pub dim: usize,
    /// Reduced row-echelon basis of `S` in Cartan coordinates.
    pub basis: Vec<Vec<Gaussian>>,
    pub regular: bool,
    pub w0_order: usize,
    pub fixed_dim: usize,
    pub verdict: SpanVerdict,
}

/// `S = span{P′(ν̃)}` compared against `𝔞^{W₀}`.
pub fn cartan_span(ctx: &Context, ps: &[NuPolynomial], nu: &[Gaussian]) -> Result<CartanSpan> {
    let r = ctx.rank();
    if nu.len() != r {
        return Err(Error::Dimension {
            expected: r,
            got: nu.len(),
        });
    }
    for p in ps {
        if let Some(w) = ctx.weyl.invariance_failure(p) {
            return Err(Error::InvarianceViolation(w));
        }
    }
    let mut m: linalg::Matrix<Gaussian> = ps.iter().map(|p| gradient_numeric(p, nu)).collect();
    let pivots = linalg::rref(&mut m);
    let basis: Vec<Vec<Gaussian>> = m.into_iter().take(pivots.len()).collect();
    let reg = is_regular(&ctx.algebra, &ctx.weyl, &SpectralParameter::Numeric(nu.to_vec()))?;
    let fixed_dim = ctx.weyl.fixed_dimension(&reg.stabilizer);
    let dim = basis.len();
    let verdict = if dim != fixed_dim {
        SpanVerdict::Mismatch
    } else if dim == r {
        SpanVerdict::FullCartan
    } else {
        SpanVerdict::FixedSubspace
    };
    Ok(CartanSpan {
        dim,
        basis,
        regular: reg.regular,
        w0_order: reg.stabilizer.len(),
        fixed_dim,
        verdict,
    })
}
