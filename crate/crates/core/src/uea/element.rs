use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;

use super::order::{Letter, Linear, Part, PbwOrder, Word};
use crate::error::{Error, Result};
use crate::nupoly::NuPolynomial;
use crate::scalar::{self, Gaussian, Rational};

/// Element of `U(𝔤_ℂ) ⊗ ℚ(i)[ν]`, canonical for its [`PbwOrder`]: every
/// stored word is sorted and no coefficient is zero.
#[derive(Clone)]
pub struct UeaElement {
    order: Arc<PbwOrder>,
    terms: BTreeMap<Word, NuPolynomial>,
}

impl PartialEq for UeaElement {
    fn eq(&self, other: &Self) -> bool {
        self.order.same_as(&other.order) && self.terms == other.terms
    }
}

impl Eq for UeaElement {}

impl UeaElement {
    pub fn zero(order: &Arc<PbwOrder>) -> Self {
        UeaElement {
            order: Arc::clone(order),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(order: &Arc<PbwOrder>) -> Self {
        Self::scalar(order, NuPolynomial::one(order.rank()))
    }

    pub fn scalar(order: &Arc<PbwOrder>, c: NuPolynomial) -> Self {
        let mut u = Self::zero(order);
        u.add_term(Vec::new(), c);
        u
    }

    pub fn rational(order: &Arc<PbwOrder>, c: Rational) -> Self {
        Self::scalar(order, NuPolynomial::rational(order.rank(), c))
    }

    pub fn letter(order: &Arc<PbwOrder>, l: Letter) -> Self {
        let mut u = Self::zero(order);
        u.add_term(vec![l], NuPolynomial::one(order.rank()));
        u
    }

    pub fn letter_by_label(order: &Arc<PbwOrder>, label: &str) -> Result<Self> {
        Ok(Self::letter(order, order.letter_by_label(label)?))
    }

    /// Degree-one element for a vector given in the standard basis of `𝔤`.
    pub fn from_vector(order: &Arc<PbwOrder>, x: &[Rational]) -> Self {
        let mut u = Self::zero(order);
        for (l, c) in order.letter_coords(x) {
            u.add_term(vec![l], NuPolynomial::rational(order.rank(), c));
        }
        u
    }

    /// Standard basis vector `idx` of the algebra, written in this order's letters.
    pub fn basis_vector(order: &Arc<PbwOrder>, idx: usize) -> Self {
        Self::from_vector(order, &order.algebra().unit(idx))
    }

    /// Normal form of a formal combination of (possibly unsorted) words.
    pub fn normal_form(
        order: &Arc<PbwOrder>,
        expr: impl IntoIterator<Item = (Word, NuPolynomial)>,
    ) -> Result<Self> {
        let mut u = Self::zero(order);
        for (w, c) in expr {
            order.check_letters(&w)?;
            for (v, r) in order.normal_form_word(&w) {
                u.add_term(v, c.scale_rational(&r));
            }
        }
        Ok(u)
    }

    /// Builds from already-sorted words; fails if a word is unsorted.
    pub fn from_sorted_terms(
        order: &Arc<PbwOrder>,
        terms: impl IntoIterator<Item = (Word, NuPolynomial)>,
    ) -> Result<Self> {
        let mut u = Self::zero(order);
        for (w, c) in terms {
            order.check_letters(&w)?;
            if !PbwOrder::is_sorted(&w) {
                return Err(Error::Parse(format!("word {w:?} is not sorted for {}", order.describe())));
            }
            if c.nvars() != order.rank() {
                return Err(Error::Dimension {
                    expected: order.rank(),
                    got: c.nvars(),
                });
            }
            u.add_term(w, c);
        }
        Ok(u)
    }

    pub fn from_linear(order: &Arc<PbwOrder>, lin: &Linear) -> Self {
        let mut u = Self::zero(order);
        for (w, r) in lin {
            u.add_term(w.clone(), NuPolynomial::rational(order.rank(), r.clone()));
        }
        u
    }

    pub(crate) fn add_term(&mut self, w: Word, c: NuPolynomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                let sum = std::mem::replace(x, NuPolynomial::zero(c.nvars())) + c;
                if sum.is_zero() {
                    self.terms.remove(&w);
                } else {
                    *x = sum;
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn order(&self) -> &Arc<PbwOrder> {
        &self.order
    }

    pub fn terms(&self) -> &BTreeMap<Word, NuPolynomial> {
        &self.terms
    }

    pub fn coeff(&self, w: &[Letter]) -> NuPolynomial {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| NuPolynomial::zero(self.order.rank()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Filtered degree (longest word); zero for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest total degree in `ν` among the coefficients.
    pub fn nu_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(NuPolynomial::degree).max()
    }

    /// Keeps, in every coefficient, only the `ν`-homogeneous component of degree `d`.
    pub fn nu_homogeneous(&self, d: u32) -> Self {
        let mut u = Self::zero(&self.order);
        for (w, c) in &self.terms {
            u.add_term(w.clone(), c.homogeneous(d));
        }
        u
    }

    /// Whether every coefficient is a constant in `ν`.
    pub fn is_nu_free(&self) -> bool {
        self.terms.values().all(NuPolynomial::is_constant)
    }

    pub fn filter_terms(&self, keep: impl Fn(&Word) -> bool) -> Self {
        UeaElement {
            order: Arc::clone(&self.order),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Letters of `w` restricted to the given part.
    pub fn part_count(&self, w: &[Letter], part: Part) -> usize {
        w.iter().filter(|&&l| self.order.letter(l).part == part).count()
    }

    pub fn scale(&self, c: &NuPolynomial) -> Self {
        let mut u = Self::zero(&self.order);
        for (w, x) in &self.terms {
            u.add_term(w.clone(), x * c);
        }
        u
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        let mut u = Self::zero(&self.order);
        for (w, x) in &self.terms {
            u.add_term(w.clone(), x.scale_rational(c));
        }
        u
    }

    pub fn scale_gaussian(&self, c: &Gaussian) -> Self {
        let mut u = Self::zero(&self.order);
        for (w, x) in &self.terms {
            u.add_term(w.clone(), x.scale(c));
        }
        u
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.order.check_same(&other.order)?;
        let mut u = self.clone();
        for (w, c) in &other.terms {
            u.add_term(w.clone(), c.clone());
        }
        Ok(u)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Normal form of the product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.order.check_same(&other.order)?;
        let mut u = Self::zero(&self.order);
        for (w2, c2) in &other.terms {
            let base = Linear::from([(w2.clone(), Rational::from_integer(1.into()))]);
            for (w1, c1) in &self.terms {
                let lin = self.order.left_multiply_word(w1, &base);
                let c = c1 * c2;
                for (w, r) in lin {
                    u.add_term(w, c.scale_rational(&r));
                }
            }
        }
        Ok(u)
    }

    /// `uv − vu`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.multiply(other)?.try_sub(&other.multiply(self)?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.order);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Re-expresses the element in the letters of another order over the same algebra.
    pub fn change_order(&self, target: &Arc<PbwOrder>) -> Result<Self> {
        if self.order.algebra() != target.algebra() {
            return Err(Error::OrderMismatch(self.order.describe(), target.describe()));
        }
        if self.order.same_as(target) {
            return Ok(self.clone());
        }
        let images: Vec<Self> = self
            .order
            .letters()
            .iter()
            .map(|l| Self::from_vector(target, &l.vector))
            .collect();
        let mut u = Self::zero(target);
        for (w, c) in &self.terms {
            let mut prod = Self::scalar(target, c.clone());
            for &l in w.iter().rev() {
                prod = &images[l as usize] * &prod;
            }
            u = &u + &prod;
        }
        Ok(u)
    }

    /// The anti-involution with `Xᵗ = −X` on letters.
    pub fn transpose(&self) -> Self {
        let mut u = Self::zero(&self.order);
        for (w, c) in &self.terms {
            let rev: Word = w.iter().rev().copied().collect();
            let sign = if w.len() % 2 == 0 { 1 } else { -1 };
            for (v, r) in self.order.normal_form_word(&rev) {
                u.add_term(v, c.scale_rational(&(r * scalar::int(sign))));
            }
        }
        u
    }

    /// Applies the algebra homomorphism of `U(𝔞 ⊕ 𝔫)` given by
    /// `h_i ↦ h_i + λ_i`, `e_α ↦ e_α`.
    pub fn tau_translate(&self, lambda: &[NuPolynomial]) -> Result<Self> {
        let rank = self.order.rank();
        if lambda.len() != rank {
            return Err(Error::Dimension {
                expected: rank,
                got: lambda.len(),
            });
        }
        for w in self.terms.keys() {
            for &l in w {
                let def = self.order.letter(l);
                if !matches!(def.part, Part::Cartan | Part::PositiveNilpotent) {
                    return Err(Error::DomainViolation(def.label.clone()));
                }
            }
        }
        let images: Vec<Self> = (0..self.order.len() as Letter)
            .map(|l| {
                let x = Self::letter(&self.order, l);
                match self.order.letter(l).cartan {
                    Some(i) => &x + &Self::scalar(&self.order, lambda[i].clone()),
                    None => x,
                }
            })
            .collect();
        let mut u = Self::zero(&self.order);
        for (w, c) in &self.terms {
            let mut prod = Self::scalar(&self.order, c.clone());
            for &l in w.iter().rev() {
                prod = &images[l as usize] * &prod;
            }
            u = &u + &prod;
        }
        Ok(u)
    }

    /// Compact rendering such as `H²-2H+4X₊²-4X₊W`.
    pub fn pretty(&self) -> String {
        let names: Vec<String> = (1..=self.order.rank()).map(|i| format!("ν{i}")).collect();
        self.pretty_with(&names)
    }

    /// As [`pretty`](Self::pretty), naming the coefficient variables `names`.
    pub fn pretty_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let sep = if self.order.algebra().matrix_size() == 2 { "" } else { "·" };
        let mut entries: Vec<(&Word, &NuPolynomial)> = self.terms.iter().collect();
        entries.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| b.0.cmp(a.0)));
        let mut out = String::new();
        for (k, (w, c)) in entries.into_iter().enumerate() {
            let mono = self.pretty_word(w, sep);
            let (neg, body) = if c.is_constant() {
                let z = c.constant_term();
                let simple = z.im.is_zero() || z.re.is_zero();
                let lead_neg = if z.im.is_zero() { z.re < Rational::zero() } else { z.re.is_zero() && z.im < Rational::zero() };
                if simple && lead_neg {
                    (true, coefficient_body(&-z, &mono))
                } else {
                    (false, coefficient_body(&z, &mono))
                }
            } else {
                let p = format!("({})", c.display_with(names));
                (false, if mono.is_empty() { p } else { format!("{p}{mono}") })
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            out.push_str(&body);
        }
        out
    }

    fn pretty_word(&self, w: &[Letter], sep: &str) -> String {
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = &self.order.letter(w[i]).pretty;
            parts.push(if j - i == 1 { name.clone() } else { format!("{}{}", name, superscript(j - i)) });
            i = j;
        }
        parts.join(sep)
    }
}

fn coefficient_body(z: &Gaussian, mono: &str) -> String {
    let s = scalar::pretty_gaussian(z);
    let paren = !z.re.is_zero() && !z.im.is_zero();
    if mono.is_empty() {
        return if paren { format!("({s})") } else { s };
    }
    if s == "1" {
        mono.to_string()
    } else if paren {
        format!("({s}){mono}")
    } else {
        format!("{s}{mono}")
    }
}

fn superscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    k.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

impl fmt::Debug for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.order.describe(), self.pretty())
    }
}

impl fmt::Display for UeaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

// Operator forms panic on mismatched orders; the `try_*`/`multiply`
// methods report it as an error instead.

impl Add for &UeaElement {
    type Output = UeaElement;
    fn add(self, rhs: &UeaElement) -> UeaElement {
        self.try_add(rhs).expect("order mismatch")
    }
}

impl Sub for &UeaElement {
    type Output = UeaElement;
    fn sub(self, rhs: &UeaElement) -> UeaElement {
        self.try_sub(rhs).expect("order mismatch")
    }
}

impl Mul for &UeaElement {
    type Output = UeaElement;
    fn mul(self, rhs: &UeaElement) -> UeaElement {
        self.multiply(rhs).expect("order mismatch")
    }
}

impl Neg for &UeaElement {
    type Output = UeaElement;
    fn neg(self) -> UeaElement {
        UeaElement {
            order: Arc::clone(&self.order),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}
