//! Multivariate polynomials over `ℚ(i)` in the Cartan coordinates `ν_1, …, ν_r`.
//!
//! The same type doubles as the ring of polynomial functions on `𝔞*`
//! (`U(𝔞) ≅ S(𝔞)`), with variable `i` read as `λ ↦ λ(h_i)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{self, Gaussian, Rational};

pub type Exponent = Vec<u32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NuPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, Gaussian>,
}

impl NuPolynomial {
    pub fn zero(nvars: usize) -> Self {
        NuPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Gaussian) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Gaussian::one())
    }

    pub fn rational(nvars: usize, c: Rational) -> Self {
        Self::constant(nvars, scalar::real(c))
    }

    /// The coordinate `ν_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Gaussian::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Exponent, Gaussian)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must match variable count");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Gaussian)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, e: Exponent, c: Gaussian) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coeff(&self, e: &[u32]) -> Gaussian {
        self.terms.get(e).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn constant_term(&self) -> Gaussian {
        self.coeff(&vec![0; self.nvars])
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous(&self, d: u32) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        NuPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        NuPolynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.clone(), Gaussian::new(&x.re * c, &x.im * c)))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Gaussian::from(scalar::int(e[i] as i64)));
        }
        out
    }

    pub fn evaluate(&self, point: &[Gaussian]) -> Gaussian {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Gaussian::zero();
        for (e, c) in &self.terms {
            let mut m = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    m *= x;
                }
            }
            acc += m;
        }
        acc
    }

    /// Substitutes `ν_i ↦ images[i]`; all images share a variable count.
    pub fn compose(&self, images: &[NuPolynomial]) -> NuPolynomial {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut out = NuPolynomial::zero(target);
        // powers of each image, cached per variable
        let mut powers: Vec<Vec<NuPolynomial>> = images
            .iter()
            .map(|p| vec![NuPolynomial::one(p.nvars)])
            .collect();
        for (e, c) in &self.terms {
            let mut m = NuPolynomial::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                m = &m * &powers[i][k as usize];
            }
            out = out + m;
        }
        out
    }

    /// Applies a linear change of coordinates `ν_i ↦ Σ_j m[i][j] ν_j`.
    pub fn linear_substitute(&self, m: &[Vec<Rational>]) -> NuPolynomial {
        let images: Vec<NuPolynomial> = m
            .iter()
            .map(|row| {
                let mut p = NuPolynomial::zero(self.nvars);
                for (j, c) in row.iter().enumerate() {
                    p = p + NuPolynomial::var(self.nvars, j).scale_rational(c);
                }
                p
            })
            .collect();
        self.compose(&images)
    }

    /// Complex conjugation of the coefficients.
    pub fn conj(&self) -> Self {
        NuPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.conj())).collect(),
        }
    }

    /// Largest `max(|re|, |im|)` over the coefficients.
    pub fn max_coeff_size(&self) -> Rational {
        self.terms
            .values()
            .map(scalar::gauss_size)
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Renders with variables named by `names`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        names[i].clone()
                    } else {
                        format!("{}^{}", names[i], k)
                    }
                })
                .collect();
            let coeff = scalar::pretty_gaussian(c);
            let needs_paren = !c.re.is_zero() && !c.im.is_zero();
            let coeff = if needs_paren { format!("({coeff})") } else { coeff };
            let term = if mono.is_empty() {
                coeff
            } else if c.is_one() {
                mono.join("*")
            } else if c == &(-Gaussian::one()) {
                format!("-{}", mono.join("*"))
            } else {
                format!("{}*{}", coeff, mono.join("*"))
            };
            parts.push(term);
        }
        let mut s = parts[0].clone();
        for p in &parts[1..] {
            if let Some(rest) = p.strip_prefix('-') {
                s.push_str(" - ");
                s.push_str(rest);
            } else {
                s.push_str(" + ");
                s.push_str(p);
            }
        }
        s
    }

    pub fn default_names(nvars: usize) -> Vec<String> {
        (1..=nvars).map(|i| format!("nu{i}")).collect()
    }
}

impl fmt::Debug for NuPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&Self::default_names(self.nvars)))
    }
}

impl fmt::Display for NuPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&Self::default_names(self.nvars)))
    }
}

impl<'a> Add<&'a NuPolynomial> for &'a NuPolynomial {
    type Output = NuPolynomial;
    fn add(self, rhs: &NuPolynomial) -> NuPolynomial {
        self.clone() + rhs.clone()
    }
}

impl Add for NuPolynomial {
    type Output = NuPolynomial;
    fn add(mut self, rhs: NuPolynomial) -> NuPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for NuPolynomial {
    type Output = NuPolynomial;
    fn neg(mut self) -> NuPolynomial {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &NuPolynomial {
    type Output = NuPolynomial;
    fn neg(self) -> NuPolynomial {
        -self.clone()
    }
}

impl Sub for NuPolynomial {
    type Output = NuPolynomial;
    fn sub(self, rhs: NuPolynomial) -> NuPolynomial {
        self + (-rhs)
    }
}

impl<'a> Sub<&'a NuPolynomial> for &'a NuPolynomial {
    type Output = NuPolynomial;
    fn sub(self, rhs: &NuPolynomial) -> NuPolynomial {
        self.clone() - rhs.clone()
    }
}

impl<'a> Mul<&'a NuPolynomial> for &'a NuPolynomial {
    type Output = NuPolynomial;
    fn mul(self, rhs: &NuPolynomial) -> NuPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = NuPolynomial::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Mul for NuPolynomial {
    type Output = NuPolynomial;
    fn mul(self, rhs: NuPolynomial) -> NuPolynomial {
        &self * &rhs
    }
}
