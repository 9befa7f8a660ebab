use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::Zero;

use crate::nupoly::NuPolynomial;
use crate::scalar::{self, gauss, Gaussian, Rational};

/// Finite Fourier series `Σ c_n e^{2inθ}` on `M\K`, coefficients polynomial in `ν`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigPolynomial {
    nvars: usize,
    modes: BTreeMap<i64, NuPolynomial>,
}

impl TrigPolynomial {
    pub fn zero(nvars: usize) -> Self {
        TrigPolynomial {
            nvars,
            modes: BTreeMap::new(),
        }
    }

    /// The spherical vector `φ₀ = 1`.
    pub fn one(nvars: usize) -> Self {
        Self::mode(nvars, 0)
    }

    /// `e^{2inθ}`.
    pub fn mode(nvars: usize, n: i64) -> Self {
        let mut t = Self::zero(nvars);
        t.add_mode(n, NuPolynomial::one(nvars));
        t
    }

    pub fn from_modes(nvars: usize, modes: impl IntoIterator<Item = (i64, NuPolynomial)>) -> Self {
        let mut t = Self::zero(nvars);
        for (n, c) in modes {
            t.add_mode(n, c);
        }
        t
    }

    /// Constant-coefficient series from Gaussian rationals.
    pub fn from_gaussian(nvars: usize, modes: impl IntoIterator<Item = (i64, Gaussian)>) -> Self {
        Self::from_modes(nvars, modes.into_iter().map(|(n, c)| (n, NuPolynomial::constant(nvars, c))))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn modes(&self) -> &BTreeMap<i64, NuPolynomial> {
        &self.modes
    }

    pub fn coeff(&self, n: i64) -> NuPolynomial {
        self.modes
            .get(&n)
            .cloned()
            .unwrap_or_else(|| NuPolynomial::zero(self.nvars))
    }

    pub fn add_mode(&mut self, n: i64, c: NuPolynomial) {
        if c.is_zero() {
            return;
        }
        let sum = match self.modes.remove(&n) {
            Some(x) => x + c,
            None => c,
        };
        if !sum.is_zero() {
            self.modes.insert(n, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    /// Largest `|n|` present.
    pub fn max_frequency(&self) -> i64 {
        self.modes.keys().map(|n| n.abs()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &NuPolynomial) -> Self {
        Self::from_modes(self.nvars, self.modes.iter().map(|(&n, x)| (n, x * c)))
    }

    pub fn scale_gaussian(&self, c: &Gaussian) -> Self {
        Self::from_modes(self.nvars, self.modes.iter().map(|(&n, x)| (n, x.scale(c))))
    }

    /// `d/dθ`: mode `n` picks up `2in`.
    pub fn derivative(&self) -> Self {
        Self::from_modes(
            self.nvars,
            self.modes
                .iter()
                .map(|(&n, x)| (n, x.scale(&scalar::gauss_int(0, 2 * n)))),
        )
    }

    /// `f̄`: mode `n` of the result is the conjugate of mode `−n`.
    pub fn conj(&self) -> Self {
        Self::from_modes(self.nvars, self.modes.iter().map(|(&n, x)| (-n, x.conj())))
    }

    /// `δ(f) = f(0)`, the sum of the coefficients.
    pub fn value_at_identity(&self) -> NuPolynomial {
        self.modes
            .values()
            .fold(NuPolynomial::zero(self.nvars), |acc, c| acc + c.clone())
    }

    /// Largest coefficient size over all modes and all `ν`-monomials.
    pub fn max_coeff_size(&self) -> Rational {
        self.modes
            .values()
            .map(NuPolynomial::max_coeff_size)
            .max()
            .unwrap_or_else(Rational::zero)
    }

    /// Numeric value at angle `θ` with the `ν`-coordinates set to `nu`.
    pub fn evaluate(&self, theta: f64, nu: &[Complex<f64>]) -> Complex<f64> {
        self.modes
            .iter()
            .map(|(&n, c)| eval_c64(c, nu) * Complex::from_polar(1.0, 2.0 * n as f64 * theta))
            .sum()
    }

    pub fn cos2(nvars: usize) -> Self {
        let h = gauss(scalar::rat(1, 2), Rational::zero());
        Self::from_gaussian(nvars, [(1, h.clone()), (-1, h)])
    }

    pub fn sin2(nvars: usize) -> Self {
        // (e^{2iθ} − e^{−2iθ}) / 2i
        Self::from_gaussian(
            nvars,
            [
                (1, gauss(Rational::zero(), scalar::rat(-1, 2))),
                (-1, gauss(Rational::zero(), scalar::rat(1, 2))),
            ],
        )
    }

    /// `sin²θ = (1 − cos 2θ)/2`.
    pub fn sin_sq(nvars: usize) -> Self {
        let q = gauss(scalar::rat(-1, 4), Rational::zero());
        Self::from_gaussian(
            nvars,
            [(0, gauss(scalar::rat(1, 2), Rational::zero())), (1, q.clone()), (-1, q)],
        )
    }

    /// `cos²θ = (1 + cos 2θ)/2`.
    pub fn cos_sq(nvars: usize) -> Self {
        let q = gauss(scalar::rat(1, 4), Rational::zero());
        Self::from_gaussian(
            nvars,
            [(0, gauss(scalar::rat(1, 2), Rational::zero())), (1, q.clone()), (-1, q)],
        )
    }
}

/// Floating evaluation of a `ν`-polynomial.
pub fn eval_c64(p: &NuPolynomial, nu: &[Complex<f64>]) -> Complex<f64> {
    p.terms()
        .map(|(e, c)| {
            e.iter()
                .zip(nu)
                .fold(scalar::to_c64(c), |acc, (&k, x)| acc * x.powu(k))
        })
        .sum()
}

impl<'a> Add<&'a TrigPolynomial> for &'a TrigPolynomial {
    type Output = TrigPolynomial;
    fn add(self, rhs: &TrigPolynomial) -> TrigPolynomial {
        let mut out = self.clone();
        for (&n, c) in &rhs.modes {
            out.add_mode(n, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a TrigPolynomial> for &'a TrigPolynomial {
    type Output = TrigPolynomial;
    fn sub(self, rhs: &TrigPolynomial) -> TrigPolynomial {
        self + &-rhs
    }
}

impl Neg for &TrigPolynomial {
    type Output = TrigPolynomial;
    fn neg(self) -> TrigPolynomial {
        TrigPolynomial::from_modes(self.nvars, self.modes.iter().map(|(&n, c)| (n, -c)))
    }
}

impl<'a> Mul<&'a TrigPolynomial> for &'a TrigPolynomial {
    type Output = TrigPolynomial;
    fn mul(self, rhs: &TrigPolynomial) -> TrigPolynomial {
        let mut out = TrigPolynomial::zero(self.nvars);
        for (&n, a) in &self.modes {
            for (&m, b) in &rhs.modes {
                out.add_mode(n + m, a * b);
            }
        }
        out
    }
}

impl fmt::Display for TrigPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.modes.is_empty() {
            return write!(f, "0");
        }
        let names = NuPolynomial::default_names(self.nvars);
        let parts: Vec<String> = self
            .modes
            .iter()
            .map(|(n, c)| format!("({})e[{n}]", c.display_with(&names)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
