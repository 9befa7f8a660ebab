//! Exact scalars: arbitrary-precision rationals and Gaussian rationals `ℚ(i)`.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Element of `ℚ(i)`, stored as (real, imaginary) parts.
pub type Gaussian = Complex<Rational>;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn gauss(re: Rational, im: Rational) -> Gaussian {
    Complex::new(re, im)
}

pub fn gauss_int(re: i64, im: i64) -> Gaussian {
    Complex::new(int(re), int(im))
}

pub fn real(r: Rational) -> Gaussian {
    Complex::new(r, Rational::zero())
}

/// The imaginary unit.
pub fn i_unit() -> Gaussian {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn is_real(z: &Gaussian) -> bool {
    z.im.is_zero()
}

/// Inverse of a nonzero Gaussian rational.
pub fn ginv(z: &Gaussian) -> Gaussian {
    let n = &z.re * &z.re + &z.im * &z.im;
    Complex::new(&z.re / &n, -(&z.im / &n))
}

/// Always `p/q`, including `/1`, so the wire format has one shape.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Parses a numeric Gaussian literal such as `2i`, `-1/2`, `3+2i`, `1/2-3/4i`, `i`.
pub fn parse_gaussian(s: &str) -> Result<Gaussian> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    let bad = || Error::Parse(format!("malformed number {s:?}"));
    // split into a real and an imaginary summand at a sign that is not leading
    let split = t
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (a, b) = match split {
        Some(i) if t.ends_with('i') => (&t[..i], &t[i..]),
        _ => ("", t.as_str()),
    };
    let mut z = Gaussian::zero();
    for part in [a, b] {
        if part.is_empty() {
            continue;
        }
        if let Some(body) = part.strip_suffix('i') {
            let body = match body {
                "" | "+" => "1",
                "-" => "-1",
                other => other,
            };
            let body = body.strip_prefix('+').unwrap_or(body);
            z.im += parse_rational(body).map_err(|_| bad())?;
        } else {
            let body = part.strip_prefix('+').unwrap_or(part);
            z.re += parse_rational(body).map_err(|_| bad())?;
        }
    }
    Ok(z)
}

fn pretty_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Human-readable rendering: `3`, `-1/2`, `2i`, `1+2i`.
pub fn pretty_gaussian(z: &Gaussian) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => pretty_rational(&z.re),
        (true, false) => imag_part(&z.im),
        (false, false) => {
            let im = imag_part(&z.im);
            if z.im.is_negative() {
                format!("{}{}", pretty_rational(&z.re), im)
            } else {
                format!("{}+{}", pretty_rational(&z.re), im)
            }
        }
    }
}

fn imag_part(im: &Rational) -> String {
    if im.is_one() {
        "i".into()
    } else if (-im).is_one() {
        "-i".into()
    } else {
        format!("{}i", pretty_rational(im))
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn to_c64(z: &Gaussian) -> Complex<f64> {
    Complex::new(to_f64(&z.re), to_f64(&z.im))
}

/// `max(|re|, |im|)`, used as an exact size measure in residual reports.
pub fn gauss_size(z: &Gaussian) -> Rational {
    let a = z.re.abs();
    let b = z.im.abs();
    if a > b {
        a
    } else {
        b
    }
}
