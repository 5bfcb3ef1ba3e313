//! Scalar abstraction shared by the solver, the tableau and the oracles.
//!
//! Everything numeric is generic over [`Scalar`] with two concrete modes:
//! binary floating point (`f64`, zero test against a small epsilon) and
//! exact rationals ([`Rational`], zero test exact).

use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar backend.
pub type Rational = num::BigRational;

pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;

    /// Parses a numeric literal. Accepts integers and decimal notation for
    /// both backends, and additionally `p/q` fractions in rational mode.
    fn parse(text: &str) -> Option<Self>;

    fn to_f64(&self) -> f64;
    fn abs(&self) -> Self;
    fn is_finite(&self) -> bool;

    /// Default zero tolerance for this backend: `1e-9` for floats, exact
    /// zero for rationals.
    fn default_epsilon() -> Self;

    fn is_zero_within(&self, eps: &Self) -> bool {
        self.abs() <= *eps
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn from_int(v: i64) -> Self {
        v as f64
    }

    fn parse(text: &str) -> Option<Self> {
        if let Some((num, den)) = text.split_once('/') {
            let num: f64 = num.trim().parse().ok()?;
            let den: f64 = den.trim().parse().ok()?;
            if den == 0.0 {
                return None;
            }
            return Some(num / den);
        }
        text.trim().parse().ok()
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn default_epsilon() -> Self {
        1e-9
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }

    fn one() -> Self {
        <Rational as One>::one()
    }

    fn from_int(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn parse(text: &str) -> Option<Self> {
        parse_rational(text.trim())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn is_finite(&self) -> bool {
        true
    }

    fn default_epsilon() -> Self {
        <Rational as Zero>::zero()
    }
}

/// Parses `p/q`, integer, decimal (`-1.25`) and scientific (`2.5e-3`)
/// notation into an exact rational. Decimal strings convert without any
/// binary rounding.
fn parse_rational(text: &str) -> Option<Rational> {
    if text.is_empty() {
        return None;
    }
    if let Some((num, den)) = text.split_once('/') {
        let num = parse_rational(num.trim())?;
        let den = parse_rational(den.trim())?;
        if Zero::is_zero(&den) {
            return None;
        }
        return Some(num / den);
    }
    let (mantissa, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return None;
    }
    let numer: BigInt = digits.parse().ok()?;
    let scale = frac_part.len() as i32 - exp;
    let ten = BigInt::from(10);
    let pow = num::pow::pow(ten, scale.unsigned_abs() as usize);
    Some(if scale >= 0 {
        Rational::new(numer, pow)
    } else {
        Rational::from_integer(numer * pow)
    })
}
