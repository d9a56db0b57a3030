use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::{ExactRational, Precision};
use crate::{Error, Result};

/// Arbitrary-precision binary floating value tagged with the decimal
/// precision it was produced at.
///
/// Binary operations between values of different precision produce a result
/// at the larger of the two. Every operation rounds to nearest once.
#[derive(Clone, Debug)]
pub struct BigReal {
    value: Float,
    precision: Precision,
}

impl BigReal {
    pub(crate) fn from_float(mut value: Float, precision: Precision) -> Self {
        debug_assert!(value.is_finite(), "BigReal must be finite");
        if value.prec() != precision.bits() {
            value.set_prec(precision.bits());
        }
        BigReal { value, precision }
    }

    pub(crate) fn from_rug_rational(value: &Rational, precision: Precision) -> Self {
        BigReal {
            value: Float::with_val(precision.bits(), value),
            precision,
        }
    }

    pub(crate) fn as_float(&self) -> &Float {
        &self.value
    }

    pub fn zero(precision: Precision) -> Self {
        BigReal {
            value: Float::new(precision.bits()),
            precision,
        }
    }

    pub fn one(precision: Precision) -> Self {
        Self::from_i64(1, precision)
    }

    pub fn from_i64(v: i64, precision: Precision) -> Self {
        BigReal {
            value: Float::with_val(precision.bits(), v),
            precision,
        }
    }

    pub fn from_u64(v: u64, precision: Precision) -> Self {
        BigReal {
            value: Float::with_val(precision.bits(), v),
            precision,
        }
    }

    pub fn from_rational(v: &ExactRational, precision: Precision) -> Self {
        Self::from_rug_rational(v.as_rug(), precision)
    }

    /// Parses a decimal literal such as `-1.25e-3`, correctly rounded.
    pub fn parse(s: &str, precision: Precision) -> Result<Self> {
        let t = s.trim();
        let ok_chars = !t.is_empty()
            && t.chars().any(|c| c.is_ascii_digit())
            && t
                .chars()
                .all(|c| c.is_ascii_digit() || matches!(c, '.' | '-' | '+' | 'e' | 'E'));
        if !ok_chars {
            return Err(Error::parse(s, "not a decimal number"));
        }
        let parsed = Float::parse(t).map_err(|e| Error::parse(s, e.to_string()))?;
        let value = Float::with_val(precision.bits(), parsed);
        if !value.is_finite() {
            return Err(Error::parse(s, "value is not finite"));
        }
        Ok(BigReal { value, precision })
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Rounds (or widens) to another precision.
    pub fn with_precision(&self, precision: Precision) -> BigReal {
        Self::from_float(self.value.clone(), precision)
    }

    /// The exact dyadic rational this value represents.
    pub fn to_exact(&self) -> ExactRational {
        ExactRational::from_rug(self.exact())
    }

    fn exact(&self) -> Rational {
        self.value.to_rational().expect("BigReal is always finite")
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn signum(&self) -> Ordering {
        self.value.cmp0().unwrap_or(Ordering::Equal)
    }

    fn unary(&self, f: impl FnOnce(Float) -> Float) -> BigReal {
        BigReal {
            value: f(self.value.clone()),
            precision: self.precision,
        }
    }

    pub fn abs(&self) -> BigReal {
        self.unary(Float::abs)
    }

    pub fn exp(&self) -> BigReal {
        self.unary(Float::exp)
    }

    pub fn atan(&self) -> BigReal {
        self.unary(Float::atan)
    }

    pub fn sqrt(&self) -> Result<BigReal> {
        if self.signum() == Ordering::Less {
            return Err(Error::Domain("square root of a negative number".into()));
        }
        Ok(self.unary(Float::sqrt))
    }

    pub fn ln(&self) -> Result<BigReal> {
        if self.signum() != Ordering::Greater {
            return Err(Error::Domain("logarithm of a non-positive number".into()));
        }
        Ok(self.unary(Float::ln))
    }

    pub fn log10(&self) -> Result<BigReal> {
        if self.signum() != Ordering::Greater {
            return Err(Error::Domain("logarithm of a non-positive number".into()));
        }
        Ok(self.unary(Float::log10))
    }

    pub fn recip(&self) -> Result<BigReal> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(self.unary(Float::recip))
    }

    pub fn powi(&self, exp: i32) -> Result<BigReal> {
        if exp < 0 && self.is_zero() {
            return Err(Error::Domain("negative power of zero".into()));
        }
        Ok(BigReal {
            value: Float::with_val(self.precision.bits(), (&self.value).pow(exp)),
            precision: self.precision,
        })
    }

    /// Real power `self^exp` for `self > 0`.
    pub fn pow(&self, exp: &BigReal) -> Result<BigReal> {
        if self.signum() != Ordering::Greater {
            return Err(Error::Domain("real power of a non-positive base".into()));
        }
        let p = self.precision.max(exp.precision);
        Ok(BigReal {
            value: Float::with_val(p.bits(), (&self.value).pow(&exp.value)),
            precision: p,
        })
    }

    /// `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &BigReal) -> Option<BigReal> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    pub fn mul_rational(&self, r: &ExactRational) -> BigReal {
        BigReal {
            value: Float::with_val(self.precision.bits(), &self.value * r.as_rug()),
            precision: self.precision,
        }
    }

    pub fn add_rational(&self, r: &ExactRational) -> BigReal {
        BigReal {
            value: Float::with_val(self.precision.bits(), &self.value + r.as_rug()),
            precision: self.precision,
        }
    }

    pub fn mul_i64(&self, k: i64) -> BigReal {
        BigReal {
            value: Float::with_val(self.precision.bits(), &self.value * k),
            precision: self.precision,
        }
    }

    pub fn div_i64(&self, k: i64) -> BigReal {
        assert!(k != 0, "BigReal division by zero");
        BigReal {
            value: Float::with_val(self.precision.bits(), &self.value / k),
            precision: self.precision,
        }
    }

    /// One unit in the last place of `self` at its precision (for `self = 0`
    /// the ulp of 1).
    pub fn ulp(&self) -> BigReal {
        let exp = self.value.get_exp().unwrap_or(1);
        let bits = self.precision.bits() as i32;
        let v = Float::with_val(self.precision.bits(), Float::i_exp(1, exp - bits));
        BigReal {
            value: v,
            precision: self.precision,
        }
    }

    /// Renders with `digits` significant decimal digits, rounding half to even.
    ///
    /// Magnitudes in `[1e-6, 1e9)` are written without an exponent; anything
    /// else uses `d.ddd…e±x`.
    pub fn to_sig_digits(&self, digits: u32) -> String {
        let digits = digits.max(1) as i64;
        if self.is_zero() {
            return format!("0.{}", "0".repeat((digits - 1).max(1) as usize));
        }
        let exact = self.exact();
        let neg = exact.cmp0() == Ordering::Less;
        let magnitude = exact.abs();
        let mut e = floor_log10(&magnitude);
        let mut m = round_half_even(&scale_pow10(&magnitude, digits - 1 - e));
        if m == pow10(digits) {
            m = pow10(digits - 1);
            e += 1;
        }
        let s = m.to_string();
        debug_assert_eq!(s.len() as i64, digits);
        let sign = if neg { "-" } else { "" };
        if (-6..=8).contains(&e) {
            if e >= 0 {
                let int_len = (e + 1) as usize;
                if s.len() <= int_len {
                    format!("{sign}{s}{}.0", "0".repeat(int_len - s.len()))
                } else {
                    format!("{sign}{}.{}", &s[..int_len], &s[int_len..])
                }
            } else {
                format!("{sign}0.{}{s}", "0".repeat((-e - 1) as usize))
            }
        } else {
            let tail = if s.len() > 1 { &s[1..] } else { "0" };
            format!("{sign}{}.{tail}e{e:+}", &s[..1])
        }
    }

    /// Renders with exactly `decimals` digits after the point, rounding half
    /// to even. Never uses an exponent.
    pub fn to_fixed(&self, decimals: u32) -> String {
        let exact = self.exact();
        let m = round_half_even(&scale_pow10(&exact, decimals as i64));
        let neg = m.cmp0() == Ordering::Less;
        let mut s = m.abs().to_string();
        let width = decimals as usize + 1;
        if s.len() < width {
            s = format!("{}{s}", "0".repeat(width - s.len()));
        }
        let sign = if neg { "-" } else { "" };
        if decimals == 0 {
            return format!("{sign}{s}");
        }
        let split = s.len() - decimals as usize;
        format!("{sign}{}.{}", &s[..split], &s[split..])
    }

    /// Canonical form at this value's own precision.
    pub fn to_canonical(&self) -> String {
        self.to_sig_digits(self.precision.digits())
    }
}

fn pow10(k: i64) -> Integer {
    Integer::from(Integer::u_pow_u(10, k as u32))
}

fn scale_pow10(r: &Rational, k: i64) -> Rational {
    if k >= 0 {
        Rational::from(r * pow10(k))
    } else {
        Rational::from(r / pow10(-k))
    }
}

/// Nearest integer with ties to even.
fn round_half_even(r: &Rational) -> Integer {
    let (mut q, rem) = r.numer().clone().div_rem_floor(r.denom().clone());
    let twice = rem * 2u32;
    match twice.cmp(r.denom()) {
        Ordering::Greater => q += 1,
        Ordering::Equal if q.is_odd() => q += 1,
        _ => {}
    }
    q
}

/// `floor(log10(r))` for `r > 0`, exact.
fn floor_log10(r: &Rational) -> i64 {
    let approx = Float::with_val(64, r).log10().to_f64().floor() as i64;
    let mut e = approx;
    let ge_pow = |e: i64| -> bool {
        if e >= 0 {
            *r >= pow10(e)
        } else {
            Rational::from(r * pow10(-e)) >= 1
        }
    };
    while !ge_pow(e) {
        e -= 1;
    }
    while ge_pow(e + 1) {
        e += 1;
    }
    e
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical())
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let precision = self.precision.max(rhs.precision);
                BigReal {
                    value: Float::with_val(precision.bits(), &self.value $op &rhs.value),
                    precision,
                }
            }
        }
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
        impl $tr<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);

impl Div<&BigReal> for &BigReal {
    type Output = BigReal;

    /// Panics on a zero divisor; see [`BigReal::checked_div`].
    fn div(self, rhs: &BigReal) -> BigReal {
        assert!(!rhs.is_zero(), "BigReal division by zero");
        let precision = self.precision.max(rhs.precision);
        BigReal {
            value: Float::with_val(precision.bits(), &self.value / &rhs.value),
            precision,
        }
    }
}

impl Div<BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: BigReal) -> BigReal {
        &self / &rhs
    }
}

impl Div<&BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        &self / rhs
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal {
            value: -self.value,
            precision: self.precision,
        }
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -self.clone()
    }
}
