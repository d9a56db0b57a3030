use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use rug::ops::Pow;
use rug::{Integer, Rational};

use super::{BigReal, Precision};
use crate::{Error, Result};

/// Exact ratio of arbitrary-size integers, always in lowest terms with a
/// positive denominator.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRational(Rational);

impl ExactRational {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(ExactRational(Rational::from((numerator, denominator))))
    }

    pub fn from_integer(value: i64) -> Self {
        ExactRational(Rational::from(value))
    }

    pub fn zero() -> Self {
        ExactRational(Rational::new())
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub(crate) fn from_rug(value: Rational) -> Self {
        ExactRational(value)
    }

    pub(crate) fn from_parts(numerator: Integer, denominator: Integer) -> Self {
        ExactRational(Rational::from((numerator, denominator)))
    }

    pub(crate) fn as_rug(&self) -> &Rational {
        &self.0
    }

    /// Decimal string of the numerator (sign included).
    pub fn numerator(&self) -> String {
        self.0.numer().to_string()
    }

    /// Decimal string of the (positive) denominator.
    pub fn denominator(&self) -> String {
        self.0.denom().to_string()
    }

    pub(crate) fn numer_int(&self) -> &Integer {
        self.0.numer()
    }

    pub(crate) fn denom_int(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == Ordering::Equal
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denom() == 1
    }

    pub fn signum(&self) -> Ordering {
        self.0.cmp0()
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.clone().abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(ExactRational(self.0.clone().recip()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(ExactRational(Rational::from(&self.0 / &rhs.0)))
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i32) -> Result<Self> {
        if exp < 0 {
            return self.recip()?.pow(-exp);
        }
        let num = Integer::from(self.0.numer().pow(exp as u32));
        let den = Integer::from(self.0.denom().pow(exp as u32));
        Ok(Self::from_parts(num, den))
    }

    /// Correctly rounded conversion to a floating value.
    pub fn to_real(&self, p: Precision) -> BigReal {
        BigReal::from_rug_rational(&self.0, p)
    }

    /// Approximate base-10 logarithm of `|self|`, for sizing guard digits.
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let f = rug::Float::with_val(64, self.0.clone().abs());
        f.log10().to_f64()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    /// Accepts `p`, `p/q`, or a plain decimal such as `-1.25`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some((n, d)) = t.split_once('/') {
            let n: Integer = n.trim().parse().map_err(|_| Error::parse(s, "bad numerator"))?;
            let d: Integer = d.trim().parse().map_err(|_| Error::parse(s, "bad denominator"))?;
            if d == 0 {
                return Err(Error::parse(s, "zero denominator"));
            }
            return Ok(Self::from_parts(n, d));
        }
        if let Ok(i) = t.parse::<Integer>() {
            return Ok(ExactRational(Rational::from(i)));
        }
        parse_decimal(t).ok_or_else(|| Error::parse(s, "not a rational or decimal number"))
    }
}

fn parse_decimal(t: &str) -> Option<ExactRational> {
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let mut num: Integer = if digits.is_empty() { Integer::new() } else { digits.parse().ok()? };
    if neg {
        num = -num;
    }
    let scale = exp - frac_part.len() as i32;
    let r = if scale >= 0 {
        Rational::from(num * Integer::from(Integer::u_pow_u(10, scale as u32)))
    } else {
        Rational::from((num, Integer::from(Integer::u_pow_u(10, (-scale) as u32))))
    };
    Some(ExactRational(r))
}

macro_rules! rational_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(Rational::from(&self.0 $op &rhs.0))
            }
        }
        impl $tr<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0 $op rhs.0)
            }
        }
        impl $tr<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(self.0 $op &rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);

impl Div<&ExactRational> for &ExactRational {
    type Output = ExactRational;

    /// Panics on a zero divisor, like integer division; see
    /// [`ExactRational::checked_div`].
    fn div(self, rhs: &ExactRational) -> ExactRational {
        assert!(!rhs.is_zero(), "ExactRational division by zero");
        ExactRational(Rational::from(&self.0 / &rhs.0))
    }
}

impl Div<ExactRational> for ExactRational {
    type Output = ExactRational;
    fn div(self, rhs: ExactRational) -> ExactRational {
        &self / &rhs
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(Rational::from(-&self.0))
    }
}

impl std::iter::Sum for ExactRational {
    fn sum<I: Iterator<Item = ExactRational>>(iter: I) -> Self {
        iter.fold(ExactRational::zero(), |acc, x| acc + x)
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        ExactRational::from_integer(v)
    }
}
