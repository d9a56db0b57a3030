//! Arbitrary-precision numbers and high-precision constants.
//!
//! Every floating value carries its own [`Precision`]; there is no ambient
//! precision state anywhere in the crate.

mod constants;
mod rational;
mod real;

pub use constants::{const_ln2, const_pi, const_zeta};
pub use rational::ExactRational;
pub use real::BigReal;

use crate::{Error, Result};

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Number of significant decimal digits carried by a [`BigReal`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision {
    decimal_digits: u32,
}

impl Precision {
    pub const MIN_DIGITS: u32 = 10;

    pub fn new(decimal_digits: u32) -> Result<Self> {
        if decimal_digits < Self::MIN_DIGITS {
            return Err(Error::PrecisionTooLow(decimal_digits));
        }
        Ok(Precision { decimal_digits })
    }

    pub fn digits(self) -> u32 {
        self.decimal_digits
    }

    /// Binary mantissa length backing this precision (a few guard bits
    /// above `digits · log2(10)`).
    pub fn bits(self) -> u32 {
        (self.decimal_digits as f64 * LOG2_10).ceil() as u32 + 4
    }

    pub fn plus(self, extra_digits: u32) -> Precision {
        Precision {
            decimal_digits: self.decimal_digits + extra_digits,
        }
    }
}

impl std::fmt::Display for Precision {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} digits", self.decimal_digits)
    }
}
