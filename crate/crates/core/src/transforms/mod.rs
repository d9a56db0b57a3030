//! Sequence transformations over partial sums, and the χ diagnostic.

mod aitken;
mod neville;
mod wynn;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

pub use aitken::aitken_iterated;
pub use neville::{neville_one_step, neville_one_step_for_digits, neville_recursive, working_precision};
pub use wynn::wynn_epsilon;

use crate::mpnum::{BigReal, Precision};
use crate::{Error, Result};

/// Digits carried beyond the input precision inside the nonlinear methods.
pub(crate) const NONLINEAR_GUARD_DIGITS: u32 = 10;

/// Partial sums `s_0 … s_n`, all at one precision.
#[derive(Clone, Debug)]
pub struct PartialSums {
    values: Vec<BigReal>,
    precision: Precision,
    origin: Option<String>,
}

impl PartialSums {
    pub fn new(values: Vec<BigReal>) -> Result<Self> {
        let precision = values
            .first()
            .ok_or_else(|| Error::InvalidArgument("partial sums must be nonempty".into()))?
            .precision();
        if values.iter().any(|v| v.precision() != precision) {
            return Err(Error::InvalidArgument("partial sums must share one precision".into()));
        }
        Ok(PartialSums { values, precision, origin: None })
    }

    /// Accumulates terms `a_0 … a_n` into partial sums.
    pub fn from_terms(terms: &[BigReal]) -> Result<Self> {
        let mut acc: Option<BigReal> = None;
        let values = terms
            .iter()
            .map(|a| {
                let next = match acc.take() {
                    Some(s) => s + a,
                    None => a.clone(),
                };
                acc = Some(next.clone());
                next
            })
            .collect();
        Self::new(values)
    }

    pub fn with_origin(mut self, origin: impl Into<String>) -> Self {
        self.origin = Some(origin.into());
        self
    }

    pub fn values(&self) -> &[BigReal] {
        &self.values
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn origin(&self) -> Option<&str> {
        self.origin.as_deref()
    }

    /// Highest index `n`.
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    /// `s_0 … s_order`.
    pub fn prefix(&self, order: usize) -> PartialSums {
        PartialSums {
            values: self.values[..=order.min(self.order())].to_vec(),
            precision: self.precision,
            origin: self.origin.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    NevilleOneStep,
    NevilleRecursive,
    WynnEpsilon,
    AitkenIterated,
}

impl Method {
    pub const ALL: [Method; 4] =
        [Method::NevilleOneStep, Method::NevilleRecursive, Method::WynnEpsilon, Method::AitkenIterated];

    pub fn name(self) -> &'static str {
        match self {
            Method::NevilleOneStep => "neville-one-step",
            Method::NevilleRecursive => "neville-recursive",
            Method::WynnEpsilon => "wynn-epsilon",
            Method::AitkenIterated => "aitken-iterated",
        }
    }

    /// Runs the method with default settings (no coefficient rows).
    pub fn apply(self, s: &PartialSums) -> Result<TransformResult> {
        match self {
            Method::NevilleOneStep => neville_one_step(s, 0),
            Method::NevilleRecursive => Ok(neville_recursive(s)),
            Method::WynnEpsilon => Ok(wynn_epsilon(s)),
            Method::AitkenIterated => Ok(aitken_iterated(s)),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::parse(s, "unknown method"))
    }
}

/// Irregular events while building a table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformFlag {
    /// A zero divisor in the ε table; the previous estimate was carried.
    Saturated { order: usize },
    /// A zero second difference; the estimate comes from a shallower level.
    Degenerate { order: usize },
}

#[derive(Clone, Debug)]
pub struct TransformResult {
    pub method: Method,
    /// `𝒯_0 … 𝒯_n`.
    pub estimates: Vec<BigReal>,
    /// `χ(0) … χ(n-1)`; `None` where consecutive estimates coincide.
    pub chi: Vec<Option<BigReal>>,
    /// `c_j(n)` at the top order (one-step Neville only).
    pub coefficients: Option<BTreeMap<usize, BigReal>>,
    pub flags: Vec<TransformFlag>,
}

impl TransformResult {
    pub(crate) fn new(method: Method, estimates: Vec<BigReal>, flags: Vec<TransformFlag>) -> Self {
        let chi = chi_of(&estimates);
        TransformResult { method, estimates, chi, coefficients: None, flags }
    }

    pub fn order(&self) -> usize {
        self.estimates.len() - 1
    }

    pub fn last(&self) -> &BigReal {
        self.estimates.last().expect("estimates are nonempty")
    }

    /// CSV with columns `order,estimate,chi`, estimates to `decimals`
    /// places; the last row has no χ.
    pub fn to_csv(&self, decimals: u32) -> String {
        let mut out = String::from("order,estimate,chi\n");
        for (k, t) in self.estimates.iter().enumerate() {
            let chi = self.chi.get(k).cloned().flatten().map(|c| format_chi(&c)).unwrap_or_default();
            out.push_str(&format!("{k},{},{chi}\n", t.to_fixed(decimals)));
        }
        out
    }

    /// CSV with columns `j,value`, values to `decimals` places.
    pub fn coefficients_csv(&self, decimals: u32) -> String {
        let mut out = String::from("j,value\n");
        for (j, c) in self.coefficients.iter().flatten() {
            out.push_str(&format!("{j},{}\n", c.to_fixed(decimals)));
        }
        out
    }
}

/// χ rendered with six decimals.
pub fn format_chi(chi: &BigReal) -> String {
    chi.to_fixed(6)
}

/// `χ(k) = log10 |𝒯_k − 𝒯_{k+1}|` for every `k` of `t`.
pub fn chi_diagnostic(t: &TransformResult) -> Vec<Option<BigReal>> {
    chi_of(&t.estimates)
}

/// `χ` over a plain list of values.
pub fn chi_of(estimates: &[BigReal]) -> Vec<Option<BigReal>> {
    estimates
        .windows(2)
        .map(|w| {
            let d = (&w[0] - &w[1]).abs();
            d.log10().ok()
        })
        .collect()
}

/// Raises every value to `precision` (exact; only adds zero bits).
pub(crate) fn widen(values: &[BigReal], precision: Precision) -> Vec<BigReal> {
    values.iter().map(|v| v.with_precision(precision)).collect()
}
