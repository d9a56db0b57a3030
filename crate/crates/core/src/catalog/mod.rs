//! The concrete input series: the arctan model series, the hydrogen
//! Bethe-logarithm series, and user-supplied term lists.

mod bethe;
mod model;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

pub use bethe::{
    bethe_constant, bethe_logarithm, bethe_logarithm_at_order, bethe_series, BetheEvaluation, BetheForm,
    BetheState, BETHE_MAX_DECIMALS, BETHE_MAX_ORDER, BETHE_START_ORDER,
};
pub use model::model_series;

use crate::mpnum::{const_pi, BigReal, ExactRational, Precision};
use crate::transforms::PartialSums;
use crate::{Error, Result};

/// Exact value of a subleading coefficient: `rational + over_pi / π`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub rational: ExactRational,
    pub over_pi: ExactRational,
}

impl ClosedForm {
    pub fn rational(q: ExactRational) -> Self {
        ClosedForm { rational: q, over_pi: ExactRational::zero() }
    }

    pub fn with_pi(rational: ExactRational, over_pi: ExactRational) -> Self {
        ClosedForm { rational, over_pi }
    }

    pub fn value(&self, p: Precision) -> BigReal {
        let work = p.plus(5);
        let pi = const_pi(work);
        let v = self.rational.to_real(work) + self.over_pi.to_real(work) / pi;
        v.with_precision(p)
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.over_pi.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "({})/pi", self.over_pi),
            (false, false) => write!(f, "{} + ({})/pi", self.rational, self.over_pi),
        }
    }
}

/// A published decimal value and where it comes from.
#[derive(Clone, Debug)]
pub struct KnownLimit {
    pub decimal: &'static str,
    pub provenance: &'static str,
}

impl KnownLimit {
    pub fn value(&self, p: Precision) -> BigReal {
        BigReal::parse(self.decimal, p).expect("catalog decimals are well formed")
    }
}

pub type TermFn = dyn Fn(u64, Precision) -> Result<BigReal> + Send + Sync;

/// A series `Σ_{k ≥ first_index} a_k` given by its term generator.
#[derive(Clone)]
pub struct SeriesSpec {
    name: String,
    term: Arc<TermFn>,
    first_index: u64,
    known_limit: Option<KnownLimit>,
    known_coeffs: BTreeMap<usize, ClosedForm>,
}

impl fmt::Debug for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesSpec")
            .field("name", &self.name)
            .field("first_index", &self.first_index)
            .field("known_limit", &self.known_limit)
            .field("known_coeffs", &self.known_coeffs)
            .finish_non_exhaustive()
    }
}

impl SeriesSpec {
    pub fn new(
        name: impl Into<String>,
        first_index: u64,
        term: impl Fn(u64, Precision) -> Result<BigReal> + Send + Sync + 'static,
    ) -> Self {
        SeriesSpec {
            name: name.into(),
            term: Arc::new(term),
            first_index,
            known_limit: None,
            known_coeffs: BTreeMap::new(),
        }
    }

    pub fn with_known_limit(mut self, limit: KnownLimit) -> Self {
        self.known_limit = Some(limit);
        self
    }

    pub fn with_known_coeffs(mut self, coeffs: BTreeMap<usize, ClosedForm>) -> Self {
        self.known_coeffs = coeffs;
        self
    }

    /// A series whose terms are a fixed list, starting at `k = 0`.
    pub fn from_terms(name: impl Into<String>, terms: Vec<BigReal>) -> Self {
        SeriesSpec::new(name, 0, move |k, p| {
            terms.get(k as usize).map(|t| t.with_precision(p)).ok_or(Error::TermUnavailable(k))
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn first_index(&self) -> u64 {
        self.first_index
    }

    pub fn known_limit(&self) -> Option<&KnownLimit> {
        self.known_limit.as_ref()
    }

    pub fn known_coeffs(&self) -> &BTreeMap<usize, ClosedForm> {
        &self.known_coeffs
    }

    /// `a_k` for `k ≥ first_index`.
    pub fn term(&self, k: u64, p: Precision) -> Result<BigReal> {
        if k < self.first_index {
            return Err(Error::TermUnavailable(k));
        }
        (self.term)(k, p)
    }

    /// The first `count` terms, computed in parallel.
    pub fn terms(&self, count: usize, p: Precision) -> Result<Vec<BigReal>> {
        (0..count as u64)
            .into_par_iter()
            .map(|i| self.term(self.first_index + i, p))
            .collect()
    }

    /// `s_0 … s_order`, re-indexed so that `s_0` is the first term.
    pub fn partial_sums(&self, order: usize, p: Precision) -> Result<PartialSums> {
        Ok(PartialSums::from_terms(&self.terms(order + 1, p)?)?.with_origin(self.name.clone()))
    }
}

/// Parses one decimal per line; blank lines and `#` comments are skipped.
/// Errors name the 1-based line number.
pub fn parse_decimal_lines(text: &str, p: Precision) -> Result<Vec<BigReal>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v = BigReal::parse(line, p)
            .map_err(|_| Error::parse(line, format!("line {}: not a decimal number", idx + 1)))?;
        out.push(v);
    }
    if out.is_empty() {
        return Err(Error::parse(text.lines().next().unwrap_or(""), "no values found"));
    }
    Ok(out)
}

/// Precision a decimal file carries: the most significant digits written
/// on any line. Shorter entries such as `0.5` are taken as exact.
pub fn input_digits(text: &str) -> u32 {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(significant_digits)
        .max()
        .unwrap_or(0)
}

fn significant_digits(s: &str) -> u32 {
    let mantissa = s.split(['e', 'E']).next().unwrap_or("");
    let digits: String = mantissa.chars().filter(char::is_ascii_digit).collect();
    let trimmed = digits.trim_start_matches('0');
    if trimmed.is_empty() {
        0
    } else {
        trimmed.len() as u32
    }
}
