use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{Method, PartialSums, TransformResult};
use crate::mpnum::{BigReal, Precision};
use crate::weights::{weight_condition, weight_row, CoefficientIndex};
use crate::{Error, Result};

/// Guard digits on top of the output digits and the cancellation `log10 Λ`.
const POLICY_GUARD_DIGITS: u32 = 15;

/// Working precision for `output_digits` at order `n` when rows up to
/// `j_max` are wanted: `D + ⌈log10 max_j Λ_j(n)⌉ + 15`.
pub fn working_precision(output_digits: u32, n: usize, j_max: usize) -> Result<Precision> {
    let mut worst = 0f64;
    for j in 0..=j_max.min(n) {
        worst = worst.max(weight_condition(n, CoefficientIndex::new(j)?)?.log10_abs());
    }
    Precision::new(output_digits + worst.ceil().max(0.0) as u32 + POLICY_GUARD_DIGITS)
}

/// One-step Neville: `𝒯_k = c_0(k)` for every `k`, plus `c_j(n)` for
/// `j ≤ j_max` at the top order. Each value is the exact weighted sum of the
/// inputs rounded once, so no precision is lost beyond what the inputs carry.
pub fn neville_one_step(s: &PartialSums, j_max: usize) -> Result<TransformResult> {
    let n = s.order();
    let j_max_index = CoefficientIndex::new(j_max)?;
    if j_max > n {
        return Err(Error::RowUndefined { n, j: j_max });
    }
    let p = s.precision();
    let estimates = (0..=n)
        .into_par_iter()
        .map(|k| Ok(weight_row(k, 0)?.apply(&s.values()[..=k], p)))
        .collect::<Result<Vec<BigReal>>>()?;
    let coefficients = (0..=j_max_index.get())
        .into_par_iter()
        .map(|j| Ok((j, weight_row(n, j)?.apply(s.values(), p))))
        .collect::<Result<BTreeMap<usize, BigReal>>>()?;
    let mut result = TransformResult::new(Method::NevilleOneStep, estimates, Vec::new());
    result.coefficients = Some(coefficients);
    Ok(result)
}

/// [`neville_one_step`] after checking that the input precision supports
/// `output_digits` correct digits at the top order.
pub fn neville_one_step_for_digits(s: &PartialSums, j_max: usize, output_digits: u32) -> Result<TransformResult> {
    let required = working_precision(output_digits, s.order(), j_max)?;
    let available = s.precision();
    if available < required {
        return Err(Error::PrecisionPolicy { required: required.digits(), available: available.digits() });
    }
    neville_one_step(s, j_max)
}

/// The three-term Neville recursion
/// `s^m_i = ((i+1) s^{m-1}_i − (i+1−m) s^{m-1}_{i-1}) / m`, `𝒯_m = s^m_m`.
pub fn neville_recursive(s: &PartialSums) -> TransformResult {
    let mut level: Vec<BigReal> = s.values().to_vec();
    let mut estimates = vec![level[0].clone()];
    for m in 1..level.len() {
        // level[i] holds s^{m-1}_i for i ≥ m-1; update from the top down.
        for i in (m..level.len()).rev() {
            let hi = level[i].mul_i64(i as i64 + 1);
            let lo = level[i - 1].mul_i64((i + 1 - m) as i64);
            level[i] = (hi - lo).div_i64(m as i64);
        }
        estimates.push(level[m].clone());
    }
    TransformResult::new(Method::NevilleRecursive, estimates, Vec::new())
}
