use super::{widen, Method, PartialSums, TransformFlag, TransformResult, NONLINEAR_GUARD_DIGITS};
use crate::mpnum::BigReal;

/// One Δ² step on `(x_0, x_1, x_2)`: `x_0 − (x_1 − x_0)² / (x_2 − 2x_1 + x_0)`.
fn delta_squared(x0: &BigReal, x1: &BigReal, x2: &BigReal) -> Option<BigReal> {
    let d = x1 - x0;
    let dd = x2 - x1.mul_i64(2) + x0;
    let corr = (&d * &d).checked_div(&dd)?;
    Some(x0 - corr)
}

/// Iterated Aitken Δ². Level `m` applies one Δ² sweep to level `m−1`, so
/// it is two elements shorter; `𝒯_n = A^{(⌊n/2⌋)}_{n−2⌊n/2⌋}`.
///
/// When a second difference vanishes the estimate falls back to the
/// deepest level still defined for that order, and the order is flagged.
pub fn aitken_iterated(s: &PartialSums) -> TransformResult {
    let out = s.precision();
    let work = out.plus(NONLINEAR_GUARD_DIGITS);
    let n = s.order();

    let mut levels: Vec<Vec<Option<BigReal>>> = vec![widen(s.values(), work).into_iter().map(Some).collect()];
    while levels.last().map_or(0, Vec::len) >= 3 {
        let prev = levels.last().expect("nonempty");
        let next = (0..prev.len() - 2)
            .map(|i| match (&prev[i], &prev[i + 1], &prev[i + 2]) {
                (Some(a), Some(b), Some(c)) => delta_squared(a, b, c),
                _ => None,
            })
            .collect();
        levels.push(next);
    }

    let mut estimates = Vec::with_capacity(n + 1);
    let mut flags = Vec::new();
    for t in 0..=n {
        let target = t / 2;
        let (depth, v) = (0..=target)
            .rev()
            .find_map(|m| levels[m][t - 2 * m].as_ref().map(|v| (m, v)))
            .expect("level 0 is always defined");
        if depth < target {
            flags.push(TransformFlag::Degenerate { order: t });
        }
        estimates.push(v.with_precision(out));
    }
    TransformResult::new(Method::AitkenIterated, estimates, flags)
}
