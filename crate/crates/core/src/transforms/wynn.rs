use super::{widen, Method, PartialSums, TransformFlag, TransformResult, NONLINEAR_GUARD_DIGITS};
use crate::mpnum::BigReal;

/// Wynn's ε algorithm,
/// `ε_{k+1}^{(m)} = ε_{k-1}^{(m+1)} + 1/(ε_k^{(m+1)} − ε_k^{(m)})`,
/// with `ε_{-1} = 0`, `ε_0^{(m)} = s_m`, and `𝒯_n = ε_{2⌊n/2⌋}^{(n−2⌊n/2⌋)}`,
/// the deepest even column reachable from `s_0 … s_n`.
///
/// A zero difference saturates the entry; entries built on it stay
/// saturated and the previous estimate is carried forward.
pub fn wynn_epsilon(s: &PartialSums) -> TransformResult {
    let out = s.precision();
    let work = out.plus(NONLINEAR_GUARD_DIGITS);
    let values = widen(s.values(), work);
    let n = s.order();

    // columns[k][m] = ε_k^{(m)}, k = 0..=n, m = 0..=n-k
    let mut columns: Vec<Vec<Option<BigReal>>> = vec![values.into_iter().map(Some).collect()];
    let zero = BigReal::zero(work);
    for k in 0..n {
        let cur = &columns[k];
        let next: Vec<Option<BigReal>> = (0..cur.len() - 1)
            .map(|m| {
                let prev = if k == 0 { Some(zero.clone()) } else { columns[k - 1][m + 1].clone() };
                let (a, b, prev) = (cur[m + 1].as_ref()?, cur[m].as_ref()?, prev?);
                let diff = a - b;
                let inv = diff.recip().ok()?;
                Some(prev + inv)
            })
            .collect();
        columns.push(next);
    }

    let mut estimates: Vec<BigReal> = Vec::with_capacity(n + 1);
    let mut flags = Vec::new();
    for t in 0..=n {
        let depth = 2 * (t / 2);
        match &columns[depth][t - depth] {
            Some(v) => estimates.push(v.with_precision(out)),
            None => {
                let carried = estimates.last().cloned().expect("ε_0 entries are never saturated");
                estimates.push(carried);
                flags.push(TransformFlag::Saturated { order: t });
            }
        }
    }
    TransformResult::new(Method::WynnEpsilon, estimates, flags)
}
