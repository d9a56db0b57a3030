use rug::ops::Pow;
use rug::{Float, Integer};

use super::bernoulli::bernoulli_rug;
use crate::mpnum::{BigReal, Precision};
use crate::{Error, Result};

const GUARD_DIGITS: u32 = 10;

/// `ψ^{(m)}(x)` for `m ≥ 1`, `x > 0`.
///
/// The argument is shifted up to `y = x + N` with the recurrence
/// `ψ^{(m)}(x) = ψ^{(m)}(x+N) − (−1)^m m! Σ_{k<N} (x+k)^{−m−1}`, then
/// `ψ^{(m)}(y)` comes from the asymptotic series
/// `(−1)^{m+1} [ (m−1)!/y^m + m!/(2y^{m+1}) + Σ_k B_{2k} (2k+m−1)!/((2k)! y^{2k+m}) ]`.
pub fn polygamma(m: u32, x: &BigReal, p: Precision) -> Result<BigReal> {
    if m == 0 {
        return Err(Error::InvalidArgument("polygamma order must be at least 1".into()));
    }
    if x.signum() != std::cmp::Ordering::Greater {
        return Err(Error::Domain(format!("polygamma needs x > 0, got {x}")));
    }
    let digits = p.digits() + GUARD_DIGITS;
    let mut shift = (digits as f64 * 0.8) as u64 + 2 * u64::from(m);
    loop {
        if let Some(v) = shifted(m, x, p.plus(GUARD_DIGITS), shift) {
            return Ok(v.with_precision(p));
        }
        shift *= 2;
    }
}

fn shifted(m: u32, x: &BigReal, work: Precision, shift: u64) -> Option<BigReal> {
    let bits = work.bits();
    let x = Float::with_val(bits, x.as_float());
    let mut head = Float::with_val(bits, 0);
    let mut start = Float::with_val(bits, &x);
    let target = Float::with_val(bits, shift);
    let mut k = Float::with_val(bits, &x);
    while k < target {
        head += Float::with_val(bits, k.clone().pow(m + 1)).recip();
        k += 1;
        start = k.clone();
    }
    let y = start;
    let eps = Float::with_val(bits, Float::i_exp(1, -(bits as i32)));

    let m_fact = Integer::from(Integer::factorial(m));
    let m1_fact = Integer::from(Integer::factorial(m - 1));
    let y_m = Float::with_val(bits, y.clone().pow(m));
    let mut sum = Float::with_val(bits, &m1_fact / &y_m);
    sum += Float::with_val(bits, &m_fact / Float::with_val(bits, &y_m * &y)) / 2u32;

    let inv_y2 = Float::with_val(bits, y.clone().pow(2)).recip();
    // (2k+m−1)!/(2k)! / y^{2k+m}, advanced in place
    let mut ratio = Float::with_val(bits, &m1_fact / &y_m);
    let mut prev_abs: Option<Float> = None;
    for k in 1.. {
        let two_k = 2 * k as u32;
        ratio *= (two_k + m - 2) * (two_k + m - 1);
        ratio /= (two_k - 1) * two_k;
        ratio *= &inv_y2;
        let term = Float::with_val(bits, &ratio * &bernoulli_rug(two_k as usize));
        let abs = term.clone().abs();
        if let Some(prev) = &prev_abs {
            if abs > *prev {
                return None;
            }
        }
        sum += &term;
        if abs < Float::with_val(bits, &eps * &sum).abs() {
            break;
        }
        prev_abs = Some(abs);
    }
    let sign_odd = m % 2 == 1;
    let mut tail = if sign_odd { sum } else { -sum };
    let head = Float::with_val(bits, head * &m_fact);
    // ψ^{(m)}(x) = ψ^{(m)}(y) − (−1)^m m! Σ ...
    if m.is_multiple_of(2) {
        tail -= head;
    } else {
        tail += head;
    }
    Some(BigReal::from_float(tail, work))
}
