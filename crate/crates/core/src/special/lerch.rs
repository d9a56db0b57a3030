use rug::ops::{Pow, PowAssign};
use rug::{Float, Integer, Rational};

use super::polygamma;
use crate::mpnum::{BigReal, ExactRational, Precision};
use crate::{Error, Result};

const GUARD_DIGITS: u32 = 10;
/// Truncation stops when the tail bound falls below `10^{-(p+5)}` relative.
const TAIL_MARGIN_DIGITS: u32 = 5;

/// Arguments of `Φ(z, s, a)`: real `z ≤ 1`, integer `s ≥ 1`, integer `a ≥ 1`.
#[derive(Clone, Debug)]
pub struct LerchArgs {
    z: BigReal,
    s: u32,
    a: u64,
}

impl LerchArgs {
    pub fn new(z: BigReal, s: u32, a: u64) -> Result<Self> {
        if s == 0 {
            return Err(Error::Domain("Lerch Φ needs s >= 1".into()));
        }
        if a == 0 {
            return Err(Error::Domain("Lerch Φ needs a >= 1".into()));
        }
        if z > BigReal::one(z.precision()) {
            return Err(Error::Domain(format!("Lerch Φ needs z <= 1, got {z}")));
        }
        Ok(LerchArgs { z, s, a })
    }

    pub fn z(&self) -> &BigReal {
        &self.z
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn a(&self) -> u64 {
        self.a
    }
}

fn tail_threshold(bits: u32, p: Precision) -> Float {
    let mut t = Float::with_val(bits, 10);
    t.pow_assign(-((p.digits() + TAIL_MARGIN_DIGITS) as i32));
    t
}

/// `Φ` by its defining series, for `|z| < 1`, or for `z = 1` with `s ≥ 2`
/// through `ζ(s, a) = (−1)^s ψ^{(s−1)}(a) / (s−1)!`.
pub fn lerch_phi_direct(args: &LerchArgs, p: Precision) -> Result<BigReal> {
    let work = p.plus(GUARD_DIGITS);
    let bits = work.bits();
    let z = Float::with_val(bits, args.z.as_float());
    let abs_z = z.clone().abs();
    if abs_z == 1 && z.is_sign_positive() {
        if args.s < 2 {
            return Err(Error::Domain("Φ(1, 1, a) diverges".into()));
        }
        let psi = polygamma(args.s - 1, &BigReal::from_u64(args.a, work), work)?;
        let fact = Integer::from(Integer::factorial(args.s - 1));
        let mut v = Float::with_val(bits, psi.as_float() / &fact);
        if args.s % 2 == 1 {
            v = -v;
        }
        return Ok(BigReal::from_float(v, p));
    }
    if abs_z >= 1 {
        return Err(Error::Domain(format!("direct Lerch series needs |z| < 1, got {}", args.z)));
    }
    let threshold = tail_threshold(bits, p);
    let geometric = Float::with_val(bits, &abs_z / Float::with_val(bits, 1 - &abs_z));
    let mut sum = Float::with_val(bits, 0);
    let mut zn = Float::with_val(bits, 1);
    let mut n: u64 = 0;
    loop {
        let base = Float::with_val(bits, n + args.a);
        let term = Float::with_val(bits, &zn / Float::with_val(bits, base.pow(args.s)));
        sum += &term;
        let bound = Float::with_val(bits, term.abs() * &geometric);
        if bound <= Float::with_val(bits, &threshold * sum.clone().abs()) {
            break;
        }
        zn *= &z;
        n += 1;
    }
    Ok(BigReal::from_float(sum, p))
}

/// `Φ = (1/(1−z)) Σ_n r^n I_n` with `r = −z/(1−z)` and
/// `I_n = Σ_k (−1)^k C(n,k) / (a+k)^s`, valid for `z < 1/2`.
///
/// `I_n` is positive and decreasing, so the tail after `t_N` is bounded
/// by `|t_N| |r| / (1−|r|)`. It is evaluated without cancellation as
/// `I_n = n!/(a(a+1)…(a+n)) · h_{s−1}(1/a, …, 1/(a+n))`, where `h` is the
/// complete homogeneous symmetric polynomial (`h_0 = 1`).
pub fn lerch_phi_transformed(args: &LerchArgs, p: Precision) -> Result<BigReal> {
    let work = p.plus(GUARD_DIGITS);
    let bits = work.bits();
    let z = Float::with_val(bits, args.z.as_float());
    let half = Float::with_val(bits, 0.5);
    if z >= half {
        return Err(Error::Domain(format!(
            "transformed Lerch series needs z < 1/2 (|z/(1-z)| < 1), got {}",
            args.z
        )));
    }
    let one_minus_z = Float::with_val(bits, 1 - &z);
    let r = Float::with_val(bits, Float::with_val(bits, -&z) / &one_minus_z);
    let abs_r = r.clone().abs();
    let geometric = Float::with_val(bits, &abs_r / Float::with_val(bits, 1 - &abs_r));
    let threshold = tail_threshold(bits, p);

    let s = args.s as usize;
    let a = Float::with_val(bits, args.a);
    // g = n!/(a(a+1)…(a+n)), h[m] = h_m(1/a, …, 1/(a+n))
    let mut g = Float::with_val(bits, a.clone().recip());
    let mut h = vec![Float::with_val(bits, 0); s];
    h[0] = Float::with_val(bits, 1);
    let mut x = Float::with_val(bits, a.clone().recip());
    for m in 1..s {
        h[m] = Float::with_val(bits, &h[m - 1] * &x);
    }
    let mut rn = Float::with_val(bits, 1);
    let mut sum = Float::with_val(bits, 0);
    let mut n: u64 = 0;
    loop {
        let term = Float::with_val(bits, &rn * Float::with_val(bits, &g * &h[s - 1]));
        sum += &term;
        let bound = Float::with_val(bits, term.abs() * &geometric);
        if bound <= Float::with_val(bits, &threshold * sum.clone().abs()) || abs_r.is_zero() {
            break;
        }
        n += 1;
        let next = Float::with_val(bits, &a + n);
        g *= n;
        g /= &next;
        x = next.recip();
        for m in 1..s {
            let add = Float::with_val(bits, &x * &h[m - 1]);
            h[m] += add;
        }
        rn *= &r;
    }
    sum /= &one_minus_z;
    Ok(BigReal::from_float(sum, p))
}

/// `Σ_{k=0}^{n} (−1)^k C(n,k) / (a+k)^s`, exactly.
///
/// For `s = 1` this is `n! (a−1)! / (a+n)!`; other `s` are summed directly.
pub fn lerch_inner_sum(n: u32, s: u32, a: u64) -> Result<ExactRational> {
    if a == 0 {
        return Err(Error::Domain("inner sum needs a >= 1".into()));
    }
    if s == 1 {
        let a = u32::try_from(a).map_err(|_| Error::InvalidArgument("a too large".into()))?;
        let num = Integer::from(Integer::factorial(n)) * Integer::from(Integer::factorial(a - 1));
        let den = Integer::from(Integer::factorial(a + n));
        return Ok(ExactRational::from_parts(num, den));
    }
    Ok(ExactRational::from_rug(inner_sum_direct(n, s, a)))
}

pub(crate) fn inner_sum_direct(n: u32, s: u32, a: u64) -> Rational {
    let mut acc = Rational::new();
    let mut binom = Integer::from(1);
    for k in 0..=n {
        let den = Integer::from(a + u64::from(k)).pow(s);
        let term = Rational::from((binom.clone(), den));
        if k % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        binom *= n - k;
        binom /= k + 1;
    }
    acc
}
