use rug::float::Constant;
use rug::{Float, Integer, Rational};

use super::{BigReal, Precision};
use crate::{Error, Result};

/// Extra binary digits used while assembling a constant before the final
/// rounding to the requested precision.
const GUARD_BITS: u32 = 40;

pub fn const_pi(p: Precision) -> BigReal {
    BigReal::from_float(Float::with_val(p.bits(), Constant::Pi), p)
}

pub fn const_ln2(p: Precision) -> BigReal {
    BigReal::from_float(Float::with_val(p.bits(), Constant::Log2), p)
}

/// Riemann ζ(s) for integer `s ≥ 2`.
///
/// Evaluated through the alternating series η(s) = (1 − 2^{1−s}) ζ(s),
/// accelerated with the Borwein/Cohen–Rodriguez Villegas–Zagier weights
/// `d_k`, whose truncation error is below `3 / (3 + √8)^m` after `m` terms.
pub fn const_zeta(s: u32, p: Precision) -> Result<BigReal> {
    if s < 2 {
        return Err(Error::Domain(format!("zeta({s}) requires s >= 2")));
    }
    let bits = p.bits() + GUARD_BITS;
    // ln(10) / ln(3 + sqrt 8) ≈ 1.3062
    let m = ((p.digits() as f64 + 5.0) * 1.3062).ceil() as u32 + 1;

    // Partial sums d_k = m Σ_{i≤k} (m+i−1)! 4^i / ((m−i)! (2i)!), all integers.
    let mut d = Vec::with_capacity(m as usize + 1);
    let mut term = Integer::from(1); // i = 0
    let mut acc = Integer::from(1);
    d.push(acc.clone());
    for i in 0..m {
        term *= 2u32 * (m + i) * (m - i);
        term /= (2 * i + 1) * (i + 1);
        acc += &term;
        d.push(acc.clone());
    }
    let d_m = &d[m as usize];

    let mut sum = Float::new(bits);
    for k in 0..m {
        let diff = Integer::from(&d[k as usize] - d_m);
        let denom = Integer::from(Integer::u_pow_u(k + 1, s));
        let t = Float::with_val(bits, Rational::from((diff, denom)));
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
    }
    let eta = -sum / Float::with_val(bits, d_m);
    let factor = Float::with_val(bits, 1) - Float::with_val(bits, Float::i_exp(1, 1 - s as i32));
    Ok(BigReal::from_float(eta / factor, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: u32) -> Precision {
        Precision::new(d).unwrap()
    }

    #[test]
    fn pi_golden_strings() {
        assert_eq!(const_pi(p(30)).to_canonical(), "3.14159265358979323846264338328");
        assert_eq!(const_pi(p(10)).to_canonical(), "3.141592654");
    }

    #[test]
    fn ln2_golden_strings() {
        assert_eq!(const_ln2(p(20)).to_canonical(), "0.69314718055994530942");
        assert_eq!(const_ln2(p(10)).to_canonical(), "0.6931471806");
    }

    #[test]
    fn exp_of_ln2_is_two() {
        let x = const_ln2(p(40)).exp();
        let err = (&x - &BigReal::from_i64(2, p(40))).abs();
        assert!(err.to_f64() < 1e-38);
    }

    #[test]
    fn zeta_domain() {
        assert!(const_zeta(1, p(20)).is_err());
        assert!(const_zeta(0, p(20)).is_err());
    }

    #[test]
    fn even_zeta_matches_pi_powers() {
        let q = p(40);
        let pi = const_pi(q.plus(5));
        let z2 = (&pi * &pi).div_i64(6).with_precision(q);
        assert_eq!(const_zeta(2, q).unwrap().to_canonical(), z2.to_canonical());
        let pi4 = pi.powi(4).unwrap().div_i64(90).with_precision(q);
        assert_eq!(const_zeta(4, q).unwrap().to_canonical(), pi4.to_canonical());
        assert_eq!(const_zeta(2, p(20)).unwrap().to_canonical(), "1.6449340668482264365");
    }
}
