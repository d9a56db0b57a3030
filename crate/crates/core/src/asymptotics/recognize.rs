use rug::{Float, Integer, Rational};

use crate::mpnum::{const_pi, BigReal, ExactRational, Precision};

/// Default denominator bound for recognition.
pub const DEFAULT_MAX_DEN: u64 = 100_000;
/// Inputs with fewer digits are not recognized at all.
const MIN_DIGITS: u32 = 40;
/// Digits of the input not required to match.
const SLACK_DIGITS: u32 = 10;
/// Denominators tried for the rational part of `p/q + r/(tπ)`.
const MAX_RATIONAL_PART_DEN: i64 = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    Rational,
    RationalPlusRationalOverPi,
    None,
}

/// `x ≈ rational + over_pi/π`, with `residual = |x − that|`.
#[derive(Clone, Debug)]
pub struct RecognizedForm {
    pub kind: FormKind,
    pub rational: ExactRational,
    pub over_pi: ExactRational,
    pub residual: BigReal,
}

impl RecognizedForm {
    pub fn describe(&self) -> String {
        match self.kind {
            FormKind::Rational => self.rational.to_string(),
            FormKind::RationalPlusRationalOverPi if self.rational.is_zero() => format!("({})/pi", self.over_pi),
            FormKind::RationalPlusRationalOverPi => format!("{} + ({})/pi", self.rational, self.over_pi),
            FormKind::None => String::new(),
        }
    }
}

/// Closest fraction to `x` with denominator at most `max_den`, from the
/// continued-fraction convergents and the best semiconvergent.
pub fn best_rational(x: &ExactRational, max_den: u64) -> ExactRational {
    let max_den = Integer::from(max_den.max(1));
    let x = x.as_rug();
    if x.denom() <= &max_den {
        return ExactRational::from_rug(x.clone());
    }
    let (mut p0, mut q0, mut p1, mut q1) = (Integer::from(0), Integer::from(1), Integer::from(1), Integer::from(0));
    let (mut n, mut d) = (x.numer().clone(), x.denom().clone());
    loop {
        let (a, _) = n.clone().div_rem_floor(d.clone());
        let q2 = Integer::from(&q0 + &a * &q1);
        if q2 > max_den {
            break;
        }
        let p2 = Integer::from(&p0 + &a * &p1);
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
        let r = Integer::from(&n - &a * &d);
        (n, d) = (d, r);
        if d == 0 {
            break;
        }
    }
    let k = Integer::from(&max_den - &q0) / &q1;
    let semi = Rational::from((Integer::from(&p0 + &k * &p1), Integer::from(&q0 + &k * &q1)));
    let conv = Rational::from((p1, q1));
    let err_semi = Rational::from(&semi - x).abs();
    let err_conv = Rational::from(&conv - x).abs();
    ExactRational::from_rug(if err_semi < err_conv { semi } else { conv })
}

/// Precision justified by two successive estimates of one quantity: the
/// number of digits on which they agree (counted from the units place for
/// magnitudes below one), less a two-digit margin.
pub fn trusted_precision(current: &BigReal, previous: &BigReal) -> Option<Precision> {
    let diff = (current - previous).abs();
    let scale = current.abs().to_f64().max(1e-300).log10().floor().max(0.0);
    let agreed = if diff.is_zero() {
        f64::from(current.precision().digits())
    } else {
        scale - diff.log10().ok()?.to_f64()
    };
    let digits = (agreed.floor() - 2.0).min(f64::from(current.precision().digits()));
    Precision::new(digits.max(0.0) as u32).ok()
}

fn none(residual: BigReal) -> RecognizedForm {
    RecognizedForm { kind: FormKind::None, rational: ExactRational::zero(), over_pi: ExactRational::zero(), residual }
}

/// Looks for `x = p/q` (`q ≤ max_den`) or `x = p/q + r/(tπ)` (`q ≤ 60`,
/// `t ≤ max_den`). A match must agree with `x` to within
/// `10^{−(D−10)} max(1, |x|)`, `D` being the precision of `x`; below 40
/// digits nothing is recognized. The rational part of the second form is
/// searched only within `|p/q| ≤ ⌈|x|⌉ + 1`.
pub fn recognize_form(x: &BigReal, max_den: u64) -> RecognizedForm {
    let p = x.precision();
    let digits = p.digits();
    let work = p.plus(10);
    let bits = work.bits();
    let xf = Float::with_val(bits, x.as_float());
    let mut threshold = Float::with_val(bits, 10);
    threshold.pow_assign_i(-((digits as i32) - SLACK_DIGITS as i32));
    threshold *= xf.clone().abs().max(&Float::with_val(bits, 1));
    let to_big = |f: Float| BigReal::from_float(f, p);

    if digits < MIN_DIGITS {
        return none(BigReal::zero(p));
    }

    let xq = ExactRational::from_rug(xf.to_rational().expect("finite"));
    let r = best_rational(&xq, max_den);
    let res = Float::with_val(bits, &xf - r.as_rug()).abs();
    if res <= threshold {
        return RecognizedForm { kind: FormKind::Rational, rational: r, over_pi: ExactRational::zero(), residual: to_big(res) };
    }

    let pi = Float::with_val(bits, const_pi(work).as_float());
    let bound = xf.clone().abs().ceil().to_f64() as i64 + 1;
    let mut best: Option<(Float, ExactRational, ExactRational)> = None;
    let mut rational_parts = vec![(0i64, 1i64)];
    for q in 1..=MAX_RATIONAL_PART_DEN {
        for a in 1..=q * bound {
            if Integer::from(a).gcd(&Integer::from(q)) == 1 {
                rational_parts.push((a, q));
                rational_parts.push((-a, q));
            }
        }
    }
    for (a, q) in rational_parts {
        let rat = Rational::from((a, q));
        let rest = Float::with_val(bits, &xf - &rat);
        let y = Float::with_val(bits, &rest * &pi);
        let yq = ExactRational::from_rug(y.to_rational().expect("finite"));
        let t = best_rational(&yq, max_den);
        if t.is_zero() {
            continue;
        }
        let approx = Float::with_val(bits, Float::with_val(bits, t.as_rug()) / &pi);
        let res = Float::with_val(bits, &rest - &approx).abs();
        // the first hit in search order is the simplest
        if res <= threshold {
            best = Some((res, ExactRational::from_rug(rat), t));
            break;
        }
    }
    match best {
        Some((res, rational, over_pi)) => RecognizedForm {
            kind: FormKind::RationalPlusRationalOverPi,
            rational,
            over_pi,
            residual: to_big(res),
        },
        None => none(to_big(Float::with_val(bits, &xf - r.as_rug()).abs())),
    }
}

trait PowAssignI {
    fn pow_assign_i(&mut self, e: i32);
}

impl PowAssignI for Float {
    fn pow_assign_i(&mut self, e: i32) {
        use rug::ops::PowAssign;
        self.pow_assign(e);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: u32) -> Precision {
        Precision::new(d).unwrap()
    }

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d).unwrap()
    }

    #[test]
    fn best_rational_examples() {
        let third = BigReal::parse("0.3333333333333333333333333333", p(30)).unwrap().to_exact();
        assert_eq!(best_rational(&third, 100), q(1, 3));
        let pi = const_pi(p(30)).to_exact();
        assert_eq!(best_rational(&pi, 10), q(22, 7));
        assert_eq!(best_rational(&pi, 200), q(355, 113));
        assert_eq!(best_rational(&q(7, 3), 5), q(7, 3));
    }

    #[test]
    fn two_thirds() {
        let x = q(2, 3).to_real(p(40));
        let r = recognize_form(&x, 100);
        assert_eq!(r.kind, FormKind::Rational);
        assert_eq!(r.rational, q(2, 3));
    }

    #[test]
    fn refuses_short_inputs() {
        let x = q(2, 3).to_real(p(30));
        assert_eq!(recognize_form(&x, 100).kind, FormKind::None);
    }

    #[test]
    fn half_plus_inverse_pi() {
        let w = p(60);
        let x = q(1, 2).to_real(w) + BigReal::one(w) / const_pi(w);
        let r = recognize_form(&x, DEFAULT_MAX_DEN);
        assert_eq!(r.kind, FormKind::RationalPlusRationalOverPi);
        assert_eq!((r.rational.clone(), r.over_pi.clone()), (q(1, 2), q(1, 1)));
        assert_eq!(r.describe(), "1/2 + (1)/pi");
    }

    #[test]
    fn pure_pi_multiple() {
        let w = p(60);
        let x = q(98347, 10080).to_real(w) / const_pi(w);
        let r = recognize_form(&x, DEFAULT_MAX_DEN);
        assert_eq!(r.kind, FormKind::RationalPlusRationalOverPi);
        assert!(r.rational.is_zero());
        assert_eq!(r.over_pi, q(98347, 10080));
    }

    #[test]
    fn transcendental_is_not_recognized() {
        let w = p(60);
        let x = const_pi(w).sqrt().unwrap();
        assert_eq!(recognize_form(&x, DEFAULT_MAX_DEN).kind, FormKind::None);
    }

    #[test]
    fn trusted_digits() {
        let a = BigReal::parse("1.2345678901234", p(40)).unwrap();
        let b = BigReal::parse("1.234567890123465", p(40)).unwrap();
        assert_eq!(trusted_precision(&a, &b).unwrap().digits(), 11);
        assert!(trusted_precision(&a, &BigReal::parse("1.3", p(40)).unwrap()).is_none());
    }
}
