use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{ClosedForm, KnownLimit, SeriesSpec};
use crate::mpnum::{const_ln2, const_zeta, BigReal, ExactRational, Precision};
use crate::special::{lerch_phi_transformed, LerchArgs};
use crate::transforms::working_precision;
use crate::weights::weight_row;
use crate::{Error, Result};

/// Largest number of decimals `bethe_logarithm` accepts.
pub const BETHE_MAX_DECIMALS: u32 = 150;
/// Order of the first attempt; doubled until the estimates settle.
pub const BETHE_START_ORDER: usize = 58;
pub const BETHE_MAX_ORDER: usize = 400;

/// Extra decimals demanded of the two top estimate differences.
const CERTIFY_MARGIN: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BetheState {
    S1,
    S2,
    P2,
}

impl BetheState {
    pub const ALL: [BetheState; 3] = [BetheState::S1, BetheState::S2, BetheState::P2];

    pub fn label(self) -> &'static str {
        match self {
            BetheState::S1 => "1S",
            BetheState::S2 => "2S",
            BetheState::P2 => "2P",
        }
    }

    /// Published 100-decimal value of `ln k_0`.
    pub fn published(self) -> &'static str {
        match self {
            BetheState::S1 => "2.9841285557654976107597770900137979699751805661700200048159261392406576623067553286860620133040472249",
            BetheState::S2 => "2.8117698931205635152197427859416361128935514702973241909186969645324020201188910687017486120283124031",
            BetheState::P2 => "-0.0300167086302129024436757109511440639409330442310304668985253271944796896225718326244103127079973828",
        }
    }
}

impl fmt::Display for BetheState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for BetheState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BetheState::ALL
            .into_iter()
            .find(|st| st.label().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::parse(s, "supported states are 1S, 2S and 2P"))
    }
}

/// Which printed form of the series to generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BetheForm {
    /// `a_k = 16(k+2)/((k+1)²(k+3)²) Φ(−(3+k)/(1+k), 1, 2k+4)`, `k ≥ 0` (1S only).
    Compact,
    /// The sums starting at `k = 2` (1S) or `k = 3` (2S, 2P).
    Shifted,
}

fn phi(z: ExactRational, a: u64, p: Precision) -> Result<BigReal> {
    let work = p.plus(10);
    lerch_phi_transformed(&LerchArgs::new(z.to_real(work), 1, a)?, work)
}

fn rational(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d).expect("nonzero denominator")
}

fn term_1s_compact(k: u64, p: Precision) -> Result<BigReal> {
    let k = k as i64;
    let pre = rational(16 * (k + 2), (k + 1).pow(2) * (k + 3).pow(2));
    let z = rational(-(3 + k), 1 + k);
    Ok(phi(z, 2 * k as u64 + 4, p)?.mul_rational(&pre).with_precision(p))
}

fn term_1s(k: u64, p: Precision) -> Result<BigReal> {
    let k = k as i64;
    let pre = rational(16 * k, (k - 1).pow(2) * (k + 1).pow(2));
    let z = rational(1 + k, 1 - k);
    Ok(phi(z, 2 * k as u64, p)?.mul_rational(&pre).with_precision(p))
}

fn term_2s(k: u64, p: Precision) -> Result<BigReal> {
    let k = k as i64;
    // the denominator is (k-2)^3 (k+2)^3
    let pre = rational(1024 * k * (k - 1) * (k + 1), (k - 2).pow(3) * (k + 2).pow(3));
    let z = rational(2 + k, 2 - k);
    Ok(phi(z, 2 * k as u64, p)?.mul_rational(&pre).with_precision(p))
}

fn term_2p(k: u64, p: Precision) -> Result<BigReal> {
    let k = k as i128;
    let num = 256 * k.pow(3) * (11 * k * k - 12);
    let den = 3 * (k - 2).pow(4) * (k + 2).pow(4);
    let pre = ExactRational::from_parts(num.into(), den.into());
    let z = rational(2 + k as i64, 2 - k as i64);
    Ok(phi(z, 2 * k as u64, p)?.mul_rational(&pre).with_precision(p))
}

/// The Bethe-logarithm series for `state` in the requested form.
pub fn bethe_series(state: BetheState, form: BetheForm) -> Result<SeriesSpec> {
    let name = format!("bethe-{}", state.label().to_ascii_lowercase());
    let spec = match (state, form) {
        (BetheState::S1, BetheForm::Compact) => SeriesSpec::new(name, 0, term_1s_compact),
        (BetheState::S1, BetheForm::Shifted) => SeriesSpec::new(name, 2, term_1s),
        (BetheState::S2, BetheForm::Shifted) => SeriesSpec::new(name, 3, term_2s),
        (BetheState::P2, BetheForm::Shifted) => SeriesSpec::new(name, 3, term_2p),
        (_, BetheForm::Compact) => {
            return Err(Error::InvalidArgument(format!("no compact form for the {state} series")))
        }
    };
    let mut spec = spec.with_known_limit(KnownLimit {
        decimal: state.published(),
        provenance: "published 100-decimal ln k_0 (includes the constant part)",
    });
    if state == BetheState::S1 {
        let c = [(3, -4, 3), (4, 27, 4), (5, -703, 30), (6, 3329, 48), (7, -63163, 336), (8, 184961, 384), (9, -569323, 480), (10, 7256477, 2560)];
        let mut coeffs: BTreeMap<usize, ClosedForm> = c
            .into_iter()
            .map(|(j, n, d)| (j, ClosedForm::rational(rational(n, d))))
            .collect();
        coeffs.insert(1, ClosedForm::rational(ExactRational::zero()));
        coeffs.insert(2, ClosedForm::rational(ExactRational::zero()));
        spec = spec.with_known_coeffs(coeffs);
    }
    Ok(spec)
}

/// The closed-form part of `ln k_0` that is added to the series limit.
pub fn bethe_constant(state: BetheState, p: Precision) -> Result<BigReal> {
    let work = p.plus(5);
    let ln2 = const_ln2(work);
    let z2 = const_zeta(2, work)?;
    let v = match state {
        BetheState::S1 => ln2.mul_i64(10) - z2.mul_i64(2) - BigReal::one(work),
        BetheState::S2 => {
            let z3 = const_zeta(3, work)?;
            rational(-545, 36).to_real(work) + ln2.mul_rational(&rational(16, 3)) - z2.mul_i64(14) + z3.mul_i64(24)
        }
        BetheState::P2 => {
            let z3 = const_zeta(3, work)?;
            let z4 = const_zeta(4, work)?;
            rational(-3437, 2916).to_real(work) + ln2.mul_rational(&rational(3280, 2187))
                - z2.mul_rational(&rational(14, 3))
                + z3.mul_rational(&rational(136, 9))
                - z4.mul_rational(&rational(64, 3))
        }
    };
    Ok(v.with_precision(p))
}

/// Outcome of one Bethe-logarithm evaluation.
#[derive(Clone, Debug)]
pub struct BetheEvaluation {
    pub state: BetheState,
    pub value: BigReal,
    pub order: usize,
    pub working_digits: u32,
    /// `|𝒯_n − 𝒯_{n−1}|` and `|𝒯_{n−1} − 𝒯_{n−2}|`.
    pub top_differences: [BigReal; 2],
    pub certified: bool,
}

impl BetheEvaluation {
    pub fn to_fixed(&self, decimals: u32) -> String {
        self.value.to_fixed(decimals)
    }
}

fn check_decimals(decimals: u32) -> Result<()> {
    if decimals == 0 || decimals > BETHE_MAX_DECIMALS {
        return Err(Error::InvalidArgument(format!(
            "decimals must be between 1 and {BETHE_MAX_DECIMALS}, got {decimals}"
        )));
    }
    Ok(())
}

/// One evaluation at a fixed transformation order. Only the top three
/// one-step estimates are formed.
pub fn bethe_logarithm_at_order(state: BetheState, order: usize, decimals: u32) -> Result<BetheEvaluation> {
    check_decimals(decimals)?;
    if order < 2 {
        return Err(Error::InvalidArgument("order must be at least 2".into()));
    }
    let digits = decimals + CERTIFY_MARGIN + 1;
    let work = working_precision(digits, order, 0)?;
    let form = if state == BetheState::S1 { BetheForm::Compact } else { BetheForm::Shifted };
    let sums = bethe_series(state, form)?.partial_sums(order, work)?;
    let estimates = (order - 2..=order)
        .map(|k| Ok(weight_row(k, 0)?.apply(&sums.values()[..=k], work)))
        .collect::<Result<Vec<_>>>()?;
    let d1 = (&estimates[2] - &estimates[1]).abs();
    let d0 = (&estimates[1] - &estimates[0]).abs();
    let tol = BigReal::parse(&format!("1e-{}", decimals + CERTIFY_MARGIN), work)?;
    let certified = d1 < tol && d0 < tol;
    let value = &estimates[2] + &bethe_constant(state, work)?;
    Ok(BetheEvaluation {
        state,
        value,
        order,
        working_digits: work.digits(),
        top_differences: [d1, d0],
        certified,
    })
}

/// `ln k_0(state)` to `decimals` places, doubling the order from 58 until
/// the top estimates agree to the requested decimals (at most order 400).
pub fn bethe_logarithm(state: BetheState, decimals: u32) -> Result<BetheEvaluation> {
    check_decimals(decimals)?;
    let mut order = BETHE_START_ORDER;
    loop {
        let eval = bethe_logarithm_at_order(state, order, decimals)?;
        if eval.certified {
            return Ok(eval);
        }
        if order == BETHE_MAX_ORDER {
            return Err(Error::NotConverged { order, decimals });
        }
        order = (order * 2).min(BETHE_MAX_ORDER);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::lerch_phi_direct;

    fn p() -> Precision {
        Precision::new(30).unwrap()
    }

    fn close(a: &BigReal, b: &BigReal, digits: i32) -> bool {
        let tol = BigReal::parse(&format!("1e-{digits}"), a.precision()).unwrap();
        (a - b).abs() <= tol
    }

    #[test]
    fn state_parsing() {
        assert_eq!("2p".parse::<BetheState>().unwrap(), BetheState::P2);
        assert!("3S".parse::<BetheState>().is_err());
    }

    #[test]
    fn compact_first_term() {
        let s = bethe_series(BetheState::S1, BetheForm::Compact).unwrap();
        let phi = lerch_phi_transformed(&LerchArgs::new(BigReal::from_i64(-3, p()), 1, 4).unwrap(), p()).unwrap();
        let expect = phi.mul_i64(32).div_i64(9);
        assert!(close(&s.term(0, p()).unwrap(), &expect, 28));
    }

    #[test]
    fn compact_and_shifted_forms_agree() {
        let c = bethe_series(BetheState::S1, BetheForm::Compact).unwrap();
        let s = bethe_series(BetheState::S1, BetheForm::Shifted).unwrap();
        for k in 0..=20 {
            assert!(close(&c.term(k, p()).unwrap(), &s.term(k + 2, p()).unwrap(), 28), "k = {k}");
        }
    }

    #[test]
    fn two_p_third_term() {
        let s = bethe_series(BetheState::P2, BetheForm::Shifted).unwrap();
        let phi = lerch_phi_transformed(&LerchArgs::new(BigReal::from_i64(-5, p()), 1, 6).unwrap(), p()).unwrap();
        let pre = ExactRational::new(256 * 27 * (11 * 9 - 12), 3 * 625).unwrap();
        assert!(close(&s.term(3, p()).unwrap(), &phi.mul_rational(&pre), 28));
        assert!(bethe_series(BetheState::P2, BetheForm::Compact).is_err());
    }

    #[test]
    fn terms_decay_like_inverse_fourth_power() {
        let s = bethe_series(BetheState::S1, BetheForm::Compact).unwrap();
        let k = 2000u64;
        let scaled = s.term(k, p()).unwrap().mul_i64((k as i64).pow(2)).mul_i64((k as i64).pow(2));
        // b_n - b_inf ~ -4/(3 (n+1)^3) gives a_k ~ 4/k^4
        assert!((scaled.to_f64() - 4.0).abs() < 0.05, "{scaled}");
    }

    #[test]
    fn lerch_in_bethe_range_matches_direct_where_both_apply() {
        // z = -(3+k)/(1+k) leaves the unit disc, so compare at the boundary case z -> -1 instead
        let z = BigReal::parse("-0.99", p()).unwrap();
        let a = LerchArgs::new(z, 1, 10).unwrap();
        assert!(close(&lerch_phi_direct(&a, p()).unwrap(), &lerch_phi_transformed(&a, p()).unwrap(), 28));
    }

    #[test]
    fn decimals_cap() {
        assert!(bethe_logarithm(BetheState::S1, 151).is_err());
        assert!(bethe_logarithm_at_order(BetheState::S1, 1, 10).is_err());
    }

    #[test]
    fn one_s_twenty_decimals() {
        let e = bethe_logarithm(BetheState::S1, 20).unwrap();
        assert!(e.certified);
        assert_eq!(e.order, BETHE_START_ORDER);
        assert_eq!(e.to_fixed(20), "2.98412855576549761076");
    }
}
