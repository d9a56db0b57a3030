//! Subleading asymptotic coefficients: estimators, power-sum tails, and
//! recognition of simple closed forms.

mod recognize;

use std::cmp::Ordering;
use std::collections::BTreeMap;

pub use recognize::{best_rational, recognize_form, trusted_precision, FormKind, RecognizedForm, DEFAULT_MAX_DEN};

use crate::catalog::{bethe_constant, bethe_logarithm_at_order, bethe_series, BetheForm, BetheState};
use crate::mpnum::{BigReal, ExactRational, Precision};
use crate::special::polygamma;
use crate::transforms::{neville_one_step, PartialSums};
use crate::{Error, Result};

/// Coefficients of `a_k = A/k² + B/k³ + C/k⁴ + …`.
#[derive(Clone, Debug)]
pub struct AsymptoticTermCoefficients {
    pub a: BigReal,
    pub b: BigReal,
    pub c: BigReal,
}

/// `c_j(n)` for `j = 0..=j_max` at one order, optionally with limits.
#[derive(Clone, Debug)]
pub struct CoefficientEstimates {
    pub order: usize,
    pub values: BTreeMap<usize, BigReal>,
    pub limits: Option<BTreeMap<usize, BigReal>>,
}

impl CoefficientEstimates {
    pub fn from_partial_sums(s: &PartialSums, j_max: usize) -> Result<Self> {
        let t = neville_one_step(s, j_max)?;
        Ok(CoefficientEstimates {
            order: s.order(),
            values: t.coefficients.expect("one-step Neville fills coefficients"),
            limits: None,
        })
    }

    pub fn with_limits(mut self, limits: BTreeMap<usize, BigReal>) -> Self {
        self.limits = Some(limits);
        self
    }

    /// `c_0 … c_{j-1}` in order, for feeding [`d_estimator`].
    pub fn leading(&self, j: usize) -> Vec<BigReal> {
        self.values.range(..j).map(|(_, v)| v.clone()).collect()
    }
}

/// `d_j(n) = (n+1)^j (s_n − Σ_{r<j} c_r/(n+1)^r)` for every `n`.
pub fn d_estimator(s: &PartialSums, known: &[BigReal], j: usize) -> Result<Vec<BigReal>> {
    if j == 0 || known.len() != j {
        return Err(Error::InvalidArgument(format!(
            "d_j needs j >= 1 and exactly j known coefficients (j = {j}, given {})",
            known.len()
        )));
    }
    Ok(s.values()
        .iter()
        .enumerate()
        .map(|(n, sn)| {
            let x = (n + 1) as i64;
            // Horner in 1/(n+1): Σ_r c_r x^{j−r} = (…(c_0 x + c_1) x + …) x
            let mut poly = BigReal::zero(sn.precision());
            for c in known {
                poly = poly.mul_i64(x) + c;
            }
            let poly = poly.mul_i64(x);
            let mut scaled = sn.clone();
            for _ in 0..j {
                scaled = scaled.mul_i64(x);
            }
            scaled - poly
        })
        .collect())
}

/// CSV `n,inv_n,d` of a `d_j` trajectory to `decimals` places (`inv_n`
/// blank at `n = 0`).
pub fn d_trajectory_csv(d: &[BigReal], decimals: u32) -> String {
    let mut out = String::from("n,inv_n,d\n");
    for (n, v) in d.iter().enumerate() {
        let inv = if n == 0 {
            String::new()
        } else {
            BigReal::one(v.precision()).div_i64(n as i64).to_fixed(decimals)
        };
        out.push_str(&format!("{n},{inv},{}\n", v.to_fixed(decimals)));
    }
    out
}

/// `Σ_{k>n} k^{−a} = ((−1)^a/(a−1)!) ψ^{(a−1)}(n+1)`.
pub fn tail_sum_oracle(a: u32, n: u64, p: Precision) -> Result<BigReal> {
    if a < 2 {
        return Err(Error::Domain(format!("Σ k^-{a} diverges; the tail needs a >= 2")));
    }
    let work = p.plus(5);
    let psi = polygamma(a - 1, &BigReal::from_u64(n + 1, work), work)?;
    let mut fact = BigReal::one(work);
    for k in 2..a {
        fact = fact.mul_i64(i64::from(k));
    }
    let v = psi / fact;
    Ok(if a.is_multiple_of(2) { v } else { -v }.with_precision(p))
}

/// Three-term expansion of the tail `Σ_{k>n} a_k = s_∞ − s_n`:
/// `A/n + (B−A)/(2n²) + (A − 3B + 2C)/(6n³)`.
pub fn remainder_expansion(coeffs: &AsymptoticTermCoefficients, n: u64) -> Result<BigReal> {
    if n == 0 {
        return Err(Error::InvalidArgument("remainder expansion needs n >= 1".into()));
    }
    let n = n as i64;
    let AsymptoticTermCoefficients { a, b, c } = coeffs;
    let first = a.div_i64(n);
    let second = (b - a).div_i64(2 * n * n);
    let third = (a - b.mul_i64(3) + c.mul_i64(2)).div_i64(6).div_i64(n).div_i64(n).div_i64(n);
    Ok(first + second + third)
}

/// One row of the comparison of `b_n − b_∞` with its asymptotic form.
#[derive(Clone, Debug)]
pub struct AsymptoticRow {
    pub n: usize,
    /// `b_n − b_∞`.
    pub residual: BigReal,
    /// `(b_n − b_∞)(n+1)³`, tending to `c_3`.
    pub cubic_scaled: BigReal,
    /// `(b_n − b_∞ − c_3/(n+1)³)(n+1)⁴`, tending to `c_4`.
    pub quartic_scaled: BigReal,
}

#[derive(Clone, Debug)]
pub struct AsymptoticsReport {
    pub c3: ExactRational,
    pub rows: Vec<AsymptoticRow>,
    /// Sign of the quartic coefficient, read off the largest `n`.
    pub quartic_sign: Ordering,
}

/// Residual analysis of partial sums against a limit and a known `c_3`.
pub fn asymptotic_residuals(s: &PartialSums, limit: &BigReal, c3: &ExactRational, ns: &[usize]) -> Result<AsymptoticsReport> {
    let mut rows = Vec::new();
    for &n in ns {
        let sn = s.values().get(n).ok_or_else(|| Error::InvalidArgument(format!("no partial sum s_{n}")))?;
        let residual = sn - limit;
        let x = (n + 1) as i64;
        let cubic_scaled = residual.mul_i64(x).mul_i64(x).mul_i64(x);
        let quartic_scaled = (&cubic_scaled - &c3.to_real(sn.precision())).mul_i64(x);
        rows.push(AsymptoticRow { n, residual, cubic_scaled, quartic_scaled });
    }
    let quartic_sign = rows
        .iter()
        .max_by_key(|r| r.n)
        .map_or(Ordering::Equal, |r| r.quartic_scaled.signum());
    Ok(AsymptoticsReport { c3: c3.clone(), rows, quartic_sign })
}

/// Compares the 1S Bethe partial sums `b_n` with
/// `b_∞ − 4/(3(n+1)³) ± 27/(4(n+1)⁴)`, recording the observed sign.
pub fn verify_bethe_asymptotics(ns: &[usize]) -> Result<AsymptoticsReport> {
    let p = Precision::new(60)?;
    let top = ns.iter().copied().max().unwrap_or(0);
    let sums = bethe_series(BetheState::S1, BetheForm::Compact)?.partial_sums(top, p)?;
    let full = bethe_logarithm_at_order(BetheState::S1, 116, 60)?;
    let limit = (&full.value - &bethe_constant(BetheState::S1, full.value.precision())?).with_precision(p);
    asymptotic_residuals(&sums, &limit, &ExactRational::new(-4, 3)?, ns)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpnum::{const_pi, const_zeta};

    fn p() -> Precision {
        Precision::new(40).unwrap()
    }

    fn close(a: &BigReal, b: &BigReal, digits: i32) -> bool {
        let tol = BigReal::parse(&format!("1e-{digits}"), a.precision()).unwrap();
        (a - b).abs() <= tol
    }

    #[test]
    fn d_estimator_on_exact_polynomial() {
        let vals: Vec<BigReal> = (0..8)
            .map(|i| BigReal::from_i64(2, p()) + BigReal::one(p()).div_i64(i + 1))
            .collect();
        let s = PartialSums::new(vals).unwrap();
        let d = d_estimator(&s, &[BigReal::from_i64(2, p())], 1).unwrap();
        assert!(d.iter().all(|v| close(v, &BigReal::one(p()), 38)));
        assert!(d_estimator(&s, &[], 1).is_err());
        assert!(d_estimator(&s, &[], 0).is_err());
    }

    #[test]
    fn tail_examples() {
        let pi = const_pi(p());
        let z2 = &(&pi * &pi) / &BigReal::from_i64(6, p());
        assert!(close(&tail_sum_oracle(2, 0, p()).unwrap(), &z2, 38));
        assert!(close(&tail_sum_oracle(2, 1, p()).unwrap(), &(&z2 - &BigReal::one(p())), 38));
        let z3 = const_zeta(3, p()).unwrap();
        let expect = z3 - BigReal::one(p()) - BigReal::parse("0.125", p()).unwrap();
        assert!(close(&tail_sum_oracle(3, 2, p()).unwrap(), &expect, 38));
        assert!(matches!(tail_sum_oracle(1, 3, p()), Err(Error::Domain(_))));
    }

    #[test]
    fn remainder_examples() {
        let z = BigReal::zero(p());
        let zero = AsymptoticTermCoefficients { a: z.clone(), b: z.clone(), c: z.clone() };
        assert!(remainder_expansion(&zero, 5).unwrap().is_zero());
        let one = BigReal::one(p());
        let a_only = AsymptoticTermCoefficients { a: one.clone(), b: z.clone(), c: z };
        let expect = ExactRational::new(600 - 30 + 1, 6000).unwrap().to_real(p());
        assert!(close(&remainder_expansion(&a_only, 10).unwrap(), &expect, 38));

        let all = AsymptoticTermCoefficients { a: one.clone(), b: one.clone(), c: one };
        let n = 50;
        let oracle = tail_sum_oracle(2, n, p()).unwrap() + tail_sum_oracle(3, n, p()).unwrap() + tail_sum_oracle(4, n, p()).unwrap();
        let diff = (&remainder_expansion(&all, n).unwrap() - &oracle).abs();
        assert!(diff.to_f64() < 2.0 / (n as f64).powi(4));
    }

    #[test]
    fn constant_series_has_zero_residuals() {
        let s = PartialSums::new(vec![BigReal::from_i64(3, p()); 12]).unwrap();
        let r = asymptotic_residuals(&s, &BigReal::from_i64(3, p()), &ExactRational::new(-4, 3).unwrap(), &[5, 10]).unwrap();
        assert!(r.rows.iter().all(|row| row.residual.is_zero() && row.cubic_scaled.is_zero()));
    }
}
