//! Exact weight tables for the one-step Neville transformation.
//!
//! With abscissas `x_i = 1/(i+1)`, the coefficients of the interpolating
//! polynomial through `(x_i, s_i)`, `i = 0..=n`, are
//! `c_j(n) = Σ_i w_{j,i}(n) s_i`, where `w_{j,·}(n)` is row `j` of the inverse
//! of the Vandermonde matrix `M_{ij} = (1/(i+1))^j`. For `j ≤ 10` the rows
//! have the closed form
//!
//! ```text
//! w_{j,i}(n) = (-1)^(n-i) (i+1)^n / (i! (n-i)!) · P_j(i, n)
//! ```
//!
//! Those polynomials are transcribed in [`polynomials`] and certified
//! against an exact fraction-free elimination of the Vandermonde system
//! before they are trusted. Rows that fail certification, and rows with
//! `j > 10`, come from the elimination instead.

mod certify;
mod oracle;
pub mod polynomials;
mod row;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use rug::ops::Pow;
use rug::Integer;

pub use certify::{certify_weights, CertificationReport, Mismatch, RowCertification, RowStatus};
pub use oracle::{oracle_weights, VandermondeSystem};
pub use row::WeightRow;

use crate::mpnum::ExactRational;
use crate::{Error, Result};
use polynomials::{ClosedFormPoly, Sign, POLYNOMIALS};

/// Highest row with a closed-form polynomial.
pub const MAX_CLOSED_FORM_ROW: usize = 10;

/// Orders certified on first use of the closed forms.
const ROUTING_CERTIFICATION_ORDER: usize = 20;

/// Row index `j` of a closed-form weight row, `0 ≤ j ≤ 10`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoefficientIndex(usize);

impl CoefficientIndex {
    pub fn new(j: usize) -> Result<Self> {
        if j > MAX_CLOSED_FORM_ROW {
            return Err(Error::UnsupportedClosedForm { j });
        }
        Ok(CoefficientIndex(j))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightSource {
    ClosedForm,
    Oracle,
}

/// Evaluates `P_j(i, n)` with every unprinted sign replaced, in order, from
/// `resolution`.
pub(crate) fn eval_poly(poly: &ClosedFormPoly, i: usize, n: usize, resolution: &[Sign]) -> ExactRational {
    let mut unprinted = resolution.iter();
    let mut acc = Integer::new();
    let (i, n) = (Integer::from(i), Integer::from(n));
    for term in poly.terms {
        let sign = match term.sign {
            Sign::Unprinted => *unprinted.next().unwrap_or(&Sign::Plus),
            s => s,
        };
        let mut v = Integer::from(term.coeff);
        v *= Integer::from((&i).pow(term.i_pow));
        v *= Integer::from((&n).pow(term.n_pow));
        match sign {
            Sign::Minus => acc -= v,
            _ => acc += v,
        }
    }
    ExactRational::from_parts(acc, Integer::from(poly.scale))
}

/// `(-1)^(n-i) (i+1)^n / (i! (n-i)!)`, the factor shared by every row.
pub(crate) fn base_factor(i: usize, n: usize) -> ExactRational {
    let num = Integer::from(Integer::u_pow_u(i as u32 + 1, n as u32));
    let den = Integer::from(Integer::factorial(i as u32)) * Integer::from(Integer::factorial((n - i) as u32));
    let r = ExactRational::from_parts(num, den);
    if (n - i) % 2 == 1 {
        -r
    } else {
        r
    }
}

fn routing() -> &'static CertificationReport {
    static REPORT: OnceLock<CertificationReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        certify_weights(ROUTING_CERTIFICATION_ORDER).expect("routing order satisfies n_max >= 10")
    })
}

/// Sign resolution certified for row `j` (empty when nothing is unprinted).
fn certified_resolution(j: usize) -> Option<Vec<Sign>> {
    let row = routing().row(j)?;
    match &row.status {
        RowStatus::Certified => Some(Vec::new()),
        RowStatus::Repaired { resolution, .. } => Some(resolution.clone()),
        RowStatus::Corrupted => None,
    }
}

/// `P_j(i, n)` including its rational prefactor `1/scale`.
pub fn poly_p(j: CoefficientIndex, i: usize, n: usize) -> Result<ExactRational> {
    if i > n {
        return Err(Error::InvalidArgument(format!("P_j(i, n) needs i <= n (i = {i}, n = {n})")));
    }
    let resolution = certified_resolution(j.get()).unwrap_or_default();
    Ok(eval_poly(&POLYNOMIALS[j.get()], i, n, &resolution))
}

pub(crate) fn closed_form_row(n: usize, j: usize, resolution: &[Sign]) -> Vec<ExactRational> {
    let poly = &POLYNOMIALS[j];
    (0..=n)
        .map(|i| base_factor(i, n) * eval_poly(poly, i, n, resolution))
        .collect()
}

/// Row `j` of the closed-form weights at order `n`.
pub fn closed_form_weights(n: usize, j: CoefficientIndex) -> Result<Vec<ExactRational>> {
    if j.get() > n {
        return Err(Error::RowUndefined { n, j: j.get() });
    }
    let resolution = certified_resolution(j.get()).unwrap_or_default();
    Ok(closed_form_row(n, j.get(), &resolution))
}

type Cache = RwLock<HashMap<(usize, usize), Arc<WeightRow>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Certified weight row `j` at order `n`, cached after first use.
///
/// Closed forms are used for `j ≤ 10` when their row certified (possibly
/// after a sign repair); everything else comes from the exact elimination.
pub fn weight_row(n: usize, j: usize) -> Result<Arc<WeightRow>> {
    if j > n {
        return Err(Error::RowUndefined { n, j });
    }
    if let Some(row) = cache().read().expect("weight cache poisoned").get(&(n, j)) {
        return Ok(Arc::clone(row));
    }
    let closed = if j <= MAX_CLOSED_FORM_ROW { certified_resolution(j) } else { None };
    let row = match closed {
        Some(resolution) => WeightRow::new(n, j, WeightSource::ClosedForm, closed_form_row(n, j, &resolution)),
        None => WeightRow::new(n, j, WeightSource::Oracle, oracle_weights(n, j)?),
    };
    let mut guard = cache().write().expect("weight cache poisoned");
    let entry = guard.entry((n, j)).or_insert_with(|| Arc::new(row));
    Ok(Arc::clone(entry))
}

/// `Λ_j(n) = Σ_i |w_{j,i}(n)|`, the amplification of input rounding errors.
pub fn weight_condition(n: usize, j: CoefficientIndex) -> Result<ExactRational> {
    Ok(weight_row(n, j.get())?.condition())
}

/// A set of weight rows for one order.
#[derive(Clone, Debug)]
pub struct WeightTable {
    order: usize,
    rows: BTreeMap<usize, Vec<ExactRational>>,
    source: WeightSource,
}

impl WeightTable {
    /// Closed-form rows `0..=j_max`.
    pub fn closed_form(n: usize, j_max: usize) -> Result<Self> {
        if j_max > n {
            return Err(Error::RowUndefined { n, j: j_max });
        }
        let mut rows = BTreeMap::new();
        for j in 0..=j_max {
            rows.insert(j, closed_form_weights(n, CoefficientIndex::new(j)?)?);
        }
        Ok(WeightTable { order: n, rows, source: WeightSource::ClosedForm })
    }

    /// Oracle rows `0..=j_max` from one elimination.
    pub fn oracle(n: usize, j_max: usize) -> Result<Self> {
        if j_max > n {
            return Err(Error::RowUndefined { n, j: j_max });
        }
        let wanted: Vec<usize> = (0..=j_max).collect();
        let solved = VandermondeSystem::new(n).inverse_rows(&wanted);
        let rows = wanted.into_iter().zip(solved).collect();
        Ok(WeightTable { order: n, rows, source: WeightSource::Oracle })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn source(&self) -> WeightSource {
        self.source
    }

    pub fn row(&self, j: usize) -> Option<&[ExactRational]> {
        self.rows.get(&j).map(Vec::as_slice)
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[ExactRational])> {
        self.rows.iter().map(|(j, r)| (*j, r.as_slice()))
    }

    /// Pairs `(j, j')` for which `Σ_i w_{j,i} (1/(i+1))^{j'} ≠ δ_{jj'}`, with
    /// `j'` ranging over `0..=j_prime_max`.
    pub fn row_identity_violations(&self, j_prime_max: usize) -> Vec<(usize, usize)> {
        let system = VandermondeSystem::new(self.order);
        let mut bad = Vec::new();
        for (&j, row) in &self.rows {
            for jp in 0..=j_prime_max.min(self.order) {
                let sum: ExactRational = row.iter().enumerate().map(|(i, w)| w * &system.entry(i, jp)).sum();
                let expected = if j == jp { ExactRational::one() } else { ExactRational::zero() };
                if sum != expected {
                    bad.push((j, jp));
                }
            }
        }
        bad
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactRational {
        ExactRational::new(n, d).unwrap()
    }

    fn ci(j: usize) -> CoefficientIndex {
        CoefficientIndex::new(j).unwrap()
    }

    #[test]
    fn poly_examples() {
        assert_eq!(poly_p(ci(0), 3, 7).unwrap(), ExactRational::one());
        assert_eq!(poly_p(ci(1), 0, 0).unwrap(), ExactRational::zero());
        assert_eq!(poly_p(ci(1), 2, 3).unwrap(), q(-7, 1));
        assert!(poly_p(ci(1), 4, 3).is_err());
    }

    #[test]
    fn unsupported_rows() {
        assert_eq!(CoefficientIndex::new(11), Err(Error::UnsupportedClosedForm { j: 11 }));
        assert_eq!(closed_form_weights(1, ci(2)), Err(Error::RowUndefined { n: 1, j: 2 }));
    }

    #[test]
    fn small_closed_form_rows() {
        assert_eq!(closed_form_weights(0, ci(0)).unwrap(), vec![q(1, 1)]);
        assert_eq!(closed_form_weights(1, ci(0)).unwrap(), vec![q(-1, 1), q(2, 1)]);
        assert_eq!(closed_form_weights(1, ci(1)).unwrap(), vec![q(2, 1), q(-2, 1)]);
    }

    #[test]
    fn condition_numbers() {
        assert_eq!(weight_condition(0, ci(0)).unwrap(), q(1, 1));
        assert_eq!(weight_condition(1, ci(0)).unwrap(), q(3, 1));
        assert_eq!(weight_condition(1, ci(1)).unwrap(), q(4, 1));
    }

    #[test]
    fn lambda_zero_is_nondecreasing() {
        let mut prev = ExactRational::zero();
        for n in 0..=40 {
            let l = weight_condition(n, ci(0)).unwrap();
            assert!(l >= prev, "Λ_0({n}) decreased");
            prev = l;
        }
    }

    #[test]
    fn rows_beyond_ten_route_to_oracle() {
        let row = weight_row(12, 11).unwrap();
        assert_eq!(row.source(), WeightSource::Oracle);
        assert_eq!(row.weights(), oracle_weights(12, 11).unwrap().as_slice());
        assert_eq!(weight_row(12, 4).unwrap().source(), WeightSource::ClosedForm);
        assert!(weight_row(3, 4).is_err());
    }

    #[test]
    fn cache_returns_same_row() {
        let a = weight_row(17, 3).unwrap();
        let b = weight_row(17, 3).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
    }

    #[test]
    fn tables_agree_and_satisfy_identity() {
        let cf = WeightTable::closed_form(12, 10).unwrap();
        let or = WeightTable::oracle(12, 10).unwrap();
        for j in 0..=10 {
            assert_eq!(cf.row(j), or.row(j), "row {j}");
        }
        assert!(cf.row_identity_violations(12).is_empty());
    }
}
