//! Certification of the transcribed polynomials against the exact oracle.

use std::fmt;

use super::polynomials::{Sign, Term, POLYNOMIALS};
use super::{closed_form_row, MAX_CLOSED_FORM_ROW};
use crate::mpnum::ExactRational;
use crate::weights::VandermondeSystem;
use crate::{Error, Result};

/// Smallest `n_max` that exercises every closed-form row.
const MIN_CERTIFICATION_ORDER: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub j: usize,
    pub i: usize,
    pub closed_form: ExactRational,
    pub oracle: ExactRational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum RowStatus {
    /// Matches the oracle as transcribed.
    Certified,
    /// Matches once the unprinted signs take the values in `resolution`.
    Repaired { terms: Vec<Term>, resolution: Vec<Sign> },
    /// No sign assignment matches; the oracle is used instead.
    Corrupted,
}

#[derive(Clone, Debug)]
pub struct RowCertification {
    pub j: usize,
    pub status: RowStatus,
    /// Disagreements of the row as transcribed (unprinted signs read as `+`).
    /// Empty for certified rows.
    pub mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug)]
pub struct CertificationReport {
    pub n_max: usize,
    pub rows: Vec<RowCertification>,
}

impl CertificationReport {
    pub fn row(&self, j: usize) -> Option<&RowCertification> {
        self.rows.iter().find(|r| r.j == j)
    }

    /// True when every row either matched or was repaired.
    pub fn all_usable(&self) -> bool {
        self.rows.iter().all(|r| r.status != RowStatus::Corrupted)
    }

    pub fn corrupted_rows(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| r.status == RowStatus::Corrupted).map(|r| r.j).collect()
    }
}

impl fmt::Display for CertificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "closed-form weights checked for n <= {}", self.n_max)?;
        for row in &self.rows {
            match &row.status {
                RowStatus::Certified => writeln!(f, "P_{:<2} certified", row.j)?,
                RowStatus::Repaired { terms, resolution } => {
                    write!(f, "P_{:<2} repaired (unprinted sign resolved):", row.j)?;
                    for (t, s) in terms.iter().zip(resolution) {
                        let sign = if *s == Sign::Minus { '-' } else { '+' };
                        write!(f, " {sign}{}*i^{}*n^{}", t.coeff, t.i_pow, t.n_pow)?;
                    }
                    writeln!(f)?;
                }
                RowStatus::Corrupted => {
                    writeln!(f, "P_{:<2} corrupted ({} mismatches), using oracle", row.j, row.mismatches.len())?;
                    for m in row.mismatches.iter().take(5) {
                        writeln!(f, "  n={} i={}: closed form {} vs oracle {}", m.n, m.i, m.closed_form, m.oracle)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn mismatches(j: usize, oracle: &[Vec<Vec<ExactRational>>], resolution: &[Sign], stop_early: bool) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for (n, rows) in oracle.iter().enumerate() {
        if j > n {
            continue;
        }
        let cf = closed_form_row(n, j, resolution);
        for (i, (c, o)) in cf.into_iter().zip(&rows[j]).enumerate() {
            if &c != o {
                out.push(Mismatch { n, j, i, closed_form: c, oracle: o.clone() });
                if stop_early {
                    return out;
                }
            }
        }
    }
    out
}

/// Compares every closed-form row with the exact inverse for all orders
/// `n ≤ n_max`. Unprinted signs are resolved by trying every assignment.
pub fn certify_weights(n_max: usize) -> Result<CertificationReport> {
    if n_max < MIN_CERTIFICATION_ORDER {
        return Err(Error::InvalidArgument(format!(
            "certification needs n_max >= {MIN_CERTIFICATION_ORDER}, got {n_max}"
        )));
    }
    let oracle: Vec<Vec<Vec<ExactRational>>> = (0..=n_max)
        .map(|n| {
            let js: Vec<usize> = (0..=n.min(MAX_CLOSED_FORM_ROW)).collect();
            VandermondeSystem::new(n).inverse_rows(&js)
        })
        .collect();

    let rows = (0..=MAX_CLOSED_FORM_ROW)
        .map(|j| {
            let poly = &POLYNOMIALS[j];
            let unprinted: Vec<Term> = poly.terms.iter().copied().filter(|t| t.sign == Sign::Unprinted).collect();
            let as_printed = vec![Sign::Plus; unprinted.len()];
            let printed_mismatches = mismatches(j, &oracle, &as_printed, false);
            if printed_mismatches.is_empty() && unprinted.is_empty() {
                return RowCertification { j, status: RowStatus::Certified, mismatches: Vec::new() };
            }
            let passing: Vec<Vec<Sign>> = (0u32..1 << unprinted.len())
                .map(|bits| {
                    (0..unprinted.len())
                        .map(|b| if bits >> b & 1 == 1 { Sign::Minus } else { Sign::Plus })
                        .collect::<Vec<_>>()
                })
                .filter(|res| mismatches(j, &oracle, res, true).is_empty())
                .collect();
            let status = match passing.as_slice() {
                [only] => RowStatus::Repaired { terms: unprinted, resolution: only.clone() },
                _ => RowStatus::Corrupted,
            };
            RowCertification { j, status, mismatches: printed_mismatches }
        })
        .collect();
    Ok(CertificationReport { n_max, rows })
}
