//! Weight rows checked against Lagrange interpolation in exact arithmetic.

use enhanced_neville::weights::{closed_form_weights, oracle_weights, weight_condition, weight_row, CoefficientIndex, WeightTable};
use enhanced_neville::{BigReal, ExactRational, Precision};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d).unwrap()
}

fn x(i: usize) -> ExactRational {
    q(1, i as i64 + 1)
}

/// Coefficients of the Lagrange basis polynomial `L_i` on `x_0..x_n`, lowest first.
fn lagrange_basis(i: usize, n: usize) -> Vec<ExactRational> {
    let mut poly = vec![ExactRational::one()];
    let mut denom = ExactRational::one();
    for k in (0..=n).filter(|&k| k != i) {
        // multiply by (t - x_k)
        let mut next = vec![ExactRational::zero(); poly.len() + 1];
        for (d, c) in poly.iter().enumerate() {
            next[d + 1] = &next[d + 1] + c;
            next[d] = &next[d] - &(c * &x(k));
        }
        poly = next;
        denom = denom * (x(i) - x(k));
    }
    poly.into_iter().map(|c| c / denom.clone()).collect()
}

fn lagrange_weights(n: usize, j: usize) -> Vec<ExactRational> {
    (0..=n).map(|i| lagrange_basis(i, n)[j].clone()).collect()
}

#[test]
fn frozen_small_rows() {
    let n = 2;
    assert_eq!(closed_form_weights(n, CoefficientIndex::new(0).unwrap()).unwrap(), vec![q(1, 2), q(-4, 1), q(9, 2)]);
    assert_eq!(closed_form_weights(1, CoefficientIndex::new(1).unwrap()).unwrap(), vec![q(2, 1), q(-2, 1)]);
    // Λ_0(2) = 1/2 + 4 + 9/2
    assert_eq!(weight_condition(2, CoefficientIndex::new(0).unwrap()).unwrap(), q(9, 1));
}

#[test]
fn closed_forms_match_lagrange_up_to_order_16() {
    for n in 0..=16 {
        for j in 0..=n.min(10) {
            let expect = lagrange_weights(n, j);
            assert_eq!(closed_form_weights(n, CoefficientIndex::new(j).unwrap()).unwrap(), expect, "n={n} j={j}");
            assert_eq!(oracle_weights(n, j).unwrap(), expect, "oracle n={n} j={j}");
        }
    }
}

#[test]
fn rows_beyond_ten_have_no_closed_form() {
    assert!(CoefficientIndex::new(11).is_err());
    assert_eq!(oracle_weights(12, 11).unwrap(), lagrange_weights(12, 11));
}

#[test]
fn weight_row_sums_close_under_zeroth_identity() {
    for n in [3usize, 9, 30] {
        let table = WeightTable::closed_form(n, n.min(10)).unwrap();
        assert!(table.row_identity_violations(n).is_empty());
        let row = table.row(0).unwrap();
        let total: ExactRational = row.iter().cloned().sum();
        assert_eq!(total, ExactRational::one());
    }
}

#[test]
fn condition_number_grows_with_order() {
    let j = CoefficientIndex::new(0).unwrap();
    let l10 = weight_condition(10, j).unwrap().log10_abs();
    let l40 = weight_condition(40, j).unwrap().log10_abs();
    assert!(l40 > l10 + 10.0, "{l10} {l40}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn polynomial_reproduction(n in 1usize..=24, coeffs in prop::collection::vec(-1000i64..=1000, 1..=25)) {
        let deg = (coeffs.len() - 1).min(n);
        let c: Vec<ExactRational> = coeffs[..=deg].iter().map(|&v| q(v, 7)).collect();
        let samples: Vec<ExactRational> = (0..=n)
            .map(|i| c.iter().enumerate().map(|(d, cd)| cd * &x(i).pow(d as i32).unwrap()).sum())
            .collect();
        for j in 0..=n.min(10) {
            let got = weight_row(n, j).unwrap().dot_exact(&samples);
            let expect = c.get(j).cloned().unwrap_or_else(ExactRational::zero);
            prop_assert_eq!(got, expect);
        }
    }

    #[test]
    fn closed_form_equals_lagrange(n in 0usize..=22, j in 0usize..=10) {
        prop_assume!(j <= n);
        prop_assert_eq!(closed_form_weights(n, CoefficientIndex::new(j).unwrap()).unwrap(), lagrange_weights(n, j));
    }

    #[test]
    fn rounded_apply_tracks_exact_dot(n in 1usize..=20, seed in prop::collection::vec(-1_000_000i64..=1_000_000, 21)) {
        let p = Precision::new(40).unwrap();
        let exact: Vec<ExactRational> = seed[..=n].iter().map(|&v| q(v, 1024)).collect();
        let reals: Vec<BigReal> = exact.iter().map(|e| e.to_real(p)).collect();
        let row = weight_row(n, 0).unwrap();
        let a = row.apply(&reals, p);
        let b = row.dot_exact(&exact).to_real(p);
        prop_assert!((&a - &b).abs() <= b.ulp().mul_i64(2));
    }
}
