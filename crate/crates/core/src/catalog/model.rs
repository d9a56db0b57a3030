use std::collections::BTreeMap;

use rug::Float;

use super::{ClosedForm, KnownLimit, SeriesSpec};
use crate::mpnum::{const_pi, BigReal, ExactRational};

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d).expect("nonzero denominator")
}

/// `a_k = 4 / (π (k+1)²) · arctan((k+2)/(k+3))`, `k ≥ 0`.
///
/// The prefactor makes `a_k ≈ 1/k²` for large `k`, so the partial sums
/// approach the limit like `−1/(n+1)`.
pub fn model_series() -> SeriesSpec {
    let coeffs: BTreeMap<usize, ClosedForm> = [
        (1, ClosedForm::rational(q(-1, 1))),
        (2, ClosedForm::with_pi(q(1, 2), q(1, 1))),
        (3, ClosedForm::with_pi(q(-1, 6), q(-2, 1))),
        (4, ClosedForm::with_pi(q(0, 1), q(37, 12))),
        (5, ClosedForm::with_pi(q(1, 30), q(-131, 30))),
        (6, ClosedForm::with_pi(q(0, 1), q(268, 45))),
        (7, ClosedForm::with_pi(q(-1, 42), q(-549, 70))),
        // c_8 and c_9 as derived from the large-k expansion of a_k
        (8, ClosedForm::with_pi(q(0, 1), q(98347, 10080))),
        (9, ClosedForm::with_pi(q(1, 30), q(-9253, 840))),
        (10, ClosedForm::with_pi(q(0, 1), q(66011, 6300))),
    ]
    .into_iter()
    .collect();

    SeriesSpec::new("model", 0, |k, p| {
        let work = p.plus(10);
        let bits = work.bits();
        let pi = const_pi(work);
        let ratio = Float::with_val(bits, k + 2) / Float::with_val(bits, k + 3);
        let atan = Float::with_val(bits, ratio.atan());
        let k1 = Float::with_val(bits, k + 1);
        let den = Float::with_val(bits, pi.as_float() * Float::with_val(bits, &k1 * &k1));
        let v = Float::with_val(bits, atan * 4u32) / den;
        Ok(BigReal::from_float(v, p))
    })
    .with_known_limit(KnownLimit {
        decimal: "1.31279495382586579196348658390640442738912757477554",
        provenance: "50-decimal published value",
    })
    .with_known_coeffs(coeffs)
}
