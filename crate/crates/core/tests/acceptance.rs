//! End-to-end acceptance checks, one line per criterion.
//!
//! Run with `cargo test --test acceptance`. Exits nonzero when any criterion
//! fails.

use std::time::Instant;

use enhanced_neville::asymptotics::{recognize_form, tail_sum_oracle, FormKind, DEFAULT_MAX_DEN};
use enhanced_neville::catalog::{bethe_logarithm, bethe_logarithm_at_order, bethe_series, model_series, BetheForm, BetheState};
use enhanced_neville::mpnum::{const_pi, const_zeta};
use enhanced_neville::special::{lerch_phi_transformed, LerchArgs};
use enhanced_neville::transforms::{aitken_iterated, neville_one_step, neville_recursive, wynn_epsilon, working_precision, PartialSums};
use enhanced_neville::weights::{certify_weights, closed_form_weights, oracle_weights, weight_condition, CoefficientIndex, RowStatus, WeightTable};
use enhanced_neville::{BigReal, ExactRational, Precision};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::ops::Pow;
use rug::Float;

const MODEL_LIMIT: &str = "1.31279495382586579196348658390640442738912757477554";
const BETHE_1S_50: &str = "2.98412855576549761075977709001379796997518056617002";
const BETHE_1S_100: &str = "2.9841285557654976107597770900137979699751805661700200048159261392406576623067553286860620133040472249";
const BETHE_2S_100: &str = "2.8117698931205635152197427859416361128935514702973241909186969645324020201188910687017486120283124031";
const BETHE_2P_100: &str = "-0.0300167086302129024436757109511440639409330442310304668985253271944796896225718326244103127079973828";

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn q(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n, d).unwrap()
}

fn p(d: u32) -> Precision {
    Precision::new(d).unwrap()
}

fn pow10(e: i32, prec: Precision) -> BigReal {
    BigReal::from_i64(10, prec).powi(e).unwrap()
}

fn sci(x: &BigReal) -> String {
    x.to_sig_digits(3)
}

fn model_run() -> (PartialSums, BigReal, Vec<(usize, BigReal)>) {
    let n = 100;
    let w = working_precision(52, n, 10).unwrap();
    let sums = model_series().partial_sums(n, w).unwrap();
    let t = neville_one_step(&sums, 10).unwrap();
    let coeffs = t.coefficients.clone().unwrap().into_iter().collect();
    (sums, t.last().clone(), coeffs)
}

fn criterion_1() -> Outcome {
    let (_, c0, _) = model_run();
    let got = c0.to_fixed(50);
    let diff = (&c0 - &BigReal::parse(MODEL_LIMIT, c0.precision()).unwrap()).abs();
    let ok = got == MODEL_LIMIT && diff < pow10(-50, c0.precision()).div_i64(2);
    outcome(ok, format!("c_0(100) = {got}, |error| = {}", sci(&diff)))
}

fn criterion_2() -> Outcome {
    let (_, _, coeffs) = model_run();
    let prec = coeffs[0].1.precision();
    let pi = const_pi(prec);
    let form = |r: ExactRational, over_pi: ExactRational| r.to_real(prec) + over_pi.to_real(prec) / &pi;
    // closed forms as printed
    let printed: Vec<(usize, BigReal, i32)> = vec![
        (1, BigReal::from_i64(-1, prec), 20),
        (2, form(q(1, 2), q(1, 1)), 15),
        (3, form(q(-1, 6), q(-2, 1)), 15),
        (4, form(q(0, 1), q(37, 12)), 15),
        (5, form(q(1, 30), q(-131, 30)), 10),
        (6, form(q(0, 1), q(268, 45)), 10),
        (7, form(q(-1, 42), q(-549, 70)), 10),
        (8, form(q(0, 1), q(98347, 10000)), 10),
        (9, form(q(-1, 30), q(-9253, 840)), 10),
        (10, form(q(0, 1), q(66011, 6300)), 10),
    ];
    let mut ok = true;
    let mut misses = Vec::new();
    for (j, target, tol) in printed {
        let diff = (&coeffs[j].1 - &target).abs();
        if diff >= pow10(-tol, prec) {
            ok = false;
            misses.push(format!("c_{j} off by {}", sci(&diff)));
        }
    }
    let detail = if ok { "all ten coefficients within tolerance".to_string() } else { misses.join("; ") };
    outcome(ok, detail)
}

fn slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / n;
    let my = points.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

fn criterion_3() -> Outcome {
    let (sums, _, _) = model_run();
    let nev = neville_one_step(&sums, 0).unwrap();
    let head = sums.prefix(61);
    let wynn = wynn_epsilon(&head);
    let aitken = aitken_iterated(&head);
    let chi = |v: &Option<BigReal>| v.as_ref().map(BigReal::to_f64);
    let points: Vec<(f64, f64)> = (10..=60).filter_map(|n| chi(&nev.chi[n]).map(|c| (n as f64, c))).collect();
    let s = slope(&points);
    let (cn, cw, ca) = (chi(&nev.chi[60]), chi(&wynn.chi[60]), chi(&aitken.chi[60]));
    let ok = points.len() == 51
        && (-1.5..=-0.6).contains(&s)
        && matches!((cn, cw, ca), (Some(n), Some(w), Some(a)) if n <= w - 25.0 && n <= a - 25.0);
    outcome(ok, format!("slope {s:.3}; chi(60): neville {cn:.2?}, wynn {cw:.2?}, aitken {ca:.2?}"))
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for (state, expect) in [(BetheState::S1, BETHE_1S_100), (BetheState::S2, BETHE_2S_100), (BetheState::P2, BETHE_2P_100)] {
        let e = bethe_logarithm(state, 100).unwrap();
        let got = e.to_fixed(100);
        if got == expect {
            parts.push(format!("{state} ok (order {})", e.order));
        } else {
            ok = false;
            let at = got.chars().zip(expect.chars()).position(|(a, b)| a != b).unwrap_or(got.len().min(expect.len()));
            parts.push(format!("{state} differs at char {at}: got ...{} printed ...{}", &got[at.saturating_sub(5)..], &expect[at.saturating_sub(5)..]));
        }
    }
    let e58 = bethe_logarithm_at_order(BetheState::S1, 58, 50).unwrap();
    let s58 = e58.to_fixed(50);
    if s58 == BETHE_1S_50 {
        parts.push("1S 50 decimals at order 58 ok".into());
    } else {
        ok = false;
        parts.push(format!("1S at order 58 gave {s58}"));
    }
    outcome(ok, parts.join("; "))
}

fn criterion_5() -> Outcome {
    let n = 120;
    let w = working_precision(100, n, 10).unwrap();
    let sums = bethe_series(BetheState::S1, BetheForm::Compact).unwrap().partial_sums(n, w).unwrap();
    let top = neville_one_step(&sums, 10).unwrap().coefficients.unwrap();
    let prev = neville_one_step(&sums.prefix(n - 1), 10).unwrap().coefficients.unwrap();
    let expect = [(3, q(-4, 3)), (4, q(27, 4)), (5, q(-703, 30)), (6, q(3329, 48)), (7, q(-63163, 336)), (8, q(184961, 384)), (9, q(-569323, 480)), (10, q(7256477, 2560))];
    let mut ok = true;
    let mut worst = BigReal::zero(w);
    let mut misses = Vec::new();
    for (j, target) in expect {
        let x = &top[&j];
        let tp = enhanced_neville::asymptotics::trusted_precision(x, &prev[&j]);
        let r = tp.map(|tp| recognize_form(&x.with_precision(tp), DEFAULT_MAX_DEN));
        let residual = (x - &target.to_real(w)).abs();
        let hit = matches!(&r, Some(r) if r.kind == FormKind::Rational && r.rational == target);
        if !hit || residual >= pow10(-30, w) {
            ok = false;
            misses.push(format!("c_{j}: {:?}", r.map(|r| r.describe())));
        }
        if residual > worst {
            worst = residual;
        }
    }
    let detail = if ok { format!("c_3..c_10 recognized, largest residual {}", sci(&worst)) } else { misses.join("; ") };
    outcome(ok, detail)
}

fn criterion_6() -> Outcome {
    let n_max = 40;
    let report = certify_weights(n_max).unwrap();
    let repairs: Vec<usize> = report
        .rows
        .iter()
        .filter(|r| matches!(r.status, RowStatus::Repaired { .. }))
        .map(|r| r.j)
        .collect();
    let mut ok = report.all_usable() && repairs.iter().all(|&j| j == 8);
    let mut checked = 0;
    for n in 0..=n_max {
        let table = WeightTable::closed_form(n, n.min(10)).unwrap();
        for j in 0..=n.min(10) {
            let cf = closed_form_weights(n, CoefficientIndex::new(j).unwrap()).unwrap();
            ok &= cf == oracle_weights(n, j).unwrap();
            checked += 1;
        }
        ok &= table.row_identity_violations(n).is_empty();
    }
    outcome(ok, format!("{checked} rows equal the oracle and satisfy the identity; sign repairs in rows {repairs:?}"))
}

fn random_sums(rng: &mut ChaCha8Rng, n: usize, prec: Precision) -> PartialSums {
    let vals = (0..=n)
        .map(|_| {
            let num: i64 = rng.gen_range(-1_000_000_000..=1_000_000_000);
            ExactRational::new(num, 1_000_000_000).unwrap().to_real(prec)
        })
        .collect();
    PartialSums::new(vals).unwrap()
}

fn criterion_7() -> Outcome {
    let prec = p(50);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [5usize, 10, 20, 40] {
        let lambda = weight_condition(n, CoefficientIndex::new(0).unwrap()).unwrap().log10_abs();
        let exponent = -(f64::from(prec.digits()) - lambda - 2.0).floor() as i32;
        let tol = pow10(exponent, prec);
        let mut worst = BigReal::zero(prec);
        for _ in 0..100 {
            let s = random_sums(&mut rng, n, prec);
            let a = neville_one_step(&s, 0).unwrap();
            let b = neville_recursive(&s);
            let d = (a.last() - b.last()).abs();
            if d > worst {
                worst = d;
            }
        }
        ok &= worst < tol;
        parts.push(format!("n={n}: {} < 1e{exponent}", sci(&worst)));
    }
    outcome(ok, parts.join(", "))
}

fn dyadic(rng: &mut ChaCha8Rng, lo: f64, hi: f64, bits: i32) -> ExactRational {
    let scale = 1i64 << bits;
    let m = rng.gen_range((lo * scale as f64) as i64..(hi * scale as f64) as i64);
    let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
    ExactRational::new(sign * m, scale).unwrap()
}

fn criterion_8() -> Outcome {
    let prec = p(40);
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst_ulps = 0f64;
    for _ in 0..50 {
        let sigma = dyadic(&mut rng, 1.0, 10.0, 12);
        let alpha = dyadic(&mut rng, 0.1, 10.0, 12);
        let lambda = loop {
            let l = dyadic(&mut rng, 0.1, 0.95, 10);
            if l.abs() > q(1, 10) && l.abs() < q(19, 20) {
                break l;
            }
        };
        let vals: Vec<BigReal> = (0..3).map(|k| (&sigma + &(&alpha * &lambda.pow(k).unwrap())).to_real(prec)).collect();
        let s = PartialSums::new(vals).unwrap();
        let target = sigma.to_real(prec);
        let ulp = target.ulp();
        for t in [wynn_epsilon(&s), aitken_iterated(&s)] {
            let err = (&t.estimates[2] - &target).abs();
            let ulps = (err / &ulp).to_f64();
            worst_ulps = worst_ulps.max(ulps);
        }
    }
    outcome(worst_ulps <= 2.0, format!("worst error {worst_ulps:.2} ulp over 50 cases, both methods"))
}

/// `∫_0^1 t^{a−1}/(1 − z t) dt` by Gauss–Legendre quadrature.
fn quadrature_oracle(z: &ExactRational, a: u32, digits: u32, nodes: usize) -> Float {
    let bits = (f64::from(digits + 20) * std::f64::consts::LOG2_10) as u32;
    let pi = Float::with_val(bits, rug::float::Constant::Pi);
    let zf = Float::with_val(bits, &rug::Rational::from((z.numerator().parse::<rug::Integer>().unwrap(), z.denominator().parse::<rug::Integer>().unwrap())));
    let mut total = Float::with_val(bits, 0);
    let tol = Float::with_val(bits, Float::i_exp(1, -(bits as i32) + 8));
    for i in 1..=nodes {
        // Newton on P_N from the Tricomi initial guess
        let mut x = Float::with_val(bits, &pi * ((i as f64 - 0.25) / (nodes as f64 + 0.5)));
        x.cos_mut();
        let mut dp = Float::new(bits);
        for _ in 0..100 {
            let (mut p0, mut p1) = (Float::with_val(bits, 1), x.clone());
            for k in 2..=nodes {
                let p2 = (Float::with_val(bits, &x * &p1) * (2 * k - 1) as u32 - Float::with_val(bits, &p0 * (k - 1) as u32)) / k as u32;
                p0 = p1;
                p1 = p2;
            }
            let x2m1 = Float::with_val(bits, &x * &x) - 1u32;
            dp = Float::with_val(bits, Float::with_val(bits, &x * &p1) - &p0) * nodes as u32 / &x2m1;
            let step = Float::with_val(bits, &p1 / &dp);
            x -= &step;
            if step.abs() < tol {
                break;
            }
        }
        let one_m_x2 = Float::with_val(bits, 1u32 - Float::with_val(bits, &x * &x));
        let weight = Float::with_val(bits, 2u32 / (one_m_x2 * Float::with_val(bits, &dp * &dp)));
        // map [-1, 1] to [0, 1]
        let t = Float::with_val(bits, (x + 1u32) / 2u32);
        let num = Float::with_val(bits, t.clone().pow(a - 1));
        let den = Float::with_val(bits, 1u32 - Float::with_val(bits, &zf * &t));
        total += Float::with_val(bits, weight * num / den);
    }
    total / 2u32
}

fn criterion_9() -> Outcome {
    let digits = 40;
    let prec = p(digits);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut ok = true;
    let mut worst_q = 0f64;
    let mut worst_r = 0f64;
    for i in 0..25 {
        let num = -100 - (i * 200) / 24;
        let z = q(num as i64, 100);
        let a: u64 = rng.gen_range(2..=40);
        let args = LerchArgs::new(z.to_real(prec.plus(10)), 1, a).unwrap();
        let phi = lerch_phi_transformed(&args, prec).unwrap();
        let oracle = quadrature_oracle(&z, a as u32, digits, 120);
        let oracle = BigReal::parse(&oracle.to_string_radix(10, Some(digits as usize + 15)), prec.plus(10)).unwrap();
        let rel = ((&phi - &oracle).abs() / oracle.abs()).to_f64();
        worst_q = worst_q.max(rel);
        ok &= rel <= 10f64.powi(-(digits as i32));

        let next = lerch_phi_transformed(&LerchArgs::new(z.to_real(prec.plus(10)), 1, a + 1).unwrap(), prec).unwrap();
        let rhs = next.mul_rational(&z) + q(1, a as i64).to_real(prec);
        let rel_r = ((&phi - &rhs).abs() / phi.abs()).to_f64();
        worst_r = worst_r.max(rel_r);
        ok &= rel_r <= 10f64.powi(-(digits as i32 - 3));
    }
    outcome(ok, format!("25 points, quadrature rel. error <= {worst_q:.1e}, recurrence rel. error <= {worst_r:.1e}"))
}

fn criterion_10() -> Outcome {
    let prec = p(50);
    let tol = pow10(-48, prec);
    let mut worst = BigReal::zero(prec);
    for a in 2..=6u32 {
        let zeta = const_zeta(a, prec).unwrap();
        let mut head = ExactRational::zero();
        for n in 0..=100u64 {
            if n > 0 {
                head = head + ExactRational::new(1, n as i64).unwrap().pow(a as i32).unwrap();
            }
            let total = tail_sum_oracle(a, n, prec).unwrap() + head.to_real(prec);
            let d = (&total - &zeta).abs();
            if d > worst {
                worst = d;
            }
        }
    }
    outcome(worst <= tol, format!("505 cases, worst |tail + head - zeta(a)| = {}", sci(&worst)))
}

type Criterion = (u32, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        (1, "model-series limit to 50 decimals", criterion_1),
        (2, "model-series coefficients c_1..c_10", criterion_2),
        (3, "chi trajectories (Neville vs Wynn/Aitken)", criterion_3),
        (4, "Bethe logarithms to 100 decimals", criterion_4),
        (5, "Bethe rational coefficients c_3..c_10", criterion_5),
        (6, "closed-form weights vs exact oracle, n <= 40", criterion_6),
        (7, "one-step vs recursive Neville", criterion_7),
        (8, "Shanks/Aitken exactness", criterion_8),
        (9, "Lerch transformed series vs quadrature", criterion_9),
        (10, "power-sum tails vs zeta", criterion_10),
    ];
    let mut failed = 0;
    for (id, title, check) in criteria {
        let start = Instant::now();
        let result = check();
        let status = if result.pass { "PASS" } else { "FAIL" };
        if !result.pass {
            failed += 1;
        }
        println!("criterion {id:>2}: {status}  {title} ({:.1}s): {}", start.elapsed().as_secs_f64(), result.detail);
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
