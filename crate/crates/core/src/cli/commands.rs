use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use rayon::prelude::*;

use super::{BetheArgs, CoeffArgs, Format, LerchCliArgs, LerchPath, RunArgs, VerifyArgs, EXIT_OK};
use crate::asymptotics::{d_estimator, d_trajectory_csv, recognize_form, trusted_precision};
use crate::catalog::{
    bethe_logarithm, bethe_logarithm_at_order, bethe_series, input_digits, model_series, parse_decimal_lines,
    BetheForm, BetheState, BETHE_MAX_DECIMALS,
};
use crate::mpnum::{BigReal, ExactRational, Precision};
use crate::special::{lerch_phi_direct, lerch_phi_transformed, LerchArgs};
use crate::transforms::{chi_of, format_chi, neville_one_step, working_precision, Method, PartialSums, TransformResult};
use crate::weights::{certify_weights, CoefficientIndex};
use crate::{Error, Result};

const DEFAULT_ORDER: usize = 20;
/// Significant digits beyond the requested decimals, covering the integer part.
const INTEGER_PART_DIGITS: u32 = 2;
/// Parse precision above the output decimals when no Neville method runs.
const NONLINEAR_FILE_GUARD_DIGITS: u32 = 15;

pub(super) struct Output {
    pub text: String,
    pub path: Option<PathBuf>,
    pub code: i32,
    /// Printed to standard error after a successful run.
    pub note: Option<String>,
}

/// Settings shared by the acceleration commands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub methods: Vec<Method>,
    pub order: Option<usize>,
    pub output_digits: u32,
    pub series: String,
    pub partial_sums: bool,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    fn from_args(a: &RunArgs, default_methods: &[Method]) -> Result<Self> {
        if a.digits == 0 {
            return Err(Error::InvalidArgument("--digits must be at least 1".into()));
        }
        let mut methods = if a.methods.is_empty() { default_methods.to_vec() } else { a.methods.clone() };
        methods.dedup();
        Ok(RunConfig {
            methods,
            order: a.order,
            output_digits: a.digits,
            series: a.series.clone(),
            partial_sums: a.partial_sums,
            output: a.output.clone(),
            format: a.format,
        })
    }

    /// Loads partial sums at a precision that supports the requested
    /// decimals for coefficient rows up to `j_max`.
    fn load(&self, j_max: usize) -> Result<PartialSums> {
        let digits = self.output_digits + INTEGER_PART_DIGITS;
        let catalog = match self.series.as_str() {
            "model" => Some(model_series()),
            "bethe-1s" => Some(bethe_series(BetheState::S1, BetheForm::Compact)?),
            "bethe-2s" => Some(bethe_series(BetheState::S2, BetheForm::Shifted)?),
            "bethe-2p" => Some(bethe_series(BetheState::P2, BetheForm::Shifted)?),
            _ => None,
        };
        if let Some(spec) = catalog {
            let order = self.order.unwrap_or(DEFAULT_ORDER);
            let p = working_precision(digits, order, j_max.min(order))?;
            return spec.partial_sums(order, p);
        }

        let text = std::fs::read_to_string(&self.series).map_err(|e| {
            Error::InvalidArgument(format!("unknown series {:?} and cannot read it as a file: {e}", self.series))
        })?;
        let count = parse_decimal_lines(&text, Precision::new(Precision::MIN_DIGITS)?)?.len();
        let order = self.order.unwrap_or(count - 1);
        if order >= count {
            return Err(Error::InvalidArgument(format!("order {order} needs {} values, the file has {count}", order + 1)));
        }
        // the Λ rule bounds the cancellation in the Neville weight sums;
        // the nonlinear methods work at the precision the file carries
        let uses_neville = self.methods.iter().any(|m| matches!(m, Method::NevilleOneStep | Method::NevilleRecursive));
        let required = if uses_neville {
            let required = working_precision(digits, order, j_max.min(order))?;
            let available = input_digits(&text);
            if available < required.digits() {
                return Err(Error::PrecisionPolicy { required: required.digits(), available });
            }
            required
        } else {
            Precision::new((digits + NONLINEAR_FILE_GUARD_DIGITS).max(Precision::MIN_DIGITS))?
        };
        let mut values = parse_decimal_lines(&text, required)?;
        values.truncate(order + 1);
        let sums = if self.partial_sums { PartialSums::new(values)? } else { PartialSums::from_terms(&values)? };
        Ok(sums.with_origin(self.series.clone()))
    }
}

fn run_methods(methods: &[Method], s: &PartialSums) -> Result<Vec<TransformResult>> {
    methods.par_iter().map(|m| m.apply(s)).collect()
}

pub(super) fn accelerate(a: &RunArgs) -> Result<Output> {
    let cfg = RunConfig::from_args(a, &[Method::NevilleOneStep])?;
    let sums = cfg.load(0)?;
    let results = run_methods(&cfg.methods, &sums)?;
    let d = cfg.output_digits;
    let text = match (cfg.format, results.as_slice()) {
        (Format::Csv, [single]) => single.to_csv(d),
        (Format::Csv, many) => {
            let mut out = String::from("method,order,estimate,chi\n");
            for r in many {
                for line in r.to_csv(d).lines().skip(1) {
                    let _ = writeln!(out, "{},{line}", r.method);
                }
            }
            out
        }
        (Format::Plain, many) => {
            let mut out = String::new();
            for r in many {
                let _ = writeln!(out, "# {}", r.method);
                for (k, t) in r.estimates.iter().enumerate() {
                    let chi = r.chi.get(k).cloned().flatten().map(|c| format_chi(&c)).unwrap_or_default();
                    let _ = writeln!(out, "{k:>5}  {}  {chi}", t.to_fixed(d));
                }
            }
            out
        }
    };
    Ok(Output { text, path: cfg.output, code: EXIT_OK, note: None })
}

fn chi_column(m: Method) -> &'static str {
    match m {
        Method::NevilleOneStep => "chi_neville",
        Method::NevilleRecursive => "chi_neville_recursive",
        Method::WynnEpsilon => "chi_wynn",
        Method::AitkenIterated => "chi_aitken",
    }
}

pub(super) fn compare(a: &RunArgs) -> Result<Output> {
    let cfg = RunConfig::from_args(a, &Method::ALL)?;
    if cfg.methods.len() < 2 {
        return Err(Error::InvalidArgument("compare needs at least two methods".into()));
    }
    let sums = cfg.load(0)?;
    let results = run_methods(&cfg.methods, &sums)?;
    let series_chi = chi_of(sums.values());
    let sep = if cfg.format == Format::Csv { "," } else { "  " };
    let mut header = vec!["n", "chi_series"];
    header.extend(results.iter().map(|r| chi_column(r.method)));
    let mut text = header.join(sep);
    text.push('\n');
    let cell = |c: &Option<BigReal>| c.as_ref().map(format_chi).unwrap_or_default();
    for (n, chi) in series_chi.iter().enumerate() {
        let mut row = vec![n.to_string(), cell(chi)];
        row.extend(results.iter().map(|r| cell(&r.chi[n])));
        text.push_str(&row.join(sep));
        text.push('\n');
    }
    Ok(Output { text, path: cfg.output, code: EXIT_OK, note: None })
}

pub(super) fn coeffs(a: &CoeffArgs) -> Result<Output> {
    let mut cfg = RunConfig::from_args(&a.run, &[Method::NevilleOneStep])?;
    // coefficients always come from the one-step weights
    cfg.methods = vec![Method::NevilleOneStep];
    let j_max = CoefficientIndex::new(a.j_max)?.get();
    let sums = cfg.load(j_max)?;
    let n = sums.order();
    if j_max > n {
        return Err(Error::RowUndefined { n, j: j_max });
    }
    let d = cfg.output_digits;

    if let Some(j) = a.trajectory {
        let top = neville_one_step(&sums, j.saturating_sub(1).min(n))?;
        let coeffs = top.coefficients.expect("filled by one-step Neville");
        let known: Vec<BigReal> = coeffs.values().take(j).cloned().collect();
        let traj = d_estimator(&sums, &known, j)?;
        return Ok(Output { text: d_trajectory_csv(&traj, d), path: cfg.output, code: EXIT_OK, note: None });
    }

    let top = neville_one_step(&sums, j_max)?.coefficients.expect("filled by one-step Neville");
    let prev: BTreeMap<usize, BigReal> = if n > j_max {
        neville_one_step(&sums.prefix(n - 1), j_max)?.coefficients.expect("filled by one-step Neville")
    } else {
        BTreeMap::new()
    };
    let sep = if cfg.format == Format::Csv { "," } else { "  " };
    let mut text = ["j", "value", "recognized"].join(sep);
    text.push('\n');
    for (j, c) in &top {
        let recognized = prev
            .get(j)
            .and_then(|p| trusted_precision(c, p))
            .map(|tp| recognize_form(&c.with_precision(tp), a.max_den).describe())
            .unwrap_or_default();
        let _ = writeln!(text, "{j}{sep}{}{sep}{recognized}", c.to_fixed(d));
    }
    Ok(Output { text, path: cfg.output, code: EXIT_OK, note: None })
}

pub(super) fn bethe(a: &BetheArgs) -> Result<Output> {
    let state: BetheState = a.state.parse()?;
    if a.digits == 0 || a.digits > BETHE_MAX_DECIMALS {
        return Err(Error::InvalidArgument(format!("--digits must be between 1 and {BETHE_MAX_DECIMALS}")));
    }
    let eval = match a.order {
        Some(order) => bethe_logarithm_at_order(state, order, a.digits)?,
        None => bethe_logarithm(state, a.digits)?,
    };
    let note = (!eval.certified).then(|| {
        format!(
            "note: not certified at order {}: the top estimates differ by {}",
            eval.order,
            eval.top_differences[0].to_sig_digits(3)
        )
    });
    Ok(Output { text: format!("{}\n", eval.to_fixed(a.digits)), path: None, code: EXIT_OK, note })
}

pub(super) fn lerch(a: &LerchCliArgs) -> Result<Output> {
    let p = Precision::new(a.digits.max(Precision::MIN_DIGITS))?;
    let zq: ExactRational = a.z.parse()?;
    let args = LerchArgs::new(zq.to_real(p.plus(10)), a.s, a.a)?;
    let in_disc = zq.abs() < ExactRational::one() || zq == ExactRational::one();
    let value = match a.path {
        LerchPath::Direct => lerch_phi_direct(&args, p)?,
        LerchPath::Transformed => lerch_phi_transformed(&args, p)?,
        LerchPath::Auto if in_disc => lerch_phi_direct(&args, p)?,
        LerchPath::Auto => lerch_phi_transformed(&args, p)?,
    };
    Ok(Output { text: format!("{}\n", value.to_sig_digits(a.digits)), path: None, code: EXIT_OK, note: None })
}

pub(super) fn verify_weights(a: &VerifyArgs) -> Result<Output> {
    let report = certify_weights(a.n_max)?;
    let code = super::certification_exit_code(&report);
    Ok(Output { text: report.to_string(), path: None, code, note: None })
}
