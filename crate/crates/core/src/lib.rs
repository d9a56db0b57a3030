//! Arbitrary-precision convergence acceleration built around the one-step
//! Neville transformation.
//!
//! Partial sums `s_0, …, s_n` are read as samples of a function `f` at the
//! abscissas `x_i = 1/(i+1)`. Fitting the interpolating polynomial
//! `f(x) = c_0 + c_1 x + … + c_n x^n` and evaluating at `x = 0` extrapolates
//! the limit of the series, while the higher coefficients describe how the
//! partial sums approach it. The rows of the inverse Vandermonde matrix have
//! closed forms for `j ≤ 10`, so every `c_j(n)` is a single weighted sum of
//! the inputs.
//!
//! The crate is organised as follows:
//!
//! * [`mpnum`]: decimal-precision real numbers, exact rationals, constants.
//! * [`weights`]: exact weight tables, the Vandermonde oracle, certification.
//! * [`transforms`]: one-step and recursive Neville, Wynn ε, iterated Aitken Δ², χ(n).
//! * [`asymptotics`]: subleading coefficient estimators, power-sum tails,
//!   closed-form recognition.
//! * [`special`]: the Lerch transcendent and polygamma functions.
//! * [`catalog`]: the model series and the hydrogen Bethe-logarithm series.
//! * [`cli`]: the `neville` command-line front end.

pub mod asymptotics;
pub mod catalog;
pub mod cli;
mod error;
pub mod mpnum;
pub mod special;
pub mod transforms;
pub mod weights;

pub use error::{Error, Result};
pub use mpnum::{BigReal, ExactRational, Precision};
