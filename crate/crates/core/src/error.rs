use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precision of {0} decimal digits is below the minimum of 10")]
    PrecisionTooLow(u32),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("no closed-form weights for row j = {j} (closed forms exist for j <= 10); use the oracle weights")]
    UnsupportedClosedForm { j: usize },

    #[error("weight row j = {j} is undefined at order n = {n}")]
    RowUndefined { n: usize, j: usize },

    #[error("working precision of {required} digits required, but the input carries {available}")]
    PrecisionPolicy { required: u32, available: u32 },

    #[error("could not parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("estimates not certified to {decimals} decimals by order {order}")]
    NotConverged { order: usize, decimals: u32 },

    #[error("term a_{0} is not available")]
    TermUnavailable(u64),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
