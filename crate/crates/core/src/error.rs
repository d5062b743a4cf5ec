use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    /// A factor `x + a_i` of a telescoping product vanished (1-based position).
    #[error("zero denominator at factor x + a_{0}")]
    ZeroFactor(usize),

    #[error("{}", index_message(*.index, *.bound))]
    IndexBound { index: Option<u64>, bound: u64 },

    #[error("{0}")]
    InvalidParameter(String),

    #[error("malformed number: {0}")]
    Parse(String),

    /// Two computations that must agree did not; always a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

fn index_message(index: Option<u64>, bound: u64) -> String {
    match index {
        Some(n) => format!("index {n} exceeds the index bound {bound}"),
        None => format!("index overflows u64 (bound {bound})"),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
