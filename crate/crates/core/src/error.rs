use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("series expansion needs a denominator whose lowest coefficient is a unit, got {0}")]
    NonUnitDenominator(String),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    PolyParse { input: String, reason: String },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },
    #[error("inadmissible triple ({i},{j},{k}): {reason}")]
    Inadmissible {
        i: usize,
        j: usize,
        k: usize,
        reason: &'static str,
    },
    #[error("line {line}, column {column}: {message}")]
    NetworkParse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("layer {layer} ({generator}, line {line}): {message}")]
    NetworkWidth {
        layer: usize,
        line: usize,
        generator: String,
        message: String,
    },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            detail: detail.into(),
        }
    }
}
