use thiserror::Error;

/// Errors shared by every module in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("length mismatch in {context}: {left} vs {right}")]
    LengthMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },
    #[error("arity mismatch: expected {expected} components, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("negative weight {value} at index {index}")]
    NegativeWeight { index: usize, value: f64 },
    #[error("total lower weight is zero; interval mean undefined")]
    ZeroLowerWeight,
    #[error("{context}: value {value} outside [{lo}, {hi}]")]
    OutOfRange {
        context: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("unordered breakpoints in {0}")]
    UnorderedBreakpoints(&'static str),
    #[error("unknown {kind} '{name}'")]
    UnknownIdentifier { kind: &'static str, name: String },
    #[error("duplicate {kind} '{name}'")]
    DuplicateIdentifier { kind: &'static str, name: String },
    #[error("missing entry: {0}")]
    MissingEntry(String),
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
