use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("divisor leading coefficient is not a constant")]
    NonConstantLeading,
    #[error("column basis mismatch: expected {expected} columns, vector needs {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("sector mismatch: expected {expected}, got {found}")]
    SectorMismatch { expected: &'static str, found: &'static str },
    #[error("vector is not θ-even: {0}")]
    NotThetaEven(String),
    #[error("weight {0} is not admissible for this sector")]
    BadWeight(String),
    #[error("{0} is not a scalar multiple of the top-level vector")]
    NotEigenvector(String),
    #[error("no reduction found at cutoff {cutoff}")]
    Inconclusive { cutoff: u32 },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown check id `{0}`")]
    UnknownCheck(String),
}
