use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no generators given")]
    EmptyInput,
    #[error("the constant monomial generates the unit ideal")]
    UnitIdeal,
    #[error("exponent {0} exceeds the configured cap {1}")]
    ExponentOverflow(u64, u32),
    #[error("generator index {index} out of range for {n} generators")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("syzygy indices must satisfy i < j (got {0}, {1})")]
    NotOrdered(usize, usize),
    #[error("the ideal is not generic")]
    NotGeneric,
    #[error("the ideal is not primary to the maximal ideal")]
    NotMPrimary,
    #[error("{n} generators exceed the cap of {cap}")]
    TooManyGenerators { n: usize, cap: usize },
    #[error("internal error: entry at ({row}, {col}) is not multigraded-homogeneous")]
    InternalNonHomogeneous { row: usize, col: usize },
    #[error("internal error: {0}")]
    Internal(String),
    #[error("second syzygy sigma({0},{1}) is not a column of f2")]
    MissingSecondSyzygy(usize, usize),
    #[error("could not generate an ideal with {n} generators after {attempts} attempts")]
    GenerationExhausted { n: usize, attempts: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("rank evaluation degenerated at every sampled point")]
    DegenerateEvaluation,
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
