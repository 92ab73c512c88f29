use thiserror::Error;

/// Errors produced by matrix, matroid, and construction operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("column index {index} out of range for matrix with {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },

    #[error("duplicate column index {0} in selection")]
    DuplicateColumn(usize),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("search budget exhausted while {0}")]
    BudgetExhausted(String),
}

pub type Result<T> = std::result::Result<T, Error>;
