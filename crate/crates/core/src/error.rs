use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field F_{p}^{m} is too large to represent")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("matrices or elements live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("root scan budget exceeded: splitting field would have {0} elements")]
    BudgetExceeded(u128),
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid cyclic action: {0}")]
    InvalidAction(String),
    #[error("invalid deformation setting: {0}")]
    InvalidSetting(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
