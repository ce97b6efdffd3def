use alloc::string::String;

use crate::partitions::Partition;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("system has {rows} rows but {cols} unknowns")]
    Underdetermined { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("rank-deficient system (rank {rank} < {cols})")]
    RankDeficient { rank: usize, cols: usize },
    #[error("inconsistent system (witness row {row})")]
    Inconsistent { row: usize },
    #[error("partitions of different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("box ({row}, {col}) is outside the diagram {lambda}")]
    BoxOutside { lambda: Partition, row: usize, col: usize },
    #[error("stretch factors must be positive")]
    NonPositiveStretch,
    #[error("{what} cap exceeded: requested {requested}, cap {cap}")]
    CapExceeded { what: &'static str, requested: usize, cap: usize },
    #[error("coefficient of {rho} in the Kerov polynomial of {mu} is not a polynomial in gamma")]
    PolynomialityViolation { mu: Partition, rho: Partition },
    #[error("theorem violation for mu = {mu}, rho = {rho}: {detail}")]
    TheoremViolation { mu: Partition, rho: Partition, detail: String },
    #[error("rational reconstruction did not stabilise after {points} points")]
    ReconstructionFailed { points: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}
