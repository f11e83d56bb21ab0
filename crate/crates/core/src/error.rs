use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("color ({i},{j}) is not valid for rank {ell}")]
    InvalidColor { i: usize, j: usize, ell: usize },
    #[error("index {index} out of range 0..={ell}")]
    IndexOutOfRange { index: usize, ell: usize },
    #[error("vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("{0:?} is not a root of C_l")]
    NotARoot(Vec<i64>),
    #[error("highest weight has {got} coefficients, expected {expected}")]
    HighestWeightLength { got: usize, expected: usize },
    #[error("highest weight must have positive level")]
    ZeroLevel,
    #[error("no color (1,0) exists; use the direct initial-condition check for r = 0")]
    NoAppendColor,
    #[error("brute force limited to {limit} factors, got {got}")]
    TooManyFactors { got: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("weight has level {got}, module has level {expected}")]
    LevelMismatch { got: i64, expected: i64 },
    #[error("census did not stabilize up to m = {cap}")]
    NoStabilization { cap: u32 },
    #[error("Freudenthal recursion inconsistent at depth {depth}, weight {classical:?}: {detail}")]
    Inconsistent {
        depth: i64,
        classical: Vec<i64>,
        detail: String,
    },
}
