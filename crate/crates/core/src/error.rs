use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative part {0}")]
    NegativePart(i64),
    #[error("parts are not weakly decreasing")]
    NotWeaklyDecreasing,
    #[error("partition has {nonzero} nonzero parts, more than the ambient length {r}")]
    TooManyParts { nonzero: usize, r: usize },
    #[error("part {0} does not fit in 32 bits")]
    PartTooLarge(i64),
    #[error("rank must be positive")]
    ZeroRank,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("index {index} outside [1, {r}]")]
    IndexOutOfRange { index: usize, r: usize },
    #[error("triple is not homogeneous: |lambda| = {lambda}, |mu| + |nu| = {mu_nu}")]
    NotHomogeneous { lambda: u64, mu_nu: u64 },
    #[error("last part must be zero to restrict")]
    NonzeroLastPart,
    #[error("subset is empty")]
    EmptySubset,
    #[error("subset is not strictly increasing")]
    UnsortedSubset,
    #[error("subsets have different cardinalities")]
    CardinalityMismatch,
    #[error("tail ({t}, {s}) outside 0 <= t <= s <= {r}")]
    TailOutOfRange { t: usize, s: usize, r: usize },
    #[error("negative line sum {0}")]
    NegativeLineSum(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("Jacobi iteration did not converge within {0} sweeps")]
    NoConvergence(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
