use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("field mismatch: expected GF({expected}), found GF({found})")]
    FieldMismatch { expected: u32, found: u32 },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("rank deficient: {rows} rows but rank {rank}")]
    RankDeficient { rows: usize, rank: usize },

    #[error("code has dimension zero")]
    ZeroDimension,

    /// Enumeration budget exhausted; `lower..=upper` brackets the quantity sought.
    #[error("enumeration budget exceeded; distance bracket [{lower}, {upper}]")]
    BudgetExceeded { lower: usize, upper: usize },

    #[error("subset budget exceeded; distance bracket [{lower}, {upper}]")]
    SubsetBudgetExceeded { lower: usize, upper: usize },

    #[error("MacWilliams transform produced a non-integer count at weight {index}")]
    NonIntegerResult { index: usize },

    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unsupported subspace layout: dimensions sum to {sum} > {t}")]
    UnsupportedSubspaceLayout { sum: usize, t: usize },

    #[error("points {0:?} are collinear")]
    NotACap([usize; 3]),

    #[error("generator polynomial does not divide x^{n} - 1")]
    NotADivisor { n: usize },

    #[error("search space exhausted without finding a cap of size {target}")]
    SearchExhausted { target: usize },

    #[error("search budget of {budget} nodes exhausted")]
    SearchBudgetExceeded { budget: u64 },

    #[error("position {pos} cannot be repaired locally: group partner {partner} is erased")]
    GroupDamaged { pos: usize, partner: usize },

    #[error("erasure pattern is not uniquely decodable; solution space has dimension {dimension}")]
    AmbiguousDecode { dimension: usize },

    #[error("weight distributions differ at weight {index}: expected {expected}, found {found}")]
    Mismatch {
        index: usize,
        expected: u128,
        found: u128,
    },

    #[error("the tau range is empty (k <= r)")]
    EmptyTauRange,

    #[error("length {n} is not a multiple of {modulus}")]
    InvalidShape { n: usize, modulus: usize },

    #[error("distance {0} is odd")]
    OddDistance(usize),

    #[error("not an LRC in disjoint repair-group form: {0}")]
    NotGroupForm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
