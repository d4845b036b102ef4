use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableCountMismatch { left: usize, right: usize },

    /// Carries the serialized nonzero remainder as a witness.
    #[error("not divisible, remainder {remainder}")]
    NotDivisible { remainder: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("expected a point with {expected} coordinates, got {got}")]
    PointLength { expected: usize, got: usize },

    #[error("variable x{label} is out of range for {nvars} variables")]
    VariableOutOfRange { label: usize, nvars: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("invalid blocks: {0}")]
    InvalidBlocks(String),

    #[error("label {label} is invalid for n = {n}")]
    InvalidLabel { label: usize, n: usize },

    #[error("subgroup closure exceeded {limit} elements")]
    ClosureLimit { limit: usize },

    #[error("partition sizes differ: {0} vs {1}")]
    PartitionSize(usize, usize),

    #[error("position constraints contain a directed cycle through {0}")]
    CyclicConstraints(usize),

    #[error("pole: denominator factor {0} vanishes at the point")]
    Pole(String),

    #[error("not in span, residual {residual}")]
    NotInSpan { residual: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("character match failed: {0}")]
    IrrepMatch(String),

    #[error("generators span a rank-0 lattice")]
    RankZero,

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
