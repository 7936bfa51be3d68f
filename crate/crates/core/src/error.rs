use thiserror::Error;

use crate::shapes::Cell;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined")]
    ZeroGcd,
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("division is not exact")]
    InexactDivision,
    #[error("malformed coefficient `{0}`")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("parts must be weakly decreasing: {0:?}")]
    NotAPartition(Vec<i64>),
    #[error("malformed partition token `{0}`")]
    BadPartitionToken(String),
    #[error("malformed direction character `{0}` (expected U or R)")]
    BadDirectionChar(char),
    #[error("cell ({}, {}) is not in the diagram", .0.row, .0.col)]
    CellOutsideDiagram(Cell),
    #[error("inner shape {inner:?} is not contained in outer shape {outer:?}")]
    NotContained { outer: Vec<usize>, inner: Vec<usize> },
    #[error("invalid Frobenius coordinates: {0}")]
    BadFrobenius(String),
    #[error("cells do not form a border strip: {0}")]
    NotABorderStrip(String),
    #[error("direction vector has length {got}, expected {expected}")]
    DirectionLength { expected: usize, got: usize },
    #[error("the empty partition has no outside decompositions")]
    EmptyPartition,
    #[error("content interval [{p}, {q}] leaves the cutting strip range [{min}, {max}]")]
    SegmentOutOfRange { p: i64, q: i64, min: i64, max: i64 },
    #[error("strip list is not an outside decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("row and column index sets differ in size ({rows} vs {cols})")]
    MinorSizeMismatch { rows: usize, cols: usize },
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("matrix order {order} exceeds the minor enumeration bound {bound}; use smith_normal_form directly")]
    MinorBoundExceeded { order: usize, bound: usize },
    #[error("matrix order {order} is below rank {rank}")]
    OrderBelowRank { order: usize, rank: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
