use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("shape {shape} does not fit in the {rows}x{cols} rectangle")]
    OutOfRectangle {
        shape: Partition,
        rows: usize,
        cols: usize,
    },

    #[error("shape {shape} has more than {m} rows")]
    ShapeTooTall { shape: Partition, m: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid King tableau: {0}")]
    InvalidKing(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("shape mismatch: P has shape {p}, Q has shape {q}")]
    ShapeMismatch { p: Partition, q: Partition },

    #[error("pair (P, Q) is not the image of any matrix: {0}")]
    NonInvertible(String),

    #[error("cell ({row}, {col}) is not a removable corner")]
    NotACorner { row: usize, col: usize },

    #[error("invalid oscillating strip: {0}")]
    InvalidStrip(String),

    #[error("invalid oscillating tableau: {0}")]
    InvalidSsot(String),

    #[error("column count {c} exceeds bound {g}")]
    TooWide { c: usize, g: usize },

    #[error("operator index {index} not allowed: {reason}")]
    BadIndex { index: usize, reason: String },

    #[error("inconsistent crystal: {0}")]
    InconsistentCrystal(String),

    #[error("character is not Weyl-symmetric: {0}")]
    NotSymmetric(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("parse error: {0}")]
    Parse(String),
}
