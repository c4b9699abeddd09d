use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("cannot multiply a {}x{} matrix by a {}x{} matrix", left.0, left.1, right.0, right.1)]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is singular")]
    Singular,

    #[error("power series has zero constant term and is not invertible")]
    NonUnit,

    #[error("characteristic series must have constant term 1")]
    NotNormalized,

    #[error("series truncated at order {order}, but degree {degree} was requested")]
    TruncationTooShort { order: usize, degree: usize },

    #[error("degree mismatch: expected weight {expected}, found weight {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("weight {weight} is outside the supported range 1..={max}")]
    OutOfRange { weight: usize, max: usize },
}
