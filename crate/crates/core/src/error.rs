use thiserror::Error;

/// Everything that can go wrong while building spaces or evaluating the
/// pairing machinery. Numeric routines that merely *approximate* (SVD,
/// eigensolvers) do not error on round-off; `NumericalBreakdown` is reserved
/// for states that contradict the underlying math (negative squared norms
/// beyond tolerance, unexpected null-space dimensions, and the like).
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite entry (NaN or infinity) rejected")]
    NonFinite,

    #[error("anchor vectors are numerically linearly dependent")]
    DegenerateAnchor,

    #[error("numerical breakdown: {0}")]
    NumericalBreakdown(String),

    #[error("functional does not vanish on the anchor directions; it is unbounded for this space")]
    UnboundedFunctional,

    #[error("form is not supported on the anchor complement; it is unbounded for this space")]
    UnboundedForm,

    #[error("operator does not preserve the anchor split; it is not b-bounded for this space")]
    UnboundedOperator,

    #[error("form is not positive")]
    NotPositive,

    #[error("field mode mismatch: {0}")]
    FieldModeMismatch(String),

    #[error("invalid instance: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
