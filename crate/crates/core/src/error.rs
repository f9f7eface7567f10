use thiserror::Error;

/// Errors shared by all geometry and query operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid direction: must be nonzero and finite")]
    InvalidDirection,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("affine map is singular or non-finite")]
    SingularMap,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("point set is not full-dimensional")]
    NotFullDimensional,
    #[error("polytope must contain at least one point")]
    EmptyPolytope,
    #[error("coordinates must be finite")]
    NonFinite,
    #[error("dimension must be between 2 and 8, got {0}")]
    UnsupportedDimension(usize),
    #[error("degenerate sandwiching body")]
    DegenerateBody,
    #[error("vertical hyperplane has no dual point")]
    VerticalHyperplane,
    #[error("halfspace polytope is empty or infeasible")]
    Infeasible,
    #[error("halfspace polytope is unbounded")]
    Unbounded,
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
