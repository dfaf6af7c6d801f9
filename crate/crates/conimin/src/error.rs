use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("scale factor must be positive")]
    NonpositiveFactor,
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("ellipsoid is degenerate in the lattice span")]
    Degenerate,
    #[error("weights must be nonnegative")]
    NegativeWeight,
    #[error("volume shrink budget exceeded (c_hat too large)")]
    ShrinkViolation,
    #[error("cone-cut walk exceeded its iteration cap; oracle is not conic")]
    IterationCap,
    #[error("enumeration domain too large: {0} points exceed the cap")]
    TooLarge(u64),
    #[error("adversary family is empty for these parameters")]
    EmptyFamily,
    #[error("dimension {0} not supported by the layered extension (max 3)")]
    UnsupportedDimension(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
