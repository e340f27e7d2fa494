//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by the form algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("form order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("form order {order} exceeds ambient dimension {dim}")]
    OrderExceedsDimension { order: usize, dim: usize },
    #[error("degree undefined for the zero form")]
    DegreeUndefined,
    #[error("linear degree undefined for the zero form")]
    LinearDegreeUndefined,
    #[error("face dimension {dim} out of range for ambient dimension {ambient}")]
    FaceDimOutOfRange { dim: usize, ambient: usize },
    #[error("cube faces are only enumerated for ambient dimension <= 3, got {0}")]
    AmbientTooLarge(usize),
    #[error("repeated axis {0} in face constraints")]
    RepeatedAxis(usize),
    #[error("axis {axis} out of range for ambient dimension {ambient}")]
    AxisOutOfRange { axis: usize, ambient: usize },
    #[error("face value must be +1 or -1, got {0}")]
    BadFaceValue(i8),
    #[error("min_trace_dim is undefined for the zero form")]
    MinTraceDimUndefined,
}

/// Errors raised by the classical space generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("form order {k} out of range for ambient dimension {n}")]
    InvalidOrder { k: usize, n: usize },
    #[error("{space} requires r >= 1, got {r}")]
    DegreeTooSmall { space: &'static str, r: u32 },
}

/// Errors raised by subspace construction and basis assembly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("subspace {kind} is not defined for k = {k}, n = {n}")]
    UnknownSubspace { kind: String, k: usize, n: usize },
    #[error("subspace {kind} for k = {k}, n = {n} requires i >= {min}, got {i}")]
    GradeTooSmall {
        kind: String,
        k: usize,
        n: usize,
        min: i64,
        i: i64,
    },
    #[error("family requires r >= 1, got {0}")]
    OrderTooSmall(u32),
    #[error("ambient dimension must be 2 or 3, got {0}")]
    BadAmbient(usize),
    #[error("form order {k} out of range for ambient dimension {n}")]
    BadFormOrder { k: usize, n: usize },
    #[error("element is not a computational basis element: {0}")]
    NotComputational(String),
    #[error("constructed element disagrees with its table row: {0}")]
    ConstructionMismatch(String),
    #[error(transparent)]
    Form(#[from] FormError),
}

/// Errors raised while encoding coefficient matrices and verifying bases.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("degree bound {deg} is too small: exponent {found} occurs in the input")]
    DegreeTooSmall { deg: u32, found: u32 },
    #[error("sets live in different spaces: ({n_a}, {k_a}) vs ({n_b}, {k_b})")]
    MixedSpaces {
        n_a: usize,
        k_a: usize,
        n_b: usize,
        k_b: usize,
    },
    #[error("matrix dimensions do not match: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Basis(#[from] BasisError),
}

/// Errors raised when parsing polynomial expressions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {expected} at byte {at}")]
    Expected { expected: &'static str, at: usize },
    #[error("unknown variable {0:?} for ambient dimension {1}")]
    UnknownVariable(char, usize),
    #[error("exponent too large")]
    ExponentTooLarge,
}
