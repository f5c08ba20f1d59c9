use thiserror::Error;

/// Errors produced by analysis and construction routines.
#[derive(Debug, Error)]
pub enum GaborError {
    #[error("invalid periodic set: {0}")]
    InvalidSet(String),
    #[error("atom index out of range: {0}")]
    InvalidAtom(String),
    #[error("systems do not share (L, M, N, set): {0}")]
    ParameterMismatch(String),
    #[error("imaginary residue {residue:.3e} exceeds tolerance {tol:.3e}")]
    ImaginaryResidue { residue: f64, tol: f64 },
    #[error("window {index} has support width {width} >= M = {m}")]
    SupportTooWide { index: usize, width: i64, m: i64 },
    #[error("diagonal entry at j = {j} is {value:.3e}; inverse undefined")]
    SingularDiagonal { j: i64, value: f64 },
    #[error("equivalent orthonormality criteria disagree: {0}")]
    FormDisagreement(String),
    #[error("parameter shape violation: {0}")]
    ShapeViolation(String),
    #[error("operation requires the full-line set: {0}")]
    UnsupportedSet(String),
    #[error("density violation: N = {n} exceeds L*M = {lm}")]
    DensityViolation { n: i64, lm: i64 },
    #[error("operator dimensions do not match the model: {0}")]
    DimensionMismatch(String),
    #[error("range inclusion R(K) in R(U) fails: {0}")]
    RangeViolation(String),
    #[error("grid of {t} points is below the exactness threshold {required}")]
    GridTooCoarse { t: usize, required: usize },
}

pub type Result<T> = std::result::Result<T, GaborError>;
