use thiserror::Error;

/// Everything that can go wrong in the exact kernels and the classifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("singular matrix")]
    SingularMatrix,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid linear pair: {0}")]
    InvalidLinearPair(String),

    #[error("invalid quadratic pair: {0}")]
    InvalidQuadraticPair(String),

    #[error("bivector is not linear: {0}")]
    NotLinear(String),

    #[error("not a Poisson bivector: Jacobiator component {component} = {value}")]
    NotPoisson { component: String, value: String },

    #[error("structure constants are not antisymmetric at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },

    #[error("matrix is not traceless (trace = {0})")]
    NotTraceless(String),

    #[error("grade {grade} out of range for n = {n}")]
    BadGrade { grade: usize, n: usize },

    #[error("not a unit vector in the exact field: {0}")]
    NotUnit(String),

    #[error("square root is not in the field: {0}")]
    NoSquareRoot(String),

    #[error("unknown case id {0}")]
    UnknownCase(u8),

    #[error("independent code paths disagree: {0}")]
    PathMismatch(String),

    #[error("no orbit data for {0}")]
    NoOrbitData(String),

    #[error("floating residual {residual} exceeds tolerance {tolerance}")]
    Tolerance { residual: String, tolerance: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
