use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },

    #[error("at most {max} generators are supported, got {got}")]
    TooManyGenerators { got: usize, max: usize },

    #[error("generator square must be +1 or -1, got {0}")]
    InvalidSquare(i32),

    #[error("no generator labelled {0}")]
    UnknownGenerator(usize),

    #[error("element is not invertible as a versor (non-scalar residual {residual:.3e})")]
    NotInvertible { residual: f64 },

    #[error("plane is not a 2-blade (residual {residual:.3e})")]
    NotABlade { residual: f64 },

    #[error("plane is null (square {square:.3e})")]
    NullPlane { square: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("element does not square to +1 (residual {residual:.3e})")]
    NotUnitSquare { residual: f64 },

    #[error("element is not idempotent (residual {residual:.3e})")]
    NotIdempotent { residual: f64 },

    #[error("vector is not null (residual {residual:.3e})")]
    NotNull { residual: f64 },

    #[error("operation needs a complex scalar ring")]
    RealRing,

    #[error("point at infinity (xi4 + xi5 = 0)")]
    PointAtInfinity,

    #[error("unknown point id {0}")]
    UnknownPoint(usize),

    #[error("inconsistent metric: {0}")]
    InconsistentMetric(String),

    #[error("generators must share a common source point")]
    NoCommonSource,

    #[error("need at least {needed} time slices, got {got}")]
    InsufficientSlices { needed: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("grid error: {0}")]
    Grid(String),

    #[error("zero trace: cannot normalize")]
    ZeroTrace,

    #[error("wrong idempotent: {0}")]
    WrongIdempotent(String),

    #[error("order n = {0} outside 2..=64")]
    InvalidOrder(usize),

    #[error("algebra too large for a full table ({blades} blades); use the generator table")]
    TableTooLarge { blades: usize },

    #[error("singular matrix")]
    Singular,

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
