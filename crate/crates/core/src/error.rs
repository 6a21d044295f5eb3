use thiserror::Error;

/// Errors raised by shape construction, ring arithmetic and identity checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition has {len} parts but n = {n}")]
    InvalidArity { len: usize, n: usize },
    #[error("invalid content set: {0}")]
    InvalidContentSet(String),
    #[error("invalid move ({a}, {b}): {reason}")]
    InvalidMove { a: i64, b: i64, reason: String },
    #[error("placement error: {0}")]
    Placement(String),
    #[error("not a skew shape: {0}")]
    NotASkewShape(String),
    #[error("not a border strip: {0}")]
    NotABorderStrip(String),
    #[error("inner partition is not contained in the outer partition")]
    NotContained,
    #[error("content {0} is outside the strip")]
    OutOfRange(i64),
    #[error("cutting strip has no cell of content {0}")]
    IncompatibleCuttingStrip(i64),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant of size {0} exceeds the expansion limit")]
    SizeGuard(usize),
    #[error("no value bound for h[{r},{s}]")]
    UnboundVariable { r: u32, s: i64 },
    #[error("singular evaluation: {0}")]
    SingularEvaluation(String),
    #[error("parameter sequence too short: need {need}, got {got}")]
    ShortParameters { need: usize, got: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("glue failure: {0}")]
    GlueFailure(String),
    #[error("attachment failure: {0}")]
    Attach(String),
    #[error("construction unavailable: {0}")]
    ConstructionUnavailable(String),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid_partition",
            Error::InvalidArity { .. } => "invalid_arity",
            Error::InvalidContentSet(_) => "invalid_content_set",
            Error::InvalidMove { .. } => "invalid_move",
            Error::Placement(_) => "placement",
            Error::NotASkewShape(_) => "not_a_skew_shape",
            Error::NotABorderStrip(_) => "not_a_border_strip",
            Error::NotContained => "not_contained",
            Error::OutOfRange(_) => "out_of_range",
            Error::IncompatibleCuttingStrip(_) => "incompatible_cutting_strip",
            Error::NotSquare { .. } => "not_square",
            Error::SizeGuard(_) => "size_guard",
            Error::UnboundVariable { .. } => "unbound_variable",
            Error::SingularEvaluation(_) => "singular_evaluation",
            Error::ShortParameters { .. } => "short_parameters",
            Error::Precondition(_) => "precondition",
            Error::GlueFailure(_) => "glue_failure",
            Error::Attach(_) => "attach",
            Error::ConstructionUnavailable(_) => "construction_unavailable",
            Error::Input(_) => "input",
        }
    }

    /// Stable positive numeric code, used across the C interface.
    pub fn code(&self) -> i32 {
        match self {
            Error::InvalidPartition(_) => 1,
            Error::InvalidArity { .. } => 2,
            Error::InvalidContentSet(_) => 3,
            Error::InvalidMove { .. } => 4,
            Error::Placement(_) => 5,
            Error::NotASkewShape(_) => 6,
            Error::NotABorderStrip(_) => 7,
            Error::NotContained => 8,
            Error::OutOfRange(_) => 9,
            Error::IncompatibleCuttingStrip(_) => 10,
            Error::NotSquare { .. } => 11,
            Error::SizeGuard(_) => 12,
            Error::UnboundVariable { .. } => 13,
            Error::SingularEvaluation(_) => 14,
            Error::ShortParameters { .. } => 15,
            Error::Precondition(_) => 16,
            Error::GlueFailure(_) => 17,
            Error::Attach(_) => 18,
            Error::ConstructionUnavailable(_) => 19,
            Error::Input(_) => 20,
        }
    }
}
