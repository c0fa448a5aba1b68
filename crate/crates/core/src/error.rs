use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised across the crate. Every rejected precondition gets its own
/// variant so callers (and the CLI exit-code mapping) can tell them apart.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape parameters must be positive (n={n}, d={d})")]
    EmptyShape { n: usize, d: usize },

    #[error("leg length d={d} does not divide node count n={n}")]
    DepthNotDivisor { n: usize, d: usize },

    #[error("leg length d={d} exceeds the packed-word limit of 64")]
    DepthTooLarge { d: usize },

    #[error("label matrix must have {legs} legs of {depth} nodes, got {got_legs} legs (first bad leg length {got_depth})")]
    LabelDimensions {
        legs: usize,
        depth: usize,
        got_legs: usize,
        got_depth: usize,
    },

    #[error("label at leg {leg}, depth {depth} is {value}, expected 0 or 1")]
    NonBinaryLabel { leg: usize, depth: usize, value: i64 },

    #[error("deletion probability q={q} outside the open interval (0, 1)")]
    InvalidDeletionProbability { q: f64 },

    #[error("operands have different shapes: ({n1},{d1}) vs ({n2},{d2})")]
    ShapeMismatch {
        n1: usize,
        d1: usize,
        n2: usize,
        d2: usize,
    },

    #[error("n={n} exceeds the enumeration cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("label difference is identically zero")]
    ZeroDiff,

    #[error("candidate spiders are identical")]
    IdenticalSpiders,

    #[error("trace sample is empty")]
    EmptySample,

    #[error("no candidate spiders supplied")]
    NoCandidates,

    #[error("polynomial has no nonzero coefficient")]
    ZeroPolynomial,

    #[error("coefficient at ({row}, {col}) is {value}, expected -1, 0, or 1")]
    CoefficientOutOfRange { row: usize, col: usize, value: i64 },

    #[error("arc divisor L must be positive")]
    InvalidArcDivisor,

    #[error("grid must be at least 2 (got {grid})")]
    GridTooSmall { grid: usize },

    #[error("gap must be positive (got {gap})")]
    InvalidGap { gap: f64 },

    #[error("trace counts must be positive and strictly increasing")]
    InvalidTraceCounts,

    #[error("trial count must be at least 1")]
    InvalidTrialCount,

    #[error("target rate must lie strictly between 0 and 1 (got {target})")]
    InvalidTargetRate { target: f64 },

    #[error("doubling search hit the trace-count guard of {guard} without reaching the target rate")]
    SearchExhausted { guard: u64 },

    #[error("malformed document: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 3 for exceeded caps/guards, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::SearchExhausted { .. } => 3,
            _ => 2,
        }
    }
}
