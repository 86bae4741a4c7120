use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a side of size {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{labels} labels given for {n} vertices")]
    LabelCount { labels: usize, n: usize },
    #[error("{sizes} substitution sizes given for {n} vertices")]
    SizeCount { sizes: usize, n: usize },
    #[error("vertex {0} would be substituted by an empty clique")]
    ZeroSubstitution(usize),
}

/// Errors raised while reading the text, JSON or certificate formats.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Invalid(String),
}

impl FormatError {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        FormatError::Parse {
            line,
            msg: msg.into(),
        }
    }
}

/// Violations of the input assumptions of the Edge Clique Cover reduction
/// and of the gadget constructions built on it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HardnessError {
    #[error("k must be at least 1")]
    ZeroK,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has universal vertex {0}")]
    UniversalVertex(usize),
    #[error("k = {k} exceeds the number of edges {m}")]
    KTooLarge { k: usize, m: usize },
    #[error("invalid cover: {0}")]
    InvalidCover(String),
    #[error("cover has {got} cliques but the gadget has only {k} universal vertices")]
    CoverTooLarge { got: usize, k: usize },
    #[error("invalid root: {0}")]
    InvalidRoot(String),
}

impl HardnessError {
    /// Stable machine-readable token for the error.
    pub fn token(&self) -> &'static str {
        match self {
            HardnessError::ZeroK => "k_zero",
            HardnessError::Disconnected => "not_connected",
            HardnessError::UniversalVertex(_) => "universal_vertex",
            HardnessError::KTooLarge { .. } => "k_exceeds_edges",
            HardnessError::InvalidCover(_) | HardnessError::CoverTooLarge { .. } => "invalid_cover",
            HardnessError::InvalidRoot(_) => "invalid_root",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("search budget of {budget} steps exhausted")]
    BudgetExceeded { budget: u64 },
    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),
}

/// Reasons a root certificate fails verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("root has {got} X-vertices but the graph has {expected} vertices")]
    SideMismatch { expected: usize, got: usize },
    #[error("half-square differs from the graph at pair ({u}, {v}): graph edge {in_graph}")]
    HalfSquareMismatch { u: usize, v: usize, in_graph: bool },
    #[error("{class} witness invalid: {reason}")]
    Witness { class: String, reason: String },
}

impl VerifyError {
    pub fn token(&self) -> &'static str {
        match self {
            VerifyError::SideMismatch { .. } => "side_mismatch",
            VerifyError::HalfSquareMismatch { .. } => "half_square_mismatch",
            VerifyError::Witness { .. } => "invalid_witness",
        }
    }
}
