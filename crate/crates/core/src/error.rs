use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed graph JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{location}: non-positive measure {value} on vertex '{label}'")]
    NonPositiveMeasure {
        location: String,
        label: String,
        value: f64,
    },

    #[error("{location}: non-positive weight {value} on edge '{u}'-'{v}'")]
    NonPositiveWeight {
        location: String,
        u: String,
        v: String,
        value: f64,
    },

    #[error("{location}: loop at vertex '{label}'")]
    Loop { location: String, label: String },

    #[error("{location}: duplicate edge '{u}'-'{v}'")]
    DuplicateEdge { location: String, u: String, v: String },

    #[error("{location}: duplicate vertex id '{label}'")]
    DuplicateVertex { location: String, label: String },

    #[error("{location}: unknown vertex '{label}'")]
    UnknownVertex { location: String, label: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error("boundary is empty")]
    EmptyBoundary,

    #[error("boundary has {size} vertices, at least 2 are required")]
    BoundaryTooSmall { size: usize },

    #[error("boundary function has {got} values, boundary has {expected} vertices")]
    BoundaryFunctionLength { expected: usize, got: usize },

    #[error("boundary function is missing a value for '{label}'")]
    MissingBoundaryValue { label: String },

    #[error("'{label}' is not a boundary vertex")]
    NotBoundary { label: String },

    #[error("boundary function is identically zero")]
    ZeroBoundaryFunction,

    #[error("vertex function has {got} values, graph has {expected} vertices")]
    VertexFunctionLength { expected: usize, got: usize },

    #[error("more than {limit} geodesics between '{from}' and '{to}'")]
    GeodesicLimitExceeded { from: String, to: String, limit: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid comb: {0}")]
    InvalidComb(String),

    #[error("invalid corpus spec: {0}")]
    InvalidCorpus(String),

    #[error("no connected graph after {attempts} attempts (edge probability {edge_prob})")]
    RetryBudgetExhausted { attempts: usize, edge_prob: f64 },

    #[error("interior Laplacian block is not positive definite")]
    Factorization,
}

pub type Result<T> = std::result::Result<T, Error>;
