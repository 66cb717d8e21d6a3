use thiserror::Error;

use crate::oracles::OracleKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set size {0} is outside 1..=64")]
    GroundSize(usize),

    #[error("element {element} is outside a ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("ground sets differ in size ({left} vs {right})")]
    GroundMismatch { left: usize, right: usize },

    #[error("construction would create a loop: {0}")]
    Loop(String),

    #[error("invalid representation: {0}")]
    Representation(String),

    #[error("split representation violates (H1) for hyperedges {i} and {j}: |H_i & H_j| = {overlap} > {limit}")]
    SplitH1 {
        i: usize,
        j: usize,
        overlap: usize,
        limit: i64,
    },

    #[error("split representation violates (H2) for hyperedge {i}: |E - H_i| + r_i = {value} < rank {rank}")]
    SplitH2 { i: usize, value: usize, rank: usize },

    #[error("weight {weight} of element {element} exceeds the supported magnitude 2^56")]
    WeightRange { element: usize, weight: i64 },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("oracle kind {kind} cannot answer {query} queries")]
    Capability {
        kind: OracleKind,
        query: &'static str,
    },

    #[error("brute force is limited to n <= {limit}, instance has n = {n}")]
    Budget { n: usize, limit: usize },

    #[error("{field}: {message}")]
    Schema { field: String, message: String },

    #[error("usage: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            message: message.into(),
        }
    }

    /// Prefix the field path of a schema error, leaving other errors alone.
    pub(crate) fn within(self, prefix: &str) -> Self {
        match self {
            Error::Schema { field, message } => Error::Schema {
                field: format!("{prefix}.{field}"),
                message,
            },
            other => Error::Schema {
                field: prefix.to_string(),
                message: other.to_string(),
            },
        }
    }
}
