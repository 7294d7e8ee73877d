use thiserror::Error;

/// Errors raised by graph construction and relational queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HedgError {
    /// A query or constructor referenced a node label that is not part of the
    /// graph under consideration.
    #[error("unknown node `{0}`")]
    UnknownNode(String),

    /// Node labels must be non-empty strings.
    #[error("node labels must be non-empty")]
    EmptyLabel,

    /// Undirected graphs carry no self-loops.
    #[error("undirected edge endpoints must differ (self-loop at `{0}`)")]
    UndirectedSelfLoop(String),
}
