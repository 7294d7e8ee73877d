use hedg_core::HedgError;
use thiserror::Error;

/// Errors reported by the separation engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SepError {
    #[error(transparent)]
    Graph(#[from] HedgError),
    /// The exhaustive algorithm was asked to run on a graph beyond its bound.
    #[error("{nodes} nodes exceed the exhaustive-enumeration limit of {limit}")]
    SizeLimit { nodes: usize, limit: usize },
}
