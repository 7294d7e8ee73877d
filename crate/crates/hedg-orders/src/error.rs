use hedg_core::{HedgError, NodeId, NodeSet};
use thiserror::Error;

/// Errors reported by the order checkers and constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error(transparent)]
    Graph(#[from] HedgError),
    /// A total order must list each node exactly once.
    #[error("node `{0}` appears more than once in the order")]
    DuplicateNode(NodeId),
    /// The order and the graph disagree on the node set.
    #[error("order does not cover the graph's nodes (missing {missing:?}, extra {extra:?})")]
    CoverageMismatch { missing: NodeSet, extra: NodeSet },
    /// An exact enumeration or search grew past its supported bound.
    #[error("problem size {size} exceeds the supported limit of {limit}")]
    SizeLimit { size: usize, limit: usize },
}
