use std::collections::BTreeSet;
use std::fmt;

use crate::error::HedgError;

/// A node identifier. Equality and ordering are label equality and ordering.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(String);

impl NodeId {
    /// Creates a node id from a non-empty label.
    pub fn new(label: impl Into<String>) -> Result<Self, HedgError> {
        let label = label.into();
        if label.is_empty() {
            return Err(HedgError::EmptyLabel);
        }
        Ok(NodeId(label))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite set of node ids, ordered by label.
pub type NodeSet = BTreeSet<NodeId>;
