use std::collections::BTreeMap;
use std::fmt;

use hedg_core::{Hedg, HedgError, NodeId, NodeSet};

use crate::OrderError;

/// A total order on a set of nodes, stored as the sequence from smallest to
/// largest.  Position lookups are O(log n).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalOrder {
    seq: Vec<NodeId>,
    pos: BTreeMap<NodeId, usize>,
}

impl TotalOrder {
    /// Builds an order from the given sequence.  Rejects repeated nodes.
    pub fn new(seq: impl IntoIterator<Item = NodeId>) -> Result<Self, OrderError> {
        let seq: Vec<NodeId> = seq.into_iter().collect();
        let mut pos = BTreeMap::new();
        for (i, v) in seq.iter().enumerate() {
            if pos.insert(v.clone(), i).is_some() {
                return Err(OrderError::DuplicateNode(v.clone()));
            }
        }
        Ok(TotalOrder { seq, pos })
    }

    /// Convenience constructor from string labels.
    pub fn from_labels<S: AsRef<str>>(labels: &[S]) -> Result<Self, OrderError> {
        let seq = labels
            .iter()
            .map(|s| NodeId::new(s.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(seq)
    }

    /// The nodes from smallest to largest.
    pub fn nodes(&self) -> &[NodeId] {
        &self.seq
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &NodeId> {
        self.seq.iter()
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// Zero-based position of `v`, or `None` if `v` is not ordered.
    pub fn position(&self, v: &NodeId) -> Option<usize> {
        self.pos.get(v).copied()
    }

    /// Checks that the order lists exactly the nodes of `g`.
    pub fn validate_for(&self, g: &Hedg) -> Result<(), OrderError> {
        let missing: NodeSet = g
            .nodes()
            .iter()
            .filter(|v| !self.pos.contains_key(*v))
            .cloned()
            .collect();
        let extra: NodeSet = self
            .seq
            .iter()
            .filter(|v| !g.nodes().contains(*v))
            .cloned()
            .collect();
        if missing.is_empty() && extra.is_empty() {
            Ok(())
        } else {
            Err(OrderError::CoverageMismatch { missing, extra })
        }
    }

    /// The nodes strictly greater than `v`.  Empty if `v` is not ordered.
    pub(crate) fn strictly_after(&self, v: &NodeId) -> NodeSet {
        match self.position(v) {
            Some(p) => self.seq[p + 1..].iter().cloned().collect(),
            None => NodeSet::new(),
        }
    }
}

impl fmt::Display for TotalOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<&str> = self.seq.iter().map(|v| v.as_str()).collect();
        write!(f, "{}", labels.join(" < "))
    }
}

/// Restricts `ord` to the nodes of `g` outside `w`, i.e. to the node set of
/// the graph obtained by marginalizing `w` away.  Each of the five order
/// kinds survives this restriction: an order that is topological,
/// pseudo-topological, assembling, perfect-elimination, or quasi-topological
/// on `g` stays so on the marginalization.
pub fn restrict_order(g: &Hedg, ord: &TotalOrder, w: &NodeSet) -> Result<TotalOrder, OrderError> {
    ord.validate_for(g)?;
    if let Some(v) = w.iter().find(|v| !g.nodes().contains(*v)) {
        return Err(HedgError::UnknownNode(v.as_str().to_owned()).into());
    }
    TotalOrder::new(ord.iter().filter(|v| !w.contains(*v)).cloned())
}
