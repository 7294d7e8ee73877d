use std::fmt;

use hedg_core::{NodeId, NodeSet};

/// A concrete reason why an order fails one of the five properties.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderViolation {
    /// A parent sits at or after its child, so the order is not topological.
    ParentOutOfPlace { child: NodeId, parent: NodeId },
    /// A strict ancestor from outside the node's strongly connected set sits
    /// at or after it, so the order is not pseudo-topological.
    AncestorOutOfPlace { node: NodeId, ancestor: NodeId },
    /// A node from outside a strongly connected component sits between two of
    /// its members, so the order is not assembling.
    InterleavedComponent {
        first: NodeId,
        intruder: NodeId,
        last: NodeId,
    },
    /// An ancestrally closed subset of the predecessor graph of `node` whose
    /// moralization leaves two neighbours of `node` unlinked, so the order is
    /// not a perfect elimination order.
    IncompleteNeighbourhood {
        node: NodeId,
        ancestral: NodeSet,
        unlinked: (NodeId, NodeId),
    },
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderViolation::ParentOutOfPlace { child, parent } => {
                write!(f, "parent `{parent}` does not precede its child `{child}`")
            }
            OrderViolation::AncestorOutOfPlace { node, ancestor } => write!(
                f,
                "ancestor `{ancestor}` does not precede `{node}` despite lying outside its strongly connected set"
            ),
            OrderViolation::InterleavedComponent {
                first,
                intruder,
                last,
            } => write!(
                f,
                "`{intruder}` sits between `{first}` and `{last}`, which belong to one strongly connected component"
            ),
            OrderViolation::IncompleteNeighbourhood {
                node,
                ancestral,
                unlinked: (a, b),
            } => {
                let labels: Vec<&str> = ancestral.iter().map(|v| v.as_str()).collect();
                write!(
                    f,
                    "in the moralized ancestral set {{{}}} of the predecessors of `{node}`, its neighbours `{a}` and `{b}` are unlinked",
                    labels.join(", ")
                )
            }
        }
    }
}

/// The outcome of classifying one total order against one graph: a flag per
/// order kind, plus a counterexample for every flag that fails.
///
/// `quasi_topological` is always the conjunction of `pseudo_topological` and
/// `perfect_elimination`, so it carries no witness of its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReport {
    pub topological: bool,
    pub pseudo_topological: bool,
    pub assembling: bool,
    pub perfect_elimination: bool,
    pub quasi_topological: bool,
    pub topological_witness: Option<OrderViolation>,
    pub pseudo_topological_witness: Option<OrderViolation>,
    pub assembling_witness: Option<OrderViolation>,
    pub perfect_elimination_witness: Option<OrderViolation>,
}

impl OrderReport {
    /// True when every one of the five flags holds.
    pub fn all_hold(&self) -> bool {
        self.topological
            && self.pseudo_topological
            && self.assembling
            && self.perfect_elimination
            && self.quasi_topological
    }

    /// The five flags as `(name, value)` pairs, in a fixed presentation order.
    pub fn flags(&self) -> [(&'static str, bool); 5] {
        [
            ("topological", self.topological),
            ("pseudo-topological", self.pseudo_topological),
            ("assembling", self.assembling),
            ("perfect-elimination", self.perfect_elimination),
            ("quasi-topological", self.quasi_topological),
        ]
    }
}
