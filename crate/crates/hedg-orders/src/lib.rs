//! Total orders on the nodes of a directed graph with hyperedges, and the
//! hierarchy of properties such an order can have.
//!
//! A topological order exists only for acyclic graphs, so cyclic graphs call
//! for weaker notions.  This crate checks and constructs five kinds of order:
//!
//! * **topological** — every parent comes strictly before its child;
//! * **pseudo-topological** — every strict ancestor from outside a node's
//!   strongly connected set comes before the node;
//! * **assembling** — each strongly connected component occupies a contiguous
//!   run of positions;
//! * **perfect elimination** — for every node `v` and every ancestrally closed
//!   subset `A` of the predecessor graph of `v` containing `v`, the neighbours
//!   of `v` in the moralization of `A` form a complete subgraph;
//! * **quasi-topological** — pseudo-topological and perfect elimination at
//!   once.
//!
//! The predecessor graph of `v` is the marginalization of the input onto the
//! nodes up to and including `v`, so the perfect-elimination condition sees
//! the latent structure created by marginalizing the tail away.  Orders can be
//! classified exactly ([`classify_order`]), constructed ([`find_pseudo_topological`],
//! [`find_perfect_elimination`]), and restricted to a marginal graph
//! ([`restrict_order`]), which preserves all five kinds.

mod classify;
mod downsets;
mod error;
mod order;
mod report;
mod search;

pub use classify::{classify_order, classify_order_with_limit, pred_hedg, ANCESTRAL_SET_LIMIT};
pub use error::OrderError;
pub use order::{restrict_order, TotalOrder};
pub use report::{OrderReport, OrderViolation};
pub use search::{find_perfect_elimination, find_pseudo_topological, SEARCH_NODE_LIMIT};
