//! Core data model for directed graphs with hyperedges (HEDGes).
//!
//! A HEDG is a finite directed graph (self-loops allowed, no multi-edges)
//! together with a simplicial complex over the same node set. The complex
//! encodes latent confounding: two nodes are bidirected-adjacent exactly when
//! some hyperedge contains both. Only the inclusion-maximal hyperedges are
//! stored; the downward closure and all singletons are implicit.
//!
//! Everything in this crate is an immutable value with pure query methods, so
//! graphs can be shared freely across threads.

mod error;
mod hedg;
mod node;
mod scc;

pub use error::HedgError;
pub use hedg::{GraphClass, Hedg};
pub use node::{NodeId, NodeSet};
