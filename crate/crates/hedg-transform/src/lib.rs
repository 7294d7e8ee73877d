//! Graph-to-graph constructions over HEDGes.
//!
//! This crate owns every transform that takes a graph and returns another
//! graph: marginalization (latent projection), augmentation with explicit
//! latent nodes, generalized moralization, acyclification, the acyclic
//! augmentation, the SCC quotient, the skeleton, and the induced directed
//! mixed graph — plus the undirected graph type those constructions produce
//! and its own marginalization.

mod acyclify;
mod augment;
mod marginalize;
mod misc;
mod moralize;
mod quotient;
mod ugraph;

pub use acyclify::{acyclic_augment, acyclify};
pub use augment::{augment, augment_map, latent_label, latent_nodes, Augmented};
pub use marginalize::marginalize;
pub use misc::{induced_dmg, skeleton};
pub use moralize::moralize;
pub use quotient::scc_quotient;
pub use ugraph::{u_marginalize, UGraph};
