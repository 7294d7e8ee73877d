//! Separation criteria for directed graphs with hyperedges.
//!
//! Two inequivalent notions are implemented, each decidable by several
//! mutually independent algorithms so they can cross-check each other:
//!
//! * **d-separation** — the classical path-blocking criterion, extended to
//!   cyclic graphs and hyperedges. Production algorithm: reachability in the
//!   moralized ancestral closure ([`d_separated`]); test oracle: exhaustive
//!   simple-path enumeration ([`d_separated_paths`]).
//! * **σ-separation** — the refinement in which a non-collider conditioned
//!   on blocks only where it points out of its own strongly connected
//!   component. Production algorithm: d-separation in the acyclification
//!   ([`sigma_separated`]); oracles: node-level path rules
//!   ([`sigma_separated_nodes`]) and a marginalize-and-skeletonize
//!   criterion ([`sigma_separated_margcrit`]).
//!
//! On graphs whose strongly connected components are all singletons the two
//! notions coincide. [`u_separated`] decides plain undirected separation,
//! and [`independence_model_audit`] checks any abstract ternary relation
//! against the semi-graphoid axioms by exhaustive quantification.

mod audit;
mod dsep;
mod error;
mod paths;
mod query;
mod sigma;
mod usep;

pub use audit::{
    independence_model_audit, AuditReport, Axiom, AxiomViolation, SEPARATION_AXIOMS,
};
pub use dsep::{d_separated, d_separated_paths};
pub use error::SepError;
pub use query::{LinkKind, SepQuery, SepWitness};
pub use sigma::{sigma_separated, sigma_separated_margcrit, sigma_separated_nodes};
pub use usep::u_separated;
