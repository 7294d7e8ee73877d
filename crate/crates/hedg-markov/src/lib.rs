//! Markov-property checkers for directed graphs with hyperedges.
//!
//! A Markov property pins down which conditional independences a
//! distribution must satisfy to be compatible with a graph.  This crate
//! implements the whole family for finite distributions:
//!
//! * the global properties driven by d- or σ-separation ([`PropertyKind::DGmp`],
//!   [`PropertyKind::GdGmp`]),
//! * the local/ordered forms that only quantify over ancestral subgraphs
//!   ([`PropertyKind::DLmp`], [`PropertyKind::OLmp`], [`PropertyKind::RFp`]),
//! * the six undirected forms obtained by moralizing ancestral or arbitrary
//!   marginal subgraphs ([`PropertyKind::AuGmp`] … [`PropertyKind::RuPmp`]),
//! * a factorization check over moral cliques via iterative proportional
//!   fitting ([`PropertyKind::AFpIpf`]), and
//! * the witnessed marginal properties, where an extended distribution over
//!   the augmented graph must certify the observed one
//!   ([`PropertyKind::WitnessMdGmp`] and friends).
//!
//! The entry points are [`check`] for a single property and
//! [`hierarchy_audit`], which runs all applicable properties and
//! cross-validates the outcome pattern against the known implications
//! between them.  [`implied_separations`] exposes the raw separation
//! statements a global property would test.
//!
//! All checkers enumerate statements exhaustively, so they are restricted to
//! small graphs: [`GLOBAL_NODE_LIMIT`] nodes for the pair-based global
//! checks and [`SUBSET_NODE_LIMIT`] for the checks that enumerate subsets of
//! subsets.

mod check;
mod error;
mod factor;
mod global;
mod kind;
mod local;
mod report;
mod undirected;

pub use check::{check, hierarchy_audit, WITNESS_MARGINAL_TOL};
pub use error::MarkovError;
pub use factor::IPF_VERDICT_TOL;
pub use global::{implied_separations, GLOBAL_NODE_LIMIT, SUBSET_NODE_LIMIT};
pub use kind::{PropertyKind, SepCriterion, ALL_KINDS};
pub use report::{MarkovReport, Violation};
