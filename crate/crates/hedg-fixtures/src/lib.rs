//! Shared test fixtures: the named graphs used across the workspace test
//! suites, plus random-instance generators for property tests and sweeps.
//!
//! Everything here panics on malformed input instead of returning errors —
//! these builders are for tests, where a bad fixture is a bug.

mod dists;
mod graphs;
mod models;
mod random;

pub use dists::{
    eight_point_cycle_dist, random_dist_vars, random_positive_table, random_sparse_table,
    three_coin_joint, three_coin_witness,
};
pub use models::{
    averaged_cycle_sem, four_cycle_mscm, random_gaussian_sem, random_mscm, three_coin_mscm,
};
pub use graphs::{
    broken_elimination_graph, chain3, collider3, dsep_sigma_gap_graph, four_cycle, graph,
    interval_order_graph, moral_marginal_strictness_graph, n, named_graphs, ns,
    scc_ladder_graph, selfloop_square_graph, seven_node_latent_graph,
    seven_node_two_hyperedge_graph, three_coin, two_cycle_confounder_graph,
};
pub use random::random_hedg;
