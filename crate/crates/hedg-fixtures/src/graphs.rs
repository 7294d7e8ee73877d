//! Named graphs that recur throughout the test suites.

use hedg_core::{Hedg, NodeId, NodeSet};
use std::collections::BTreeSet;

/// Builds a node id, panicking on an empty label.
pub fn n(label: &str) -> NodeId {
    NodeId::new(label).unwrap()
}

/// Builds a node set from labels.
pub fn ns(labels: &[&str]) -> NodeSet {
    labels.iter().map(|l| n(l)).collect()
}

/// Builds a graph from label slices, panicking on invalid structure.
pub fn graph(nodes: &[&str], edges: &[(&str, &str)], hyper: &[&[&str]]) -> Hedg {
    Hedg::new(
        ns(nodes),
        edges
            .iter()
            .map(|(a, b)| (n(a), n(b)))
            .collect::<BTreeSet<_>>(),
        hyper.iter().map(|f| ns(f)).collect(),
    )
    .unwrap()
}

/// Chain a→b→c with no latent structure.
pub fn chain3() -> Hedg {
    graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &[])
}

/// Collider a→c←b with no latent structure.
pub fn collider3() -> Hedg {
    graph(&["a", "b", "c"], &[("a", "c"), ("b", "c")], &[])
}

/// Directed four-cycle x1→x4→x3→x2→x1.
///
/// The smallest graph without a perfect elimination order; carries the
/// eight-point distribution where the global property holds but no
/// ancestral factorization exists.
pub fn four_cycle() -> Hedg {
    graph(
        &["x1", "x2", "x3", "x4"],
        &[("x2", "x1"), ("x3", "x2"), ("x4", "x3"), ("x1", "x4")],
        &[],
    )
}

/// Three observed nodes, no directed edges, one hyperedge {X1,X2,X3}:
/// three identical copies of a single hidden fair coin.
pub fn three_coin() -> Hedg {
    graph(&["X1", "X2", "X3"], &[], &[&["X1", "X2", "X3"]])
}

/// Seven-node graph with a directed two-cycle v1⇄v2 and one three-node
/// hyperedge {v4,v5,v7}; the running example for marginalization and
/// moralization.
pub fn seven_node_latent_graph() -> Hedg {
    graph(
        &["v1", "v2", "v3", "v4", "v5", "v6", "v7"],
        &[
            ("v1", "v2"),
            ("v2", "v1"),
            ("v2", "v3"),
            ("v2", "v4"),
            ("v7", "v6"),
            ("v7", "v1"),
            ("v4", "v5"),
            ("v6", "v5"),
        ],
        &[&["v4", "v5", "v7"]],
    )
}

/// The seven-node graph with an extra pairwise hyperedge {v3,v4}; the
/// running example for augmentation (five latent nodes appear).
pub fn seven_node_two_hyperedge_graph() -> Hedg {
    graph(
        &["v1", "v2", "v3", "v4", "v5", "v6", "v7"],
        &[
            ("v1", "v2"),
            ("v2", "v1"),
            ("v2", "v3"),
            ("v2", "v4"),
            ("v7", "v6"),
            ("v7", "v1"),
            ("v4", "v5"),
            ("v6", "v5"),
        ],
        &[&["v4", "v5", "v7"], &["v3", "v4"]],
    )
}

/// Six-node graph where {v1} and {v3} are d-separated given {v2,v6} but
/// not σ-separated: the cycle v4→v2→v5→v6→v4 lets the dependence flow.
pub fn dsep_sigma_gap_graph() -> Hedg {
    graph(
        &["v1", "v2", "v3", "v4", "v5", "v6"],
        &[
            ("v1", "v4"),
            ("v4", "v2"),
            ("v2", "v5"),
            ("v3", "v5"),
            ("v5", "v6"),
            ("v6", "v4"),
        ],
        &[],
    )
}

/// Eight-node graph with three non-trivial strongly connected components
/// ({v2,v3,v4} with a self-loop, {v5,v6}, {v7,v8}) and a hyperedge
/// bridging two of them; the running example for acyclification.
pub fn scc_ladder_graph() -> Hedg {
    graph(
        &["v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"],
        &[
            ("v1", "v2"),
            ("v2", "v3"),
            ("v3", "v3"),
            ("v3", "v4"),
            ("v4", "v2"),
            ("v3", "v6"),
            ("v4", "v8"),
            ("v5", "v6"),
            ("v6", "v5"),
            ("v7", "v8"),
            ("v8", "v7"),
        ],
        &[&["v6", "v7"]],
    )
}

/// Five-node graph with a directed four-cycle v1→v4→v3→v2→v1 and a
/// hyperedge {v3,v4}; the order v1<v2<v3<v4<v5 is quasi-topological
/// (assembling, pseudo-topological, and perfect-elimination at once).
pub fn interval_order_graph() -> Hedg {
    graph(
        &["v1", "v2", "v3", "v4", "v5"],
        &[
            ("v2", "v1"),
            ("v3", "v2"),
            ("v4", "v3"),
            ("v1", "v4"),
            ("v4", "v5"),
            ("v3", "v5"),
        ],
        &[&["v3", "v4"]],
    )
}

/// Five-node graph with a directed two-cycle v4⇄v5; the order
/// v1<v2<v3<v4<v5 is pseudo-topological and assembling but fails the
/// perfect-elimination condition at v5.
pub fn broken_elimination_graph() -> Hedg {
    graph(
        &["v1", "v2", "v3", "v4", "v5"],
        &[
            ("v2", "v4"),
            ("v1", "v5"),
            ("v2", "v3"),
            ("v1", "v3"),
            ("v4", "v5"),
            ("v5", "v4"),
        ],
        &[],
    )
}

/// Four-node graph with a directed two-cycle v3⇄v4 fed by v1 and v2.
/// Marginalizing {v3,v4} and then moralizing loses the v1–v2 link that
/// moralizing first would keep, so the subgraph bound is strict here.
pub fn moral_marginal_strictness_graph() -> Hedg {
    graph(
        &["v1", "v2", "v3", "v4"],
        &[("v2", "v4"), ("v1", "v3"), ("v3", "v4"), ("v4", "v3")],
        &[],
    )
}

/// Directed cycle x→y→z→w→x with an additional self-loop w→w; the
/// structural-equation example whose solution behavior is not preserved
/// when w is marginalized out.
pub fn selfloop_square_graph() -> Hedg {
    graph(
        &["w", "x", "y", "z"],
        &[("x", "y"), ("y", "z"), ("z", "w"), ("w", "x"), ("w", "w")],
        &[],
    )
}

/// Directed two-cycle v1⇄v2 with observed children v3 and v4; the example
/// separating the augment-then-acyclify and acyclify-then-augment routes.
pub fn two_cycle_confounder_graph() -> Hedg {
    graph(
        &["v1", "v2", "v3", "v4"],
        &[("v1", "v2"), ("v2", "v1"), ("v1", "v3"), ("v2", "v4")],
        &[],
    )
}

/// All named graphs above with stable labels, for sweep-style tests.
pub fn named_graphs() -> Vec<(&'static str, Hedg)> {
    vec![
        ("chain3", chain3()),
        ("collider3", collider3()),
        ("four_cycle", four_cycle()),
        ("three_coin", three_coin()),
        ("seven_node_latent", seven_node_latent_graph()),
        ("seven_node_two_hyperedge", seven_node_two_hyperedge_graph()),
        ("dsep_sigma_gap", dsep_sigma_gap_graph()),
        ("scc_ladder", scc_ladder_graph()),
        ("interval_order", interval_order_graph()),
        ("broken_elimination", broken_elimination_graph()),
        ("moral_marginal_strictness", moral_marginal_strictness_graph()),
        ("selfloop_square", selfloop_square_graph()),
        ("two_cycle_confounder", two_cycle_confounder_graph()),
    ]
}
