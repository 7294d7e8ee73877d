use std::collections::BTreeSet;

use hedg_core::{Hedg, NodeId, NodeSet};

use crate::augment::augment;

/// Acyclification: redirects every edge that enters a strongly connected
/// component to enter all of it, drops within-component edges, and expands
/// each hyperedge over the components it touches. The output is an mDAG, and
/// the construction is the identity on mDAGs.
pub fn acyclify(g: &Hedg) -> Hedg {
    let partition = g.scc_partition();
    let index = g.scc_index();

    let mut dedges: BTreeSet<(NodeId, NodeId)> = BTreeSet::new();
    for (v, w) in g.dedges() {
        if index[v] == index[w] {
            continue;
        }
        for target in &partition[index[w]] {
            dedges.insert((v.clone(), target.clone()));
        }
    }

    let hyperedges: Vec<NodeSet> = g
        .hyperedges()
        .iter()
        .map(|f| {
            let mut expanded = NodeSet::new();
            for v in f {
                expanded.extend(partition[index[v]].iter().cloned());
            }
            expanded
        })
        .collect();

    Hedg::new(g.nodes().clone(), dedges, hyperedges).expect("acyclified parts are consistent")
}

/// The acyclic augmentation: acyclification of the augmented graph with all
/// hyperedge structure discarded. The output is a DAG whose latent nodes
/// point into whole components.
pub fn acyclic_augment(g: &Hedg) -> Hedg {
    let acy = acyclify(&augment(g));
    Hedg::trivial(acy.nodes().clone(), acy.dedges().clone())
        .expect("acyclic augmentation parts are consistent")
}
