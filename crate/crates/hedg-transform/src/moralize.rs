use std::collections::BTreeSet;

use hedg_core::{Hedg, NodeId};

use crate::ugraph::UGraph;

/// Generalized moralization: for every district `D`, the set `D ∪ Pa(D)`
/// becomes a complete subgraph of the output. Two nodes end up adjacent
/// exactly when a bidirected chain `v1 ↔ … ↔ vn` connects a member-or-parent
/// of `v1` to a member-or-parent of `vn` — the classic "marry the parents"
/// rule, lifted to hyperedge confounding.
pub fn moralize(g: &Hedg) -> UGraph {
    let mut uedges: BTreeSet<(NodeId, NodeId)> = BTreeSet::new();
    for district in g.districts() {
        let mut clique = district.clone();
        clique.extend(g.parents(&district).expect("district nodes are members"));
        for a in &clique {
            for b in &clique {
                if a < b {
                    uedges.insert((a.clone(), b.clone()));
                }
            }
        }
    }
    UGraph::new(g.nodes().clone(), uedges).expect("moral edges stay inside the node set")
}
