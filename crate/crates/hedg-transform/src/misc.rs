use std::collections::BTreeSet;

use hedg_core::{Hedg, NodeId, NodeSet};

use crate::ugraph::UGraph;

/// Drops all orientation: survivors of directed edges and bidirected
/// (pairwise-hyperedge) links become plain undirected edges. Self-loops
/// disappear.
pub fn skeleton(g: &Hedg) -> UGraph {
    let mut uedges: BTreeSet<(NodeId, NodeId)> = BTreeSet::new();
    let mut add = |a: &NodeId, b: &NodeId| {
        if a < b {
            uedges.insert((a.clone(), b.clone()));
        } else if b < a {
            uedges.insert((b.clone(), a.clone()));
        }
    };
    for (v, w) in g.dedges() {
        add(v, w);
    }
    for f in g.multi_hyperedges() {
        for v in f {
            for w in f {
                if v < w {
                    add(v, w);
                }
            }
        }
    }
    UGraph::new(g.nodes().clone(), uedges).expect("skeleton edges stay inside the node set")
}

/// Keeps only the pairwise shadow of the hyperedge complex: every two-element
/// subset of a stored hyperedge becomes a two-element hyperedge of the
/// output; directed structure is untouched.
pub fn induced_dmg(g: &Hedg) -> Hedg {
    let mut pairs: Vec<NodeSet> = Vec::new();
    for f in g.multi_hyperedges() {
        for v in f {
            for w in f {
                if v < w {
                    pairs.push(NodeSet::from([v.clone(), w.clone()]));
                }
            }
        }
    }
    Hedg::new(g.nodes().clone(), g.dedges().clone(), pairs)
        .expect("pairwise parts are consistent")
}
