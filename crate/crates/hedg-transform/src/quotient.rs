use std::collections::BTreeSet;

use hedg_core::{Hedg, NodeId, NodeSet};

/// Contracts every strongly connected component to a single node named after
/// its lexicographically smallest member. Edges survive only between distinct
/// blocks (so the output is a DAG without self-loops); hyperedges are lifted
/// through the contraction.
pub fn scc_quotient(g: &Hedg) -> Hedg {
    let partition = g.scc_partition();
    let index = g.scc_index();
    let rep = |block: usize| -> NodeId {
        partition[block]
            .iter()
            .next()
            .expect("components are non-empty")
            .clone()
    };

    let nodes: NodeSet = (0..partition.len()).map(rep).collect();
    let mut dedges: BTreeSet<(NodeId, NodeId)> = BTreeSet::new();
    for (v, w) in g.dedges() {
        let (bv, bw) = (index[v], index[w]);
        if bv != bw {
            dedges.insert((rep(bv), rep(bw)));
        }
    }
    let hyperedges: Vec<NodeSet> = g
        .hyperedges()
        .iter()
        .map(|f| f.iter().map(|v| rep(index[v])).collect())
        .collect();

    Hedg::new(nodes, dedges, hyperedges).expect("quotient parts are consistent")
}
