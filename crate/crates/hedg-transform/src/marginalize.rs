use std::collections::BTreeSet;

use hedg_core::{Hedg, HedgError, NodeId, NodeSet};

/// Latent projection: removes the nodes of `u` while preserving directed
/// reachability and latent-confounding structure among the survivors.
///
/// Nodes are removed one at a time (in label order; the result is
/// order-independent). Removing `m` rewires edges through it and maps each
/// stored hyperedge `F` to `F` itself when `m ∉ F`, and to
/// `(F ∪ children(m)) ∖ {m}` otherwise; the hyperedge set is then
/// re-maximalized. The singleton hyperedge `{m}` participates like any other
/// stored set, which is what turns a removed common cause into bidirected
/// structure among its surviving children.
pub fn marginalize(g: &Hedg, u: &NodeSet) -> Result<Hedg, HedgError> {
    for v in u {
        if !g.nodes().contains(v) {
            return Err(HedgError::UnknownNode(v.as_str().to_owned()));
        }
    }
    let mut current = g.clone();
    for v in u {
        current = remove_one(&current, v);
    }
    Ok(current)
}

fn remove_one(g: &Hedg, m: &NodeId) -> Hedg {
    let nodes: NodeSet = g.nodes().iter().filter(|v| *v != m).cloned().collect();
    let children: NodeSet = g
        .dedges()
        .iter()
        .filter(|(v, _)| v == m)
        .map(|(_, w)| w.clone())
        .collect();
    let parents: NodeSet = g
        .dedges()
        .iter()
        .filter(|(_, w)| w == m)
        .map(|(v, _)| v.clone())
        .collect();

    let mut dedges: BTreeSet<(NodeId, NodeId)> = g
        .dedges()
        .iter()
        .filter(|(v, w)| v != m && w != m)
        .cloned()
        .collect();
    for p in parents.iter().filter(|p| *p != m) {
        for c in children.iter().filter(|c| *c != m) {
            dedges.insert((p.clone(), c.clone()));
        }
    }

    let hyperedges: Vec<NodeSet> = g
        .hyperedges()
        .iter()
        .map(|f| {
            if f.contains(m) {
                f.union(&children)
                    .filter(|v| *v != m)
                    .cloned()
                    .collect()
            } else {
                f.clone()
            }
        })
        .collect();

    Hedg::new(nodes, dedges, hyperedges).expect("marginal graph parts are consistent")
}
