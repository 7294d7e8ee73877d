use std::collections::{BTreeMap, BTreeSet};

use hedg_core::{Hedg, NodeId, NodeSet};

/// An augmented graph together with the bookkeeping of which latent node
/// stands for which stored hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmented {
    pub graph: Hedg,
    /// latent node ↦ the hyperedge it represents.
    pub latents: BTreeMap<NodeId, NodeSet>,
}

/// Replaces the hyperedge structure by explicit latent nodes: one fresh node
/// per stored maximal hyperedge `F` (maximal singletons included), with an
/// edge into every member of `F`. The output carries only trivial hyperedges.
pub fn augment(g: &Hedg) -> Hedg {
    augment_map(g).graph
}

/// Like [`augment`], and also returns the latent-to-hyperedge map.
pub fn augment_map(g: &Hedg) -> Augmented {
    let mut taken: BTreeSet<String> = g.nodes().iter().map(|v| v.as_str().to_owned()).collect();
    let mut latents: BTreeMap<NodeId, NodeSet> = BTreeMap::new();
    let mut nodes: NodeSet = g.nodes().clone();
    let mut dedges = g.dedges().clone();

    for f in g.hyperedges() {
        let mut label = format!(
            "e{{{}}}",
            f.iter()
                .map(NodeId::as_str)
                .collect::<Vec<_>>()
                .join(";")
        );
        while taken.contains(&label) {
            label.push('\'');
        }
        taken.insert(label.clone());
        let latent = NodeId::new(label).expect("latent labels are non-empty");
        nodes.insert(latent.clone());
        for v in f {
            dedges.insert((latent.clone(), v.clone()));
        }
        latents.insert(latent, f.clone());
    }

    let graph = Hedg::trivial(nodes, dedges).expect("augmented parts are consistent");
    Augmented { graph, latents }
}

/// The label an augmentation gives to the latent node of hyperedge `f`,
/// before any collision adjustment.
pub fn latent_label(f: &NodeSet) -> String {
    format!(
        "e{{{}}}",
        f.iter().map(NodeId::as_str).collect::<Vec<_>>().join(";")
    )
}

/// The latent node labels the augmentation of `g` introduces; convenience for
/// witness validation.
pub fn latent_nodes(g: &Hedg) -> NodeSet {
    augment_map(g).latents.keys().cloned().collect()
}
