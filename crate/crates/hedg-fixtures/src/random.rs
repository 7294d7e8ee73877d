//! Random graph generation for sweeps and property tests.

use hedg_core::{Hedg, NodeId, NodeSet};
use rand::seq::SliceRandom;
use rand::Rng;
use std::collections::BTreeSet;

/// Samples a random graph with between 1 and `max_nodes` nodes.
///
/// Edge density is tuned so that graphs stay sparse enough to be
/// interesting (cycles and nontrivial components appear regularly but the
/// graph rarely collapses into one clique); up to three multi-node
/// hyperedges of size 2–4 are thrown in. Self-loops are allowed.
pub fn random_hedg<R: Rng>(rng: &mut R, max_nodes: usize) -> Hedg {
    assert!(max_nodes >= 1);
    let count = rng.gen_range(1..=max_nodes);
    let labels: Vec<NodeId> = (1..=count)
        .map(|i| NodeId::new(format!("n{i}")).unwrap())
        .collect();
    let nodes: NodeSet = labels.iter().cloned().collect();

    let edge_prob = 1.6 / count as f64;
    let mut edges = BTreeSet::new();
    for a in &labels {
        for b in &labels {
            if rng.gen_bool(edge_prob.min(1.0)) {
                edges.insert((a.clone(), b.clone()));
            }
        }
    }

    let mut hyper = Vec::new();
    for _ in 0..rng.gen_range(0..=3usize) {
        if count < 2 {
            break;
        }
        let size = rng.gen_range(2..=count.min(4));
        let mut pool = labels.clone();
        pool.shuffle(rng);
        hyper.push(pool.into_iter().take(size).collect::<NodeSet>());
    }

    Hedg::new(nodes, edges, hyper).unwrap()
}
