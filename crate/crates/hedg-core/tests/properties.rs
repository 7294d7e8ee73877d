//! Property tests for the relational queries, driven by random small graphs.

use std::collections::BTreeSet;

use hedg_core::{Hedg, NodeId, NodeSet};
use proptest::prelude::*;

const LABELS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

fn n(label: &str) -> NodeId {
    NodeId::new(label).unwrap()
}

#[derive(Debug, Clone)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    hyper: Vec<Vec<usize>>,
}

fn raw_graph() -> impl Strategy<Value = RawGraph> {
    (2usize..=6)
        .prop_flat_map(|size| {
            let edges = proptest::collection::vec((0..size, 0..size), 0..=10);
            let hyper = proptest::collection::vec(
                proptest::collection::vec(0..size, 0..=size),
                0..=3,
            );
            (Just(size), edges, hyper)
        })
        .prop_map(|(size, edges, hyper)| RawGraph {
            n: size,
            edges,
            hyper,
        })
}

fn build(raw: &RawGraph) -> Hedg {
    let nodes: NodeSet = LABELS[..raw.n].iter().map(|l| n(l)).collect();
    let dedges: BTreeSet<(NodeId, NodeId)> = raw
        .edges
        .iter()
        .map(|&(i, j)| (n(LABELS[i]), n(LABELS[j])))
        .collect();
    let hyper: Vec<NodeSet> = raw
        .hyper
        .iter()
        .map(|f| f.iter().map(|&i| n(LABELS[i])).collect())
        .collect();
    Hedg::new(nodes, dedges, hyper).unwrap()
}

proptest! {
    #[test]
    fn ancestors_distribute_over_unions(raw in raw_graph()) {
        let g = build(&raw);
        let all: Vec<NodeId> = g.nodes().iter().cloned().collect();
        let s: NodeSet = all.iter().take(2).cloned().collect();
        let unioned = g.ancestors(&s).unwrap();
        let mut pieces = NodeSet::new();
        for v in &s {
            pieces.extend(g.ancestors(&NodeSet::from([v.clone()])).unwrap());
        }
        prop_assert_eq!(unioned, pieces);
    }

    #[test]
    fn ancestors_are_reflexive_and_transitive(raw in raw_graph()) {
        let g = build(&raw);
        for v in g.nodes() {
            let anc = g.ancestors(&NodeSet::from([v.clone()])).unwrap();
            prop_assert!(anc.contains(v));
            let again = g.ancestors(&anc).unwrap();
            prop_assert_eq!(anc, again);
        }
    }

    #[test]
    fn scc_matches_ancestor_descendant_intersection(raw in raw_graph()) {
        let g = build(&raw);
        let partition = g.scc_partition();
        let mut covered = NodeSet::new();
        for block in &partition {
            for v in block {
                prop_assert_eq!(&g.scc(v).unwrap(), block);
                prop_assert!(!covered.contains(v));
                covered.insert(v.clone());
            }
        }
        prop_assert_eq!(covered, g.nodes().clone());
    }

    #[test]
    fn every_scc_is_a_loop_and_every_loop_fits_one_scc(raw in raw_graph()) {
        let g = build(&raw);
        let loops = g.loop_set();
        for block in g.scc_partition() {
            prop_assert!(loops.contains(&block));
        }
        for l in &loops {
            let first = l.iter().next().unwrap();
            let scc = g.scc(first).unwrap();
            prop_assert!(l.is_subset(&scc));
        }
    }

    #[test]
    fn district_is_an_equivalence(raw in raw_graph()) {
        let g = build(&raw);
        for v in g.nodes() {
            let dv = g.district(v).unwrap();
            prop_assert!(dv.contains(v));
            for w in g.nodes() {
                let dw = g.district(w).unwrap();
                prop_assert_eq!(dv.contains(w), dw.contains(v));
            }
        }
    }

    #[test]
    fn classification_implications(raw in raw_graph()) {
        let g = build(&raw);
        let c = g.classify();
        prop_assert!(!c.is_dag || c.is_mdag);
        prop_assert!(c.is_admg == (c.is_dmg && c.is_mdag));
        let singleton_blocks = g.scc_partition().iter().all(|b| b.len() == 1);
        let no_self = !g.dedges().iter().any(|(a, b)| a == b);
        prop_assert_eq!(c.is_mdag, singleton_blocks && no_self);
    }

    #[test]
    fn ancestral_closure_is_ancestral_and_minimal(raw in raw_graph()) {
        let g = build(&raw);
        let seed: NodeSet = g.nodes().iter().take(1).cloned().collect();
        let closed = g.ancestral_closure(&seed).unwrap();
        prop_assert!(g.is_ancestral(closed.nodes()).unwrap());
        prop_assert!(seed.is_subset(closed.nodes()));
    }
}
