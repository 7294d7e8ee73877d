//! Cross-cutting laws of the order machinery on randomized and named graphs.

use hedg_core::{Hedg, NodeId, NodeSet};
use hedg_fixtures::{interval_order_graph, n, ns, random_hedg};
use hedg_orders::{
    classify_order, find_perfect_elimination, find_pseudo_topological, pred_hedg, restrict_order,
    OrderReport, TotalOrder,
};
use hedg_transform::{acyclify, marginalize};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

fn shuffled_order(g: &Hedg, rng: &mut StdRng) -> TotalOrder {
    let mut seq: Vec<NodeId> = g.nodes().iter().cloned().collect();
    seq.shuffle(rng);
    TotalOrder::new(seq).unwrap()
}

fn random_subset(g: &Hedg, p: f64, rng: &mut StdRng) -> NodeSet {
    g.nodes()
        .iter()
        .filter(|_| rng.gen_bool(p))
        .cloned()
        .collect()
}

#[test]
fn constructed_pseudo_topological_orders_always_classify_as_such() {
    let mut rng = StdRng::seed_from_u64(0x0d5e);
    for _ in 0..150 {
        let g = random_hedg(&mut rng, 7);
        let ord = find_pseudo_topological(&g);
        let rep = classify_order(&g, &ord).unwrap();
        assert!(
            rep.pseudo_topological && rep.assembling,
            "constructed order {ord} is not assembling pseudo-topological on {g:?}"
        );
    }
}

#[test]
fn on_acyclic_graphs_pseudo_topological_means_topological() {
    let mut rng = StdRng::seed_from_u64(0x0acc);
    for round in 0..200 {
        let g = acyclify(&random_hedg(&mut rng, 7));
        let ord = shuffled_order(&g, &mut rng);
        let rep = classify_order(&g, &ord).unwrap();
        assert_eq!(
            rep.pseudo_topological, rep.topological,
            "round {round}: flags split on an acyclic graph for {ord}"
        );
        if round % 4 == 0 {
            let built = find_pseudo_topological(&g);
            assert!(classify_order(&g, &built).unwrap().topological);
        }
    }
}

#[test]
fn classification_is_invariant_under_relabeling() {
    let mut rng = StdRng::seed_from_u64(0x5ab5);
    for _ in 0..60 {
        let g = random_hedg(&mut rng, 6);
        let ord = shuffled_order(&g, &mut rng);

        let mut fresh: Vec<usize> = (0..g.nodes().len()).collect();
        fresh.shuffle(&mut rng);
        let rename: std::collections::BTreeMap<NodeId, NodeId> = g
            .nodes()
            .iter()
            .zip(fresh)
            .map(|(v, i)| (v.clone(), NodeId::new(format!("m{i}")).unwrap()))
            .collect();

        let nodes: NodeSet = g.nodes().iter().map(|v| rename[v].clone()).collect();
        let dedges = g
            .dedges()
            .iter()
            .map(|(a, b)| (rename[a].clone(), rename[b].clone()))
            .collect();
        let hyper: Vec<NodeSet> = g
            .hyperedges()
            .iter()
            .map(|f| f.iter().map(|v| rename[v].clone()).collect())
            .collect();
        let h = Hedg::new(nodes, dedges, hyper).unwrap();
        let hord = TotalOrder::new(ord.iter().map(|v| rename[v].clone())).unwrap();

        let a = classify_order(&g, &ord).unwrap();
        let b = classify_order(&h, &hord).unwrap();
        assert_eq!(a.flags(), b.flags(), "renaming changed the classification");
    }
}

#[test]
fn restriction_preserves_every_order_kind() {
    let mut rng = StdRng::seed_from_u64(0x4e57);
    for round in 0..200 {
        let g = random_hedg(&mut rng, 7);
        let ord = shuffled_order(&g, &mut rng);
        let w = random_subset(&g, 0.35, &mut rng);
        let m = marginalize(&g, &w).unwrap();
        let kept = restrict_order(&g, &ord, &w).unwrap();

        let before = classify_order(&g, &ord).unwrap();
        let after = classify_order(&m, &kept).unwrap();
        let pairs: [(&str, bool, bool); 5] = [
            ("topological", before.topological, after.topological),
            (
                "pseudo-topological",
                before.pseudo_topological,
                after.pseudo_topological,
            ),
            ("assembling", before.assembling, after.assembling),
            (
                "perfect-elimination",
                before.perfect_elimination,
                after.perfect_elimination,
            ),
            (
                "quasi-topological",
                before.quasi_topological,
                after.quasi_topological,
            ),
        ];
        for (name, held_before, holds_after) in pairs {
            assert!(
                !held_before || holds_after,
                "round {round}: {name} was lost by restricting {ord} to the complement of {w:?}"
            );
        }
    }
}

#[test]
fn dropping_a_middle_node_keeps_the_interval_order_quasi_topological() {
    let g = interval_order_graph();
    let ord = TotalOrder::from_labels(&["v1", "v2", "v3", "v4", "v5"]).unwrap();
    let w = ns(&["v3"]);
    let kept = restrict_order(&g, &ord, &w).unwrap();
    assert_eq!(kept.nodes(), &[n("v1"), n("v2"), n("v4"), n("v5")]);
    let m = marginalize(&g, &w).unwrap();
    let rep = classify_order(&m, &kept).unwrap();
    assert!(rep.quasi_topological && rep.assembling);
}

#[test]
fn predecessor_graphs_of_the_interval_order_shrink_as_drawn() {
    let g = interval_order_graph();
    let ord = TotalOrder::from_labels(&["v1", "v2", "v3", "v4", "v5"]).unwrap();

    let p4 = pred_hedg(&g, &ord, &n("v4")).unwrap();
    assert_eq!(p4.nodes(), &ns(&["v1", "v2", "v3", "v4"]));
    let expect_edges: std::collections::BTreeSet<(NodeId, NodeId)> = [
        (n("v2"), n("v1")),
        (n("v3"), n("v2")),
        (n("v4"), n("v3")),
        (n("v1"), n("v4")),
    ]
    .into_iter()
    .collect();
    assert_eq!(p4.dedges(), &expect_edges);
    assert_eq!(
        p4.multi_hyperedges().cloned().collect::<Vec<_>>(),
        vec![ns(&["v3", "v4"])]
    );

    let p3 = pred_hedg(&g, &ord, &n("v3")).unwrap();
    let expect_edges: std::collections::BTreeSet<(NodeId, NodeId)> = [
        (n("v2"), n("v1")),
        (n("v3"), n("v2")),
        (n("v1"), n("v3")),
    ]
    .into_iter()
    .collect();
    assert_eq!(p3.dedges(), &expect_edges);
    assert_eq!(p3.multi_hyperedges().count(), 0);
}

/// Reference decision: try every permutation of the nodes and classify it.
fn exists_perfect_elimination_by_brute_force(g: &Hedg) -> bool {
    fn permute(rest: &mut Vec<NodeId>, prefix: &mut Vec<NodeId>, g: &Hedg) -> bool {
        if rest.is_empty() {
            let ord = TotalOrder::new(prefix.clone()).unwrap();
            return classify_order(g, &ord).unwrap().perfect_elimination;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            let found = permute(rest, prefix, g);
            let v = prefix.pop().unwrap();
            rest.insert(i, v);
            if found {
                return true;
            }
        }
        false
    }
    let mut rest: Vec<NodeId> = g.nodes().iter().cloned().collect();
    permute(&mut rest, &mut Vec::new(), g)
}

#[test]
fn the_search_agrees_with_brute_force_on_small_graphs() {
    let mut rng = StdRng::seed_from_u64(0xbf0e);
    let mut graphs: Vec<Hedg> = (0..70)
        .map(|round| random_hedg(&mut rng, if round % 5 == 0 { 5 } else { 4 }))
        .collect();
    // Random draws almost always admit an order, so pin one graph that does
    // not to keep both outcomes exercised.
    graphs.push(hedg_fixtures::four_cycle());
    let mut some = 0;
    let mut none = 0;
    for (round, g) in graphs.iter().enumerate() {
        let found = find_perfect_elimination(g).unwrap();
        let expected = exists_perfect_elimination_by_brute_force(g);
        match found {
            Some(ord) => {
                some += 1;
                assert!(expected, "round {round}: search invented an order for {g:?}");
                assert!(
                    classify_order(g, &ord).unwrap().perfect_elimination,
                    "round {round}: returned order {ord} is not perfect-elimination"
                );
            }
            None => {
                none += 1;
                assert!(!expected, "round {round}: search missed an order for {g:?}");
            }
        }
    }
    assert!(some > 0 && none > 0, "sweep never hit both outcomes");
}

#[test]
fn searched_orders_classify_as_perfect_elimination_on_larger_graphs() {
    let mut rng = StdRng::seed_from_u64(0x9e9e);
    for _ in 0..40 {
        let g = random_hedg(&mut rng, 6);
        if let Some(ord) = find_perfect_elimination(&g).unwrap() {
            let rep: OrderReport = classify_order(&g, &ord).unwrap();
            assert!(rep.perfect_elimination, "order {ord} fails on {g:?}");
        }
    }
}
