//! Structural laws relating the graph transforms, checked on random graphs
//! and on the named fixtures.

use hedg_core::{Hedg, NodeSet};
use hedg_fixtures::{moral_marginal_strictness_graph, named_graphs, ns, random_hedg};
use hedg_transform::{
    acyclic_augment, acyclify, augment, augment_map, marginalize, moralize, scc_quotient,
    u_marginalize,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_subset<R: Rng>(rng: &mut R, g: &Hedg) -> NodeSet {
    g.nodes()
        .iter()
        .filter(|_| rng.gen_bool(0.4))
        .cloned()
        .collect()
}

proptest! {
    #[test]
    fn marginalization_commutes(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_hedg(&mut rng, 6);
        let u1 = random_subset(&mut rng, &g);
        let u2: NodeSet = random_subset(&mut rng, &g)
            .difference(&u1)
            .cloned()
            .collect();
        let both: NodeSet = u1.union(&u2).cloned().collect();
        let step = marginalize(&marginalize(&g, &u1).unwrap(), &u2).unwrap();
        prop_assert_eq!(step, marginalize(&g, &both).unwrap());
    }

    #[test]
    fn ancestral_sets_marginalize_to_induced_subgraphs(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_hedg(&mut rng, 6);
        let a = g.ancestors(&random_subset(&mut rng, &g)).unwrap();
        let rest: NodeSet = g.nodes().difference(&a).cloned().collect();
        prop_assert_eq!(
            marginalize(&g, &rest).unwrap(),
            g.induced_subhedg(&a).unwrap()
        );
    }

    #[test]
    fn moralization_factors_through_augmentation(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_hedg(&mut rng, 6);
        let aug = augment_map(&g);
        let latents: NodeSet = aug.latents.keys().cloned().collect();
        prop_assert_eq!(
            moralize(&g),
            u_marginalize(&moralize(&aug.graph), &latents).unwrap()
        );
    }

    #[test]
    fn moralized_marginal_is_within_marginalized_moral(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_hedg(&mut rng, 6);
        let w = random_subset(&mut rng, &g);
        let lhs = moralize(&marginalize(&g, &w).unwrap());
        let rhs = u_marginalize(&moralize(&g), &w).unwrap();
        for (a, b) in lhs.uedges() {
            prop_assert!(rhs.has_uedge(a, b), "{a}-{b} missing on the outer side");
        }
    }

    #[test]
    fn acyclification_routes_agree_after_marginalization(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_hedg(&mut rng, 5);
        let acy = acyclify(&g);
        prop_assert!(acy.classify().is_mdag);

        let latents: NodeSet = augment_map(&g).latents.keys().cloned().collect();
        let via_acag = marginalize(&acyclic_augment(&g), &latents).unwrap();
        let via_aug_acy = marginalize(&acyclify(&augment(&g)), &latents).unwrap();
        let acy_latents: NodeSet = augment_map(&acy).latents.keys().cloned().collect();
        let via_acy_aug = marginalize(&augment(&acy), &acy_latents).unwrap();

        prop_assert_eq!(&via_acag, &acy);
        prop_assert_eq!(&via_aug_acy, &acy);
        prop_assert_eq!(&via_acy_aug, &acy);
    }

    #[test]
    fn marginalization_preserves_ancestry_among_survivors(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_hedg(&mut rng, 6);
        let u = random_subset(&mut rng, &g);
        let m = marginalize(&g, &u).unwrap();
        for v in m.nodes() {
            let before = g.ancestors(&NodeSet::from([v.clone()])).unwrap();
            let after = m.ancestors(&NodeSet::from([v.clone()])).unwrap();
            for w in m.nodes() {
                prop_assert_eq!(before.contains(w), after.contains(w));
            }
        }
    }

    #[test]
    fn component_quotient_is_an_mdag(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_hedg(&mut rng, 6);
        prop_assert!(scc_quotient(&g).classify().is_mdag);
    }
}

#[test]
fn subgraph_bound_is_strict_on_the_two_cycle_witness() {
    let g = moral_marginal_strictness_graph();
    let w = ns(&["v3", "v4"]);
    let lhs = moralize(&marginalize(&g, &w).unwrap());
    let rhs = u_marginalize(&moralize(&g), &w).unwrap();
    assert!(lhs.uedges().is_empty());
    assert!(rhs.has_uedge(&hedg_fixtures::n("v1"), &hedg_fixtures::n("v2")));
}

#[test]
fn named_fixtures_survive_every_transform() {
    for (name, g) in named_graphs() {
        let acy = acyclify(&g);
        assert!(acy.classify().is_mdag, "{name}: acyclification not an mDAG");
        assert!(
            acyclic_augment(&g).classify().is_dag,
            "{name}: acyclic augmentation not a DAG"
        );
        let aug = augment(&g);
        assert!(
            aug.dedges().len() >= g.dedges().len(),
            "{name}: augmentation dropped edges"
        );
        moralize(&g);
        scc_quotient(&g);
    }
}
