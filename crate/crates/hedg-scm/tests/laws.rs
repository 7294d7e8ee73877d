//! Semantic laws of the discrete engine: graph-separation soundness of the
//! exact joint, exactness of interventions and marginalization, compatibility
//! of the fixed-point tables, and generator determinism.

use std::collections::BTreeMap;

use hedg_core::{Hedg, NodeId, NodeSet};
use hedg_dist::FiniteDist;
use hedg_fixtures::{random_mscm, three_coin_mscm, three_coin_witness};
use hedg_scm::{intervene, marginalize_mscm, DiscreteMscm, InterventionSpec};
use hedg_separation::{sigma_separated, SepQuery};
use hedg_transform::marginalize;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Checks random singleton-pair triples: wherever the graph reports
/// sigma-separation, the law must satisfy the conditional independence
/// exactly. Returns how many separations were exercised.
fn check_sigma_soundness(
    g: &Hedg,
    joint: &FiniteDist,
    rng: &mut StdRng,
    rounds: usize,
) -> usize {
    let nodes: Vec<NodeId> = g.nodes().iter().cloned().collect();
    if nodes.len() < 2 {
        return 0;
    }
    let mut exercised = 0;
    for _ in 0..rounds {
        let i = rng.gen_range(0..nodes.len());
        let j = rng.gen_range(0..nodes.len());
        if i == j {
            continue;
        }
        let z: NodeSet = nodes
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i && *k != j && rng.gen::<f64>() < 0.4)
            .map(|(_, v)| v.clone())
            .collect();
        let x = NodeSet::from([nodes[i].clone()]);
        let y = NodeSet::from([nodes[j].clone()]);
        let q = SepQuery::new(x.clone(), y.clone(), z.clone());
        if sigma_separated(g, &q).unwrap() {
            exercised += 1;
            let defect = joint.ci_defect(&x, &y, &z).unwrap();
            assert!(
                defect <= 1e-9,
                "sigma-separated triple {x:?} / {y:?} | {z:?} has CI defect {defect}"
            );
        }
    }
    exercised
}

#[test]
fn sigma_separations_hold_exactly_in_random_models() {
    let mut rng = StdRng::seed_from_u64(0x5c_4a11);
    let mut exercised = 0;
    for _ in 0..40 {
        let m = random_mscm(&mut rng);
        let joint = m.exact_joint().unwrap();
        exercised += check_sigma_soundness(m.graph(), &joint, &mut rng, 25);
    }
    assert!(
        exercised > 50,
        "only {exercised} separations exercised; the sweep is too weak"
    );
}

fn random_replacements(m: &DiscreteMscm, rng: &mut StdRng) -> InterventionSpec {
    let nodes: Vec<NodeId> = m.graph().nodes().iter().cloned().collect();
    let mut targets: Vec<NodeId> = nodes
        .iter()
        .filter(|_| rng.gen::<f64>() < 0.35)
        .cloned()
        .collect();
    if targets.is_empty() {
        targets.push(nodes[rng.gen_range(0..nodes.len())].clone());
    }
    let mut spec = InterventionSpec::default();
    for t in targets {
        let card = m.domain(&t).unwrap();
        if rng.gen_bool(0.5) {
            spec = spec.with_point(t, rng.gen_range(0..card) as u8, card);
        } else {
            let raw: Vec<f64> = (0..card).map(|_| rng.gen_range(0.05..1.0)).collect();
            let sum: f64 = raw.iter().sum();
            spec = spec.with(t, raw.into_iter().map(|p| p / sum).collect());
        }
    }
    spec
}

#[test]
fn interventions_pin_their_targets_and_stay_sigma_sound() {
    let mut rng = StdRng::seed_from_u64(0xd0_0d1e);
    let mut exercised = 0;
    for _ in 0..30 {
        let m = random_mscm(&mut rng);
        let spec = random_replacements(&m, &mut rng);
        let done = intervene(&m, &spec).unwrap();
        let joint = done.exact_joint().unwrap();

        // Each target follows its replacement law exactly.
        for (t, probs) in spec.replacements() {
            let marg = joint.marginal(&NodeSet::from([t.clone()])).unwrap();
            for (v, p) in probs.iter().enumerate() {
                assert!((marg.probs()[v] - p).abs() < 1e-12);
            }
        }
        // Targets are jointly independent of one another.
        let targets = spec.targets();
        let marg = joint.marginal(&targets).unwrap();
        let order: Vec<&NodeId> = targets.iter().collect();
        for (cell, p) in marg.cells() {
            let want: f64 = order
                .iter()
                .zip(&cell)
                .map(|(t, &v)| spec.replacements()[*t][v as usize])
                .product();
            assert!((p - want).abs() < 1e-12);
        }

        exercised += check_sigma_soundness(done.graph(), &joint, &mut rng, 20);
    }
    assert!(exercised > 30, "only {exercised} separations exercised");
}

#[test]
fn marginalized_models_reproduce_the_marginal_law() {
    let mut rng = StdRng::seed_from_u64(0x0f_f5e7);
    for _ in 0..30 {
        let m = random_mscm(&mut rng);
        let nodes: Vec<NodeId> = m.graph().nodes().iter().cloned().collect();
        let w: NodeSet = nodes
            .iter()
            .filter(|_| rng.gen::<f64>() < 0.4)
            .cloned()
            .collect();
        let keep: NodeSet = nodes.iter().filter(|v| !w.contains(v)).cloned().collect();

        let reduced = marginalize_mscm(&m, &w).unwrap();
        assert_eq!(reduced.graph(), &marginalize(m.graph(), &w).unwrap());

        let got = reduced.exact_joint().unwrap();
        let want = m.exact_joint().unwrap().marginal(&keep).unwrap();
        if keep.is_empty() {
            assert!((got.prob(&[]).unwrap() - 1.0).abs() < 1e-12);
        } else {
            let tv = got.tv_distance(&want).unwrap();
            assert!(tv < 1e-12, "marginalized law off by {tv}");
        }
    }
}

#[test]
fn interventions_commute_with_marginalizing_other_nodes() {
    let mut rng = StdRng::seed_from_u64(0xca_fe01);
    let mut checked = 0;
    for _ in 0..40 {
        let m = random_mscm(&mut rng);
        let nodes: Vec<NodeId> = m.graph().nodes().iter().cloned().collect();
        if nodes.len() < 2 {
            continue;
        }
        // One surviving target, a removal set disjoint from it.
        let t = nodes[rng.gen_range(0..nodes.len())].clone();
        let w: NodeSet = nodes
            .iter()
            .filter(|v| **v != t && rng.gen::<f64>() < 0.4)
            .cloned()
            .collect();
        if w.is_empty() {
            continue;
        }
        let card = m.domain(&t).unwrap();
        let spec = InterventionSpec::point(t.clone(), rng.gen_range(0..card) as u8, card);

        let do_then_marg = marginalize_mscm(&intervene(&m, &spec).unwrap(), &w).unwrap();
        let marg_then_do = intervene(&marginalize_mscm(&m, &w).unwrap(), &spec).unwrap();

        assert_eq!(do_then_marg.graph(), marg_then_do.graph());
        let a = do_then_marg.exact_joint().unwrap();
        let b = marg_then_do.exact_joint().unwrap();
        let tv = a.tv_distance(&b).unwrap();
        assert!(tv < 1e-12, "intervention and marginalization differ by {tv}");
        checked += 1;
    }
    assert!(checked > 10, "only {checked} commutation instances checked");
}

#[test]
fn augmented_joint_extends_the_joint_by_one_variable_per_hyperedge() {
    let mut rng = StdRng::seed_from_u64(0xab_cdef);
    for _ in 0..15 {
        let m = random_mscm(&mut rng);
        let aug = m.exact_augmented_joint().unwrap();
        let expected_vars = m.graph().nodes().len() + m.error_spaces().len();
        assert_eq!(aug.vars().len(), expected_vars);

        let joint = m.exact_joint().unwrap();
        if m.graph().nodes().is_empty() {
            continue;
        }
        let back = aug.marginal(&m.graph().nodes().clone()).unwrap();
        let tv = back.tv_distance(&joint).unwrap();
        assert!(tv < 1e-12, "augmented law does not project back ({tv})");
    }
}

#[test]
fn loop_solution_tables_are_mutually_compatible() {
    fn decode(mut i: usize, radices: &[usize]) -> Vec<u8> {
        let mut out = vec![0u8; radices.len()];
        for k in (0..radices.len()).rev() {
            out[k] = (i % radices[k]) as u8;
            i /= radices[k];
        }
        out
    }

    let mut rng = StdRng::seed_from_u64(0x10_0b5);
    let mut pairs_checked = 0;
    for _ in 0..60 {
        let m = random_mscm(&mut rng);
        let sols = match m.derive_loop_solutions() {
            Ok(s) => s,
            Err(_) => continue,
        };
        let loops: Vec<NodeSet> = sols.loops().cloned().collect();
        for big in &loops {
            for small in &loops {
                if small == big || !small.is_subset(big) {
                    continue;
                }
                let tb = sols.table(big).unwrap();
                let ts = sols.table(small).unwrap();
                let in_cards: Vec<usize> =
                    tb.input_nodes().iter().map(|v| m.domain(v).unwrap()).collect();
                let sp_cards: Vec<usize> = tb
                    .space_indices()
                    .iter()
                    .map(|&si| m.error_spaces()[si].card())
                    .collect();
                let radices: Vec<usize> =
                    in_cards.iter().chain(sp_cards.iter()).copied().collect();
                let total: usize = radices.iter().product();
                for flat in 0..total {
                    let coords = decode(flat, &radices);
                    let (in_vals, e_vals) = coords.split_at(in_cards.len());
                    let xs = tb.solve(in_vals, e_vals).unwrap();

                    // Assemble the small table's inputs from the big solution
                    // and the big inputs, then compare the solved values.
                    let sub_inputs: Vec<u8> = ts
                        .input_nodes()
                        .iter()
                        .map(|p| {
                            if let Some(pos) = tb.nodes().iter().position(|v| v == p) {
                                xs[pos]
                            } else {
                                let pos = tb
                                    .input_nodes()
                                    .iter()
                                    .position(|v| v == p)
                                    .expect("outside parents of a sub-loop are known");
                                in_vals[pos]
                            }
                        })
                        .collect();
                    let sub_errs: Vec<u8> = ts
                        .space_indices()
                        .iter()
                        .map(|si| {
                            let pos = tb
                                .space_indices()
                                .iter()
                                .position(|x| x == si)
                                .expect("sub-loop noise is part of the loop noise");
                            e_vals[pos]
                        })
                        .collect();
                    let sub = ts.solve(&sub_inputs, &sub_errs).unwrap();
                    for (node, &val) in ts.nodes().iter().zip(sub) {
                        let pos = tb.nodes().iter().position(|v| v == node).unwrap();
                        assert_eq!(
                            xs[pos], val,
                            "solution of {small:?} disagrees inside {big:?}"
                        );
                    }
                }
                pairs_checked += 1;
            }
        }
    }
    assert!(
        pairs_checked > 5,
        "only {pairs_checked} nested loop pairs checked"
    );
}

#[test]
fn shared_coin_augmented_law_matches_the_reference_table() {
    let aug = three_coin_mscm().exact_augmented_joint().unwrap();
    let want = three_coin_witness();
    let tv = aug.tv_distance(&want).unwrap();
    assert!(tv < 1e-12, "augmented law differs from the fixture ({tv})");
}

#[test]
fn model_generation_is_seed_deterministic() {
    let mut a = StdRng::seed_from_u64(41);
    let mut b = StdRng::seed_from_u64(41);
    let ma = random_mscm(&mut a);
    let mb = random_mscm(&mut b);
    assert_eq!(ma.graph(), mb.graph());
    assert_eq!(ma.domains(), mb.domains());
    let pa: BTreeMap<&NodeId, &[u8]> = ma
        .graph()
        .nodes()
        .iter()
        .map(|v| (v, ma.mechanism(v).unwrap()))
        .collect();
    for (v, table) in pa {
        assert_eq!(mb.mechanism(v).unwrap(), table);
    }
    assert_eq!(
        ma.exact_joint().unwrap().probs(),
        mb.exact_joint().unwrap().probs()
    );
}
