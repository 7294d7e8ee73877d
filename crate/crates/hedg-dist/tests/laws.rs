//! Distribution-level laws: the thresholded conditional-independence relation
//! of a finite table is a semi-graphoid (plus intersection on positive
//! tables), marginalization commutes, and IPF both recovers genuine products
//! and preserves clique marginals.

use hedg_core::{NodeId, NodeSet};
use hedg_dist::{ipf_fit, FiniteDist, DEFAULT_CI_TOL, DEFAULT_IPF_MAX_ITERS, DEFAULT_IPF_TOL};
use hedg_fixtures::{random_dist_vars, random_positive_table, random_sparse_table};
use hedg_separation::{independence_model_audit, Axiom};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SEMI_GRAPHOID: [Axiom; 5] = [
    Axiom::Irrelevance,
    Axiom::Symmetry,
    Axiom::Decomposition,
    Axiom::WeakUnion,
    Axiom::Contraction,
];

fn decode(vars: &[(NodeId, usize)], mut idx: usize) -> Vec<u8> {
    let mut asg = vec![0u8; vars.len()];
    for i in (0..vars.len()).rev() {
        asg[i] = (idx % vars[i].1) as u8;
        idx /= vars[i].1;
    }
    asg
}

/// Builds a table that factorizes exactly over the given variable blocks
/// (each block gets one random positive factor), so that block-structured
/// independencies hold by construction.
fn random_block_product<R: Rng>(rng: &mut R, vars: &[(NodeId, usize)], blocks: &[Vec<usize>]) -> FiniteDist {
    let mut factors: Vec<(Vec<usize>, Vec<f64>)> = Vec::new();
    for block in blocks {
        let size: usize = block.iter().map(|&i| vars[i].1).product();
        let table: Vec<f64> = (0..size).map(|_| rng.gen_range(0.1..1.0)).collect();
        factors.push((block.clone(), table));
    }
    let cells: usize = vars.iter().map(|(_, c)| c).product();
    let mut probs = vec![1.0; cells];
    for (idx, cell) in probs.iter_mut().enumerate() {
        let asg = decode(vars, idx);
        for (block, table) in &factors {
            let mut sub = 0usize;
            for &i in block {
                sub = sub * vars[i].1 + asg[i] as usize;
            }
            *cell *= table[sub];
        }
    }
    FiniteDist::new_renormalized(vars.to_vec(), probs).unwrap()
}

/// Random partition of the variable indices into nonempty blocks.
fn random_blocks<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if blocks.is_empty() || rng.gen_bool(0.5) {
            blocks.push(vec![i]);
        } else {
            let k = rng.gen_range(0..blocks.len());
            blocks[k].push(i);
        }
    }
    blocks
}

fn audit_ci(p: &FiniteDist, axioms: &[Axiom]) {
    let ground = p.var_names();
    let report = independence_model_audit(
        |x: &NodeSet, y: &NodeSet, z: &NodeSet| p.is_ci(x, y, z, DEFAULT_CI_TOL).unwrap(),
        &ground,
        axioms,
    )
    .unwrap();
    assert!(
        report.passed(),
        "axiom violations on {:?}: {:?}",
        p.vars(),
        report.violations.first()
    );
}

#[test]
fn thresholded_independence_is_a_semi_graphoid() {
    let mut rng = StdRng::seed_from_u64(0x5eed_d157);
    for round in 0..36 {
        let vars = random_dist_vars(&mut rng, 4, 3);
        let p = match round % 3 {
            0 => random_positive_table(&mut rng, vars),
            1 => random_sparse_table(&mut rng, vars),
            _ => {
                let blocks = random_blocks(&mut rng, vars.len());
                random_block_product(&mut rng, &vars, &blocks)
            }
        };
        audit_ci(&p, &SEMI_GRAPHOID);
    }
}

#[test]
fn positive_tables_additionally_satisfy_intersection() {
    let mut rng = StdRng::seed_from_u64(0xca11_ab1e);
    for round in 0..24 {
        let vars = random_dist_vars(&mut rng, 4, 3);
        let p = if round % 2 == 0 {
            random_positive_table(&mut rng, vars)
        } else {
            let blocks = random_blocks(&mut rng, vars.len());
            random_block_product(&mut rng, &vars, &blocks)
        };
        assert!(p.probs().iter().all(|&q| q > 0.0));
        audit_ci(&p, &[Axiom::Intersection]);
    }
}

#[test]
fn block_products_actually_exhibit_their_independencies() {
    // Guard against the audits above passing vacuously: a two-block product
    // must make the blocks independent, and a chain-structured table must
    // hide the ends behind the middle.
    let mut rng = StdRng::seed_from_u64(7);
    let vars = random_dist_vars(&mut rng, 4, 3);
    if vars.len() >= 2 {
        let split = vars.len() / 2;
        let blocks = vec![(0..split).collect::<Vec<_>>(), (split..vars.len()).collect()];
        let p = random_block_product(&mut rng, &vars, &blocks);
        let left: NodeSet = vars[..split].iter().map(|(v, _)| v.clone()).collect();
        let right: NodeSet = vars[split..].iter().map(|(v, _)| v.clone()).collect();
        assert!(p.is_ci(&left, &right, &NodeSet::new(), DEFAULT_CI_TOL).unwrap());
    }

    let chain: Vec<(NodeId, usize)> = ["a", "b", "c"]
        .iter()
        .map(|s| (NodeId::new(*s).unwrap(), 2))
        .collect();
    let p = random_block_product(&mut rng, &chain, &[vec![0, 1], vec![1, 2]]);
    let a: NodeSet = [chain[0].0.clone()].into_iter().collect();
    let b: NodeSet = [chain[1].0.clone()].into_iter().collect();
    let c: NodeSet = [chain[2].0.clone()].into_iter().collect();
    assert!(p.is_ci(&a, &c, &b, DEFAULT_CI_TOL).unwrap());
    // and generically nothing stronger:
    assert!(!p.is_ci(&a, &b, &NodeSet::new(), DEFAULT_CI_TOL).unwrap());
}

#[test]
fn marginalization_commutes_through_intermediate_sets() {
    let mut rng = StdRng::seed_from_u64(0x1234_5678);
    for round in 0..100 {
        let vars = random_dist_vars(&mut rng, 5, 3);
        let p = if round % 2 == 0 {
            random_positive_table(&mut rng, vars.clone())
        } else {
            random_sparse_table(&mut rng, vars.clone())
        };
        let s: NodeSet = vars
            .iter()
            .filter(|_| rng.gen_bool(0.7))
            .map(|(v, _)| v.clone())
            .collect();
        let t: NodeSet = s.iter().filter(|_| rng.gen_bool(0.6)).cloned().collect();
        let via = p.marginal(&s).unwrap().marginal(&t).unwrap();
        let direct = p.marginal(&t).unwrap();
        let gap = via.tv_distance(&direct).unwrap();
        assert!(gap < 1e-14, "round {round}: commutation gap {gap}");
    }
}

#[test]
fn ipf_recovers_products_and_preserves_clique_marginals() {
    let mut rng = StdRng::seed_from_u64(0xf17_f17);
    for round in 0..30 {
        let vars = random_dist_vars(&mut rng, 4, 3);
        let n = vars.len();
        // Random clique cover: a few random subsets, topped up so every
        // variable is covered.
        let mut cliques_idx: Vec<Vec<usize>> = Vec::new();
        for _ in 0..rng.gen_range(1..=3usize) {
            let mut c: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
            if c.is_empty() {
                c.push(rng.gen_range(0..n));
            }
            cliques_idx.push(c);
        }
        for i in 0..n {
            if !cliques_idx.iter().any(|c| c.contains(&i)) {
                cliques_idx.push(vec![i]);
            }
        }
        let cliques: Vec<NodeSet> = cliques_idx
            .iter()
            .map(|c| c.iter().map(|&i| vars[i].0.clone()).collect())
            .collect();

        // A target built as a product over exactly those cliques must be
        // recovered essentially exactly...
        let product = random_block_product(&mut rng, &vars, &cliques_idx);
        let fit = ipf_fit(&product, &cliques, DEFAULT_IPF_MAX_ITERS, DEFAULT_IPF_TOL).unwrap();
        assert!(fit.converged, "round {round}: product fit did not converge");
        assert!(
            fit.tv_distance < 1e-8,
            "round {round}: product fit off by {}",
            fit.tv_distance
        );

        // ...and for an arbitrary positive target, the converged projection
        // still matches every clique marginal.
        let target = random_positive_table(&mut rng, vars.clone());
        let fit = ipf_fit(&target, &cliques, DEFAULT_IPF_MAX_ITERS, DEFAULT_IPF_TOL).unwrap();
        assert!(fit.converged, "round {round}: projection did not converge");
        for c in &cliques {
            let gap = fit
                .fitted
                .marginal(c)
                .unwrap()
                .tv_distance(&target.marginal(c).unwrap())
                .unwrap();
            assert!(gap < 1e-7, "round {round}: clique {c:?} off by {gap}");
        }
    }
}
