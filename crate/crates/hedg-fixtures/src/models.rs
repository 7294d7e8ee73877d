//! Ready-made structural models and random model generators.

use std::collections::{BTreeMap, BTreeSet};

use hedg_core::{Hedg, NodeId, NodeSet};
use hedg_scm::{DiscreteMscm, GaussianLinearSem};
use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::graphs::{four_cycle, n, ns, selfloop_square_graph, three_coin};

/// Three fair coins welded together by one shared noise source: every node
/// copies the same coin flip.
pub fn three_coin_mscm() -> DiscreteMscm {
    DiscreteMscm::new(
        three_coin(),
        [("X1", 2), ("X2", 2), ("X3", 2)]
            .iter()
            .map(|(v, c)| (n(v), *c))
            .collect(),
        [(ns(&["X1", "X2", "X3"]), vec![0.5, 0.5])].into(),
        [
            (n("X1"), vec![0, 1]),
            (n("X2"), vec![0, 1]),
            (n("X3"), vec![0, 1]),
        ]
        .into(),
    )
    .expect("three-coin model is well formed")
}

/// A uniquely solvable model on the directed four-cycle: `x1` ignores its
/// parent and copies its own biased noise, every other node xors its parent
/// with its noise. The per-node biases differ so the joint is not uniform.
pub fn four_cycle_mscm() -> DiscreteMscm {
    DiscreteMscm::new(
        four_cycle(),
        ["x1", "x2", "x3", "x4"].iter().map(|v| (n(v), 2)).collect(),
        [
            (ns(&["x1"]), vec![0.5, 0.5]),
            (ns(&["x2"]), vec![0.6, 0.4]),
            (ns(&["x3"]), vec![0.7, 0.3]),
            (ns(&["x4"]), vec![0.8, 0.2]),
        ]
        .into(),
        [
            // Tables are indexed by (parent value, noise value), noise fastest.
            (n("x1"), vec![0, 1, 0, 1]), // copies its noise, ignores x2
            (n("x2"), vec![0, 1, 1, 0]), // x3 xor noise
            (n("x3"), vec![0, 1, 1, 0]), // x4 xor noise
            (n("x4"), vec![0, 1, 1, 0]), // x1 xor noise
        ]
        .into(),
    )
    .expect("four-cycle model is well formed")
}

/// The averaged four-node cycle `w -> x -> y -> z -> w` with a self-loop on
/// `w`, all coefficients one half, independent noise of variance one quarter.
pub fn averaged_cycle_sem() -> GaussianLinearSem {
    let g = selfloop_square_graph();
    // Ascending order: w, x, y, z.
    let mut b = DMatrix::zeros(4, 4);
    b[(1, 0)] = 0.5; // x <- w
    b[(2, 1)] = 0.5; // y <- x
    b[(3, 2)] = 0.5; // z <- y
    b[(0, 3)] = 0.5; // w <- z
    b[(0, 0)] = 0.5; // w <- w
    GaussianLinearSem::new(g, b, DMatrix::identity(4, 4) * 0.25)
        .expect("averaged cycle model is well formed")
}

fn random_simplex<R: Rng>(rng: &mut R, card: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..card).map(|_| rng.gen_range(0.05..1.0)).collect();
    let sum: f64 = raw.iter().sum();
    raw.into_iter().map(|p| p / sum).collect()
}

/// Draws a random discrete model with up to five nodes (domains of two or
/// three values), random edges including occasional self-loops, up to two
/// multi-node hyperedges, and random mechanisms, half of which ignore their
/// parents to keep cycles anchored. Redraws until the fixed-point equations
/// of every strongly connected node set are uniquely solvable.
pub fn random_mscm<R: Rng>(rng: &mut R) -> DiscreteMscm {
    for _ in 0..500 {
        let k = rng.gen_range(1..=5usize);
        let names: Vec<NodeId> = (1..=k).map(|i| n(&format!("v{i}"))).collect();
        let nodes: NodeSet = names.iter().cloned().collect();

        let mut dedges: BTreeSet<(NodeId, NodeId)> = BTreeSet::new();
        for a in &names {
            for b in &names {
                let p = if a == b { 0.10 } else { 0.28 };
                if rng.gen::<f64>() < p {
                    dedges.insert((a.clone(), b.clone()));
                }
            }
        }

        let mut hyper: Vec<NodeSet> = Vec::new();
        if k >= 2 {
            for _ in 0..rng.gen_range(0..=2usize) {
                let size = rng.gen_range(2..=3.min(k));
                let mut pool = names.clone();
                pool.shuffle(rng);
                hyper.push(pool.into_iter().take(size).collect());
            }
        }
        let g = Hedg::new(nodes, dedges, hyper).expect("generated parts are consistent");

        let domains: BTreeMap<NodeId, usize> = names
            .iter()
            .map(|v| (v.clone(), rng.gen_range(2..=3usize)))
            .collect();

        let spaces: Vec<(NodeSet, usize)> = g
            .hyperedges()
            .iter()
            .map(|f| (f.clone(), rng.gen_range(1..=3usize)))
            .collect();
        let error_tables: BTreeMap<NodeSet, Vec<f64>> = spaces
            .iter()
            .map(|(f, card)| (f.clone(), random_simplex(rng, *card)))
            .collect();

        let mut mechanisms: BTreeMap<NodeId, Vec<u8>> = BTreeMap::new();
        for v in g.nodes() {
            let parents = g
                .parents(&NodeSet::from([v.clone()]))
                .expect("node exists");
            let parent_len: usize = parents.iter().map(|p| domains[p]).product();
            let noise_len: usize = spaces
                .iter()
                .filter(|(f, _)| f.contains(v))
                .map(|(_, card)| card)
                .product();
            let card = domains[v];
            let table: Vec<u8> = if rng.gen::<f64>() < 0.5 {
                // Parent-ignoring: the value depends on the noise only, which
                // anchors any cycle through this node.
                let noise_table: Vec<u8> = (0..noise_len)
                    .map(|_| rng.gen_range(0..card) as u8)
                    .collect();
                (0..parent_len * noise_len)
                    .map(|i| noise_table[i % noise_len])
                    .collect()
            } else {
                (0..parent_len * noise_len)
                    .map(|_| rng.gen_range(0..card) as u8)
                    .collect()
            };
            mechanisms.insert(v.clone(), table);
        }

        let model = DiscreteMscm::new(g, domains, error_tables, mechanisms)
            .expect("generated model parts are consistent");
        if model.derive_loop_solutions().is_ok() {
            return model;
        }
    }
    panic!("no uniquely solvable random model found in 500 attempts");
}

/// Draws a random linear Gaussian model with up to eight nodes: random edges
/// (self-loops included), random pairwise hyperedges carrying correlated
/// noise, coefficients shrunk until `det(I - B)` clears `1e-3`, and a
/// strictly diagonally dominant (hence positive definite) noise covariance.
pub fn random_gaussian_sem<R: Rng>(rng: &mut R) -> GaussianLinearSem {
    let k = rng.gen_range(2..=8usize);
    let names: Vec<NodeId> = (1..=k).map(|i| n(&format!("v{i}"))).collect();
    let nodes: NodeSet = names.iter().cloned().collect();

    let mut dedges: BTreeSet<(NodeId, NodeId)> = BTreeSet::new();
    for a in &names {
        for b in &names {
            let p = if a == b { 0.08 } else { 0.25 };
            if rng.gen::<f64>() < p {
                dedges.insert((a.clone(), b.clone()));
            }
        }
    }
    let mut hyper: Vec<NodeSet> = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            if rng.gen::<f64>() < 0.12 {
                hyper.push([names[i].clone(), names[j].clone()].into_iter().collect());
            }
        }
    }
    let g = Hedg::new(nodes, dedges, hyper).expect("generated parts are consistent");
    let order: Vec<NodeId> = g.nodes().iter().cloned().collect();

    let mut b = DMatrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            if g.has_edge(&order[j], &order[i]) {
                let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                b[(i, j)] = sign * rng.gen_range(0.1..0.9);
            }
        }
    }
    loop {
        let det = (DMatrix::<f64>::identity(k, k) - &b).determinant();
        if det.abs() >= 1e-3 {
            break;
        }
        b *= 0.9;
    }

    let mut lambda: DMatrix<f64> = DMatrix::zeros(k, k);
    for i in 0..k {
        lambda[(i, i)] = rng.gen_range(0.5..1.5);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            if g.bidirected(&order[i], &order[j]) && rng.gen::<f64>() < 0.8 {
                let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                let r = sign * rng.gen_range(0.1..0.4);
                lambda[(i, j)] = r;
                lambda[(j, i)] = r;
            }
        }
    }
    // Scale the off-diagonal down until every row is strictly dominated by
    // its diagonal, which keeps the covariance positive definite.
    let mut factor = 1.0f64;
    for i in 0..k {
        let s: f64 = (0..k)
            .filter(|&j| j != i)
            .map(|j| lambda[(i, j)].abs())
            .sum();
        if s > 0.0 {
            factor = factor.min(0.9 * lambda[(i, i)] / s);
        }
    }
    if factor < 1.0 {
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    lambda[(i, j)] *= factor;
                }
            }
        }
    }

    GaussianLinearSem::new(g, b, lambda).expect("generated model parts are consistent")
}
