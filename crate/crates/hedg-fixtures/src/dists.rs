//! Named probability tables used across the test suites, plus random table
//! generators.

use hedg_core::{NodeId, NodeSet};
use hedg_dist::FiniteDist;
use rand::Rng;

use crate::n;

fn binary(labels: &[&str]) -> Vec<(NodeId, usize)> {
    labels.iter().map(|s| (n(s), 2)).collect()
}

/// Uniform mass on eight of the sixteen binary cells over (x1,x2,x3,x4),
/// matching the node labels of [`crate::four_cycle`].
///
/// The support consists of the all-zero and all-one cells plus the six cells
/// whose set of ones is a prefix or suffix of the path x1–x2–x3–x4.  It is
/// the classic table that satisfies both global Markov properties of the
/// four-cycle while admitting no factorization over the square's pairwise
/// cliques.
pub fn eight_point_cycle_dist() -> FiniteDist {
    let cells: [&[u8]; 8] = [
        &[0, 0, 0, 0],
        &[1, 0, 0, 0],
        &[1, 1, 0, 0],
        &[1, 1, 1, 0],
        &[0, 0, 0, 1],
        &[0, 0, 1, 1],
        &[0, 1, 1, 1],
        &[1, 1, 1, 1],
    ];
    let weighted: Vec<(&[u8], f64)> = cells.iter().map(|c| (*c, 0.125)).collect();
    FiniteDist::from_cells(binary(&["x1", "x2", "x3", "x4"]), &weighted).unwrap()
}

/// The observed joint of [`crate::three_coin`]: three identical copies of one
/// fair coin, ½ on (0,0,0) and ½ on (1,1,1).
pub fn three_coin_joint() -> FiniteDist {
    FiniteDist::from_cells(
        binary(&["X1", "X2", "X3"]),
        &[(&[0, 0, 0], 0.5), (&[1, 1, 1], 0.5)],
    )
    .unwrap()
}

/// The latent-augmented joint for [`crate::three_coin`]: the hidden coin and
/// its three copies, all equal, fair.  The latent variable carries the label
/// the augmentation assigns to the hyperedge {X1,X2,X3}.
pub fn three_coin_witness() -> FiniteDist {
    let edge: NodeSet = [n("X1"), n("X2"), n("X3")].into_iter().collect();
    let latent = NodeId::new(hedg_transform::latent_label(&edge)).unwrap();
    let vars = vec![(n("X1"), 2), (n("X2"), 2), (n("X3"), 2), (latent, 2)];
    FiniteDist::from_cells(vars, &[(&[0, 0, 0, 0], 0.5), (&[1, 1, 1, 1], 0.5)]).unwrap()
}

/// Samples a variable list `d1..dk` with `1..=max_vars` variables and random
/// cardinalities `2..=max_card`.
pub fn random_dist_vars<R: Rng>(rng: &mut R, max_vars: usize, max_card: usize) -> Vec<(NodeId, usize)> {
    assert!(max_vars >= 1 && max_card >= 2);
    let count = rng.gen_range(1..=max_vars);
    (1..=count)
        .map(|i| (n(&format!("d{i}")), rng.gen_range(2..=max_card)))
        .collect()
}

/// A strictly positive random table over the given variables.
pub fn random_positive_table<R: Rng>(rng: &mut R, vars: Vec<(NodeId, usize)>) -> FiniteDist {
    let cells: usize = vars.iter().map(|(_, c)| c).product();
    let probs: Vec<f64> = (0..cells).map(|_| rng.gen_range(0.05..1.0)).collect();
    FiniteDist::new_renormalized(vars, probs).unwrap()
}

/// A random table with a sprinkling of exact zero cells (at least one cell
/// stays positive).
pub fn random_sparse_table<R: Rng>(rng: &mut R, vars: Vec<(NodeId, usize)>) -> FiniteDist {
    let cells: usize = vars.iter().map(|(_, c)| c).product();
    let mut probs: Vec<f64> = (0..cells)
        .map(|_| {
            if rng.gen_bool(0.35) {
                0.0
            } else {
                rng.gen_range(0.05..1.0)
            }
        })
        .collect();
    if probs.iter().all(|&p| p == 0.0) {
        probs[rng.gen_range(0..cells)] = 1.0;
    }
    FiniteDist::new_renormalized(vars, probs).unwrap()
}
