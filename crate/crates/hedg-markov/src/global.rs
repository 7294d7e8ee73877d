use hedg_core::{Hedg, NodeId, NodeSet};
use hedg_dist::FiniteDist;
use hedg_separation::{d_separated, SepQuery};
use hedg_transform::acyclify;

use crate::report::Accum;
use crate::{MarkovError, SepCriterion};

/// Hard cap for the checks that enumerate singleton pairs against all
/// conditioning sets; beyond this the quantification is refused.
pub const GLOBAL_NODE_LIMIT: usize = 12;

/// Hard cap for the checks that additionally enumerate subsets of the node
/// set (ancestral sets, marginalization targets, local statements).
pub const SUBSET_NODE_LIMIT: usize = 8;

pub(crate) fn ensure_size(g: &Hedg, limit: usize) -> Result<(), MarkovError> {
    let nodes = g.nodes().len();
    if nodes > limit {
        return Err(MarkovError::SizeLimit { nodes, limit });
    }
    Ok(())
}

/// Iterates the subsets of `pool` as node sets (the empty set included).
pub(crate) fn subsets(pool: &[NodeId]) -> impl Iterator<Item = NodeSet> + '_ {
    assert!(pool.len() < usize::BITS as usize);
    (0..1usize << pool.len()).map(move |mask| {
        pool.iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| v.clone())
            .collect()
    })
}

/// All ancestrally closed subsets of the graph's nodes, the empty set
/// included.
pub(crate) fn ancestral_sets(g: &Hedg) -> Result<Vec<NodeSet>, MarkovError> {
    let pool: Vec<NodeId> = g.nodes().iter().cloned().collect();
    let mut out = Vec::new();
    for a in subsets(&pool) {
        if g.is_ancestral(&a)? {
            out.push(a);
        }
    }
    Ok(out)
}

/// Every separated canonical triple `({x}, {y}, Z)` with `x < y` and
/// `Z` ranging over all subsets of the remaining nodes.  By the composition
/// and decomposition rules of the separation calculus, these triples
/// determine all separated triples, so checking them suffices for the global
/// properties.
pub fn implied_separations(
    g: &Hedg,
    criterion: SepCriterion,
) -> Result<Vec<SepQuery>, MarkovError> {
    ensure_size(g, GLOBAL_NODE_LIMIT)?;
    // Sigma-separation in `g` is d-separation in its acyclification; doing
    // the rewrite once here keeps the query loop criterion-free.
    let target = match criterion {
        SepCriterion::D => g.clone(),
        SepCriterion::Sigma => acyclify(g),
    };
    let nodes: Vec<NodeId> = g.nodes().iter().cloned().collect();
    let mut out = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            let rest: Vec<NodeId> = nodes
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i && *k != j)
                .map(|(_, v)| v.clone())
                .collect();
            for z in subsets(&rest) {
                let q = SepQuery::new(
                    NodeSet::from([nodes[i].clone()]),
                    NodeSet::from([nodes[j].clone()]),
                    z,
                );
                if d_separated(&target, &q)? {
                    out.push(q);
                }
            }
        }
    }
    Ok(out)
}

/// Runs the global property: every implied separation must be a conditional
/// independence of `p` within `tol`.
pub(crate) fn check_global(
    g: &Hedg,
    p: &FiniteDist,
    criterion: SepCriterion,
    tol: f64,
    acc: &mut Accum,
) -> Result<(), MarkovError> {
    for q in implied_separations(g, criterion)? {
        acc.require_ci(p, &q.x, &q.y, &q.z, "", tol)?;
    }
    Ok(())
}
