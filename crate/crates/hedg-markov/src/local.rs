use hedg_core::{Hedg, NodeId, NodeSet};
use hedg_dist::FiniteDist;
use hedg_orders::TotalOrder;
use hedg_transform::{marginalize, moralize};

use crate::global::subsets;
use crate::report::{fmt_set, Accum};
use crate::MarkovError;

/// Local statements at `v`: within every ancestrally closed set `A` of
/// non-descendants and strongly-connected companions of `v`, and for every
/// part `S` of the companions marginalized away, `v` must be independent of
/// the rest given its neighborhood in the moralization.
pub(crate) fn check_dlmp(
    g: &Hedg,
    p: &FiniteDist,
    tol: f64,
    acc: &mut Accum,
) -> Result<(), MarkovError> {
    for v in g.nodes() {
        let vset = NodeSet::from([v.clone()]);
        let sc = g.scc(v)?;
        let pool: NodeSet = g
            .nondescendants(&vset)?
            .union(&sc)
            .cloned()
            .collect();
        let others: Vec<NodeId> = pool.iter().filter(|w| *w != v).cloned().collect();
        for mut a in subsets(&others) {
            a.insert(v.clone());
            if !g.is_ancestral(&a)? {
                continue;
            }
            let removable: Vec<NodeId> = sc
                .iter()
                .filter(|w| *w != v && a.contains(*w))
                .cloned()
                .collect();
            let sub = g.induced_subhedg(&a)?;
            for s in subsets(&removable) {
                let b = marginalize(&sub, &s)?;
                local_statement(&b, v, p, &format!(" [ancestral {}, removed {}]", fmt_set(&a), fmt_set(&s)), tol, acc)?;
            }
        }
    }
    Ok(())
}

/// Local statements at `v` over ancestrally closed subsets of its
/// order-predecessors.
pub(crate) fn check_olmp(
    g: &Hedg,
    p: &FiniteDist,
    ord: &TotalOrder,
    tol: f64,
    acc: &mut Accum,
) -> Result<(), MarkovError> {
    ord.validate_for(g)?;
    for v in g.nodes() {
        let pos = ord.position(v).expect("order covers the graph");
        let others: Vec<NodeId> = ord.nodes()[..=pos]
            .iter()
            .filter(|w| *w != v)
            .cloned()
            .collect();
        for mut a in subsets(&others) {
            a.insert(v.clone());
            if !g.is_ancestral(&a)? {
                continue;
            }
            let sub = g.induced_subhedg(&a)?;
            local_statement(&sub, v, p, &format!(" [ancestral {}]", fmt_set(&a)), tol, acc)?;
        }
    }
    Ok(())
}

/// The shared core: in graph `b` containing `v`, require
/// `v` independent of the non-neighbors given the moral neighborhood.
fn local_statement(
    b: &Hedg,
    v: &NodeId,
    p: &FiniteDist,
    context: &str,
    tol: f64,
    acc: &mut Accum,
) -> Result<(), MarkovError> {
    let m = moralize(b);
    let boundary = m.neighbors(v)?;
    let rest: NodeSet = b
        .nodes()
        .iter()
        .filter(|w| *w != v && !boundary.contains(*w))
        .cloned()
        .collect();
    let vset = NodeSet::from([v.clone()]);
    acc.require_ci(p, &vset, &rest, &boundary, context, tol)?;
    Ok(())
}
