use std::collections::BTreeSet;

use hedg_core::{Hedg, HedgError, NodeId, NodeSet};
use hedg_transform::{marginalize, moralize, UGraph};

use crate::downsets::SccPoset;
use crate::{OrderError, OrderReport, OrderViolation, TotalOrder};

/// How many ancestrally closed subsets the perfect-elimination check will
/// enumerate per node before giving up with [`OrderError::SizeLimit`].
pub const ANCESTRAL_SET_LIMIT: usize = 1 << 16;

/// The predecessor graph of `v`: the marginalization of `g` onto the nodes
/// that are at most `v` in the order.  For the last node this is `g` itself;
/// for earlier nodes the tail of the order is marginalized away, which can
/// introduce new edges, self-loops, and hyperedges.
pub fn pred_hedg(g: &Hedg, ord: &TotalOrder, v: &NodeId) -> Result<Hedg, OrderError> {
    ord.validate_for(g)?;
    if ord.position(v).is_none() {
        return Err(HedgError::UnknownNode(v.as_str().to_owned()).into());
    }
    Ok(marginalize(g, &ord.strictly_after(v))?)
}

/// Classifies `ord` against `g`, reporting which of the five order kinds hold
/// and a counterexample for each kind that fails.  Uses
/// [`ANCESTRAL_SET_LIMIT`] for the perfect-elimination enumeration.
pub fn classify_order(g: &Hedg, ord: &TotalOrder) -> Result<OrderReport, OrderError> {
    classify_order_with_limit(g, ord, ANCESTRAL_SET_LIMIT)
}

/// Like [`classify_order`], but with an explicit bound on how many ancestrally
/// closed subsets may be enumerated per node.
pub fn classify_order_with_limit(
    g: &Hedg,
    ord: &TotalOrder,
    limit: usize,
) -> Result<OrderReport, OrderError> {
    ord.validate_for(g)?;

    let pos = |v: &NodeId| ord.position(v).expect("order covers the graph");

    // Topological: every edge points forward, which a self-loop never does.
    let topological_witness = g
        .dedges()
        .iter()
        .find(|(parent, child)| pos(parent) >= pos(child))
        .map(|(parent, child)| OrderViolation::ParentOutOfPlace {
            child: child.clone(),
            parent: parent.clone(),
        });

    // Pseudo-topological: strict ancestors from outside the strongly
    // connected set come first.
    let mut pseudo_topological_witness = None;
    'pseudo: for v in ord.iter() {
        let singleton: NodeSet = [v.clone()].into_iter().collect();
        let anc = g.ancestors(&singleton)?;
        let sc = g.scc(v)?;
        for w in anc.difference(&sc) {
            if pos(w) >= pos(v) {
                pseudo_topological_witness = Some(OrderViolation::AncestorOutOfPlace {
                    node: v.clone(),
                    ancestor: w.clone(),
                });
                break 'pseudo;
            }
        }
    }

    // Assembling: each strongly connected component is a contiguous run.
    let mut assembling_witness = None;
    for block in g.scc_partition() {
        let lo = block.iter().map(&pos).min().expect("components are nonempty");
        let hi = block.iter().map(&pos).max().expect("components are nonempty");
        if hi - lo + 1 == block.len() {
            continue;
        }
        let intruder = ord.nodes()[lo..=hi]
            .iter()
            .find(|w| !block.contains(*w))
            .expect("a gap in the run means an intruder");
        assembling_witness = Some(OrderViolation::InterleavedComponent {
            first: ord.nodes()[lo].clone(),
            intruder: intruder.clone(),
            last: ord.nodes()[hi].clone(),
        });
        break;
    }

    // Perfect elimination: walk the order back to front, peeling one node off
    // the predecessor graph per step, and test every ancestrally closed
    // subset that contains the current node.
    let mut perfect_elimination_witness = None;
    let mut current = g.clone();
    for (idx, v) in ord.nodes().iter().enumerate().rev() {
        if let Some((ancestral, unlinked)) = incomplete_ancestral_witness(&current, v, limit)? {
            perfect_elimination_witness = Some(OrderViolation::IncompleteNeighbourhood {
                node: v.clone(),
                ancestral,
                unlinked,
            });
            break;
        }
        if idx > 0 {
            let peel: NodeSet = [v.clone()].into_iter().collect();
            current = marginalize(&current, &peel)?;
        }
    }

    let topological = topological_witness.is_none();
    let pseudo_topological = pseudo_topological_witness.is_none();
    let assembling = assembling_witness.is_none();
    let perfect_elimination = perfect_elimination_witness.is_none();
    Ok(OrderReport {
        topological,
        pseudo_topological,
        assembling,
        perfect_elimination,
        quasi_topological: pseudo_topological && perfect_elimination,
        topological_witness,
        pseudo_topological_witness,
        assembling_witness,
        perfect_elimination_witness,
    })
}

/// Two neighbours of `v` in `moral` that are not linked to each other, if any.
pub(crate) fn unlinked_neighbour_pair(
    moral: &UGraph,
    v: &NodeId,
) -> Result<Option<(NodeId, NodeId)>, HedgError> {
    let nbrs: Vec<NodeId> = moral.neighbors(v)?.into_iter().collect();
    for (i, a) in nbrs.iter().enumerate() {
        for b in &nbrs[i + 1..] {
            if !moral.has_uedge(a, b) {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

/// Searches the ancestrally closed subsets of `p` containing `v` for one
/// whose moralization leaves the neighbourhood of `v` incomplete.  Returns
/// the first offending subset together with an unlinked neighbour pair.
pub(crate) fn incomplete_ancestral_witness(
    p: &Hedg,
    v: &NodeId,
    limit: usize,
) -> Result<Option<(NodeSet, (NodeId, NodeId))>, OrderError> {
    let poset = SccPoset::of(p);
    let forced = poset.ancestor_blocks(v);
    let mut found = None;
    poset.for_each_downset(&forced, limit, &mut |set| {
        let sub = p.induced_subhedg(set)?;
        let moral = moralize(&sub);
        match unlinked_neighbour_pair(&moral, v)? {
            Some(pair) => {
                found = Some((set.clone(), pair));
                Ok(false)
            }
            None => Ok(true),
        }
    })?;
    Ok(found)
}

/// All nodes of `p` that admit some ancestrally closed subset of `p` (one
/// containing the node) whose moralization leaves their neighbourhood
/// incomplete.  A node absent from the result can safely end an order whose
/// predecessor graph is `p`.
pub(crate) fn nodes_failing_elimination(p: &Hedg, limit: usize) -> Result<NodeSet, OrderError> {
    let poset = SccPoset::of(p);
    let mut bad = NodeSet::new();
    poset.for_each_downset(&BTreeSet::new(), limit, &mut |set| {
        if set.is_empty() {
            return Ok(true);
        }
        let sub = p.induced_subhedg(set)?;
        let moral = moralize(&sub);
        for v in set {
            if !bad.contains(v) && unlinked_neighbour_pair(&moral, v)?.is_some() {
                bad.insert(v.clone());
            }
        }
        Ok(bad.len() < p.nodes().len())
    })?;
    Ok(bad)
}
