use hedg_core::{Hedg, NodeId, NodeSet};
use hedg_transform::{marginalize, moralize};

use crate::classify::{nodes_failing_elimination, unlinked_neighbour_pair, ANCESTRAL_SET_LIMIT};
use crate::downsets::SccPoset;
use crate::{OrderError, TotalOrder};

/// Beyond this many nodes the exact perfect-elimination search refuses to run.
pub const SEARCH_NODE_LIMIT: usize = 9;

/// Builds an assembling pseudo-topological order, which every graph has: the
/// strongly connected components are emptied one at a time, a component only
/// becoming ready once all components feeding into it are done.  Ready
/// components are taken smallest node label first, and each component's nodes
/// are emitted in label order.
pub fn find_pseudo_topological(g: &Hedg) -> TotalOrder {
    let poset = SccPoset::of(g);
    let seq: Vec<NodeId> = poset
        .blocks
        .iter()
        .flat_map(|block| block.iter().cloned())
        .collect();
    TotalOrder::new(seq).expect("components partition the nodes")
}

/// Searches for a perfect elimination order of `g`.
///
/// Two cheap sufficient conditions are tried first, each of which certifies
/// the assembling pseudo-topological order from [`find_pseudo_topological`]:
///
/// * every strongly connected component lies inside a single district of its
///   ancestral closure (true, for instance, whenever each component is
///   covered by a hyperedge);
/// * the graph has no proper hyperedges and, for every node `v` of the
///   pseudo-topological order, the moralized ancestral closure of `v` inside
///   the predecessor graph of `v` leaves the neighbourhood of `v` complete.
///
/// Otherwise an exact dynamic program over prefix node sets decides
/// existence, exploiting that the elimination condition at a node depends
/// only on the *set* of its predecessors, not on their relative order.  The
/// search is exact up to [`SEARCH_NODE_LIMIT`] nodes and errors with
/// [`OrderError::SizeLimit`] beyond that; ties are broken by node label.
pub fn find_perfect_elimination(g: &Hedg) -> Result<Option<TotalOrder>, OrderError> {
    if components_stay_in_one_district(g)? {
        return Ok(Some(find_pseudo_topological(g)));
    }
    if g.multi_hyperedges().next().is_none() {
        let ord = find_pseudo_topological(g);
        if ancestral_closures_stay_complete(g, &ord)? {
            return Ok(Some(ord));
        }
    }
    search_by_prefix_sets(g)
}

/// Does every strongly connected component lie inside one district of the
/// subgraph induced by its ancestors?
fn components_stay_in_one_district(g: &Hedg) -> Result<bool, OrderError> {
    for block in g.scc_partition() {
        let anc = g.ancestors(&block)?;
        let sub = g.induced_subhedg(&anc)?;
        let seed = block.first().expect("components are nonempty");
        if !block.is_subset(&sub.district(seed)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The hyperedge-free certificate: walking `ord` back to front, check that in
/// each predecessor graph the moralized ancestral closure of the current node
/// leaves its neighbourhood complete.  Sound only together with `ord` being
/// pseudo-topological and `g` having no proper hyperedges.
fn ancestral_closures_stay_complete(g: &Hedg, ord: &TotalOrder) -> Result<bool, OrderError> {
    let mut current = g.clone();
    for (idx, v) in ord.nodes().iter().enumerate().rev() {
        let singleton: NodeSet = [v.clone()].into_iter().collect();
        let closure = current.ancestral_closure(&singleton)?;
        let moral = moralize(&closure);
        if unlinked_neighbour_pair(&moral, v)?.is_some() {
            return Ok(false);
        }
        if idx > 0 {
            current = marginalize(&current, &singleton)?;
        }
    }
    Ok(true)
}

/// Exact decision by dynamic programming over prefix node sets: a set `S` is
/// feasible when some `v ∈ S` can be last among `S` — meaning no ancestrally
/// closed subset of the marginalization of `g` onto `S` gives `v` an
/// incomplete moralized neighbourhood — with `S ∖ {v}` feasible in turn.
fn search_by_prefix_sets(g: &Hedg) -> Result<Option<TotalOrder>, OrderError> {
    let nodes: Vec<NodeId> = g.nodes().iter().cloned().collect();
    let n = nodes.len();
    if n > SEARCH_NODE_LIMIT {
        return Err(OrderError::SizeLimit {
            size: n,
            limit: SEARCH_NODE_LIMIT,
        });
    }
    let full: usize = (1 << n) - 1;
    let mut feasible = vec![false; 1 << n];
    let mut last_pick = vec![usize::MAX; 1 << n];
    feasible[0] = true;
    for mask in 1..=full {
        let candidates: Vec<usize> = (0..n)
            .filter(|i| mask & (1 << i) != 0 && feasible[mask & !(1 << i)])
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let dropped: NodeSet = (0..n)
            .filter(|i| mask & (1 << i) == 0)
            .map(|i| nodes[i].clone())
            .collect();
        let pred = marginalize(g, &dropped)?;
        let bad = nodes_failing_elimination(&pred, ANCESTRAL_SET_LIMIT)?;
        for i in candidates {
            if !bad.contains(&nodes[i]) {
                feasible[mask] = true;
                last_pick[mask] = i;
                break;
            }
        }
    }
    if !feasible[full] {
        return Ok(None);
    }
    let mut seq = Vec::with_capacity(n);
    let mut mask = full;
    while mask != 0 {
        let i = last_pick[mask];
        seq.push(nodes[i].clone());
        mask &= !(1 << i);
    }
    seq.reverse();
    Ok(Some(TotalOrder::new(seq).expect("picks are distinct")))
}
