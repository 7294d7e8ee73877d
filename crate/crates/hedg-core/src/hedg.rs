use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::HedgError;
use crate::node::{NodeId, NodeSet};
use crate::scc::tarjan_scc;

/// A directed graph with hyperedges.
///
/// Directed edges may contain self-loops but never multi-edges. The hyperedge
/// complex is represented by its inclusion-maximal elements; the constructor
/// canonicalizes whatever it is given by adding all singletons and dropping
/// non-maximal and empty sets. Consequently the stored set always covers every
/// node, and structural equality of two graphs is equality of their canonical
/// forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hedg {
    nodes: NodeSet,
    dedges: BTreeSet<(NodeId, NodeId)>,
    hyperedges: BTreeSet<NodeSet>,
}

/// Classification flags for the standard graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphClass {
    /// Acyclic, no self-loops, and only singleton hyperedges.
    pub is_dag: bool,
    /// Every strongly connected component is a singleton and there are no
    /// self-loops; hyperedges of any size are allowed.
    pub is_mdag: bool,
    /// Every hyperedge has at most two members (a directed mixed graph).
    pub is_dmg: bool,
    /// Both a DMG and an mDAG.
    pub is_admg: bool,
}

impl Hedg {
    /// Builds a graph from parts, validating membership and canonicalizing the
    /// hyperedge set to its inclusion-maximal elements (singletons included).
    pub fn new(
        nodes: NodeSet,
        dedges: BTreeSet<(NodeId, NodeId)>,
        hyperedges: Vec<NodeSet>,
    ) -> Result<Self, HedgError> {
        for (v, w) in &dedges {
            for end in [v, w] {
                if !nodes.contains(end) {
                    return Err(HedgError::UnknownNode(end.as_str().to_owned()));
                }
            }
        }
        for f in &hyperedges {
            for v in f {
                if !nodes.contains(v) {
                    return Err(HedgError::UnknownNode(v.as_str().to_owned()));
                }
            }
        }

        let mut candidates: BTreeSet<NodeSet> = hyperedges
            .into_iter()
            .filter(|f| !f.is_empty())
            .collect();
        for v in &nodes {
            candidates.insert(BTreeSet::from([v.clone()]));
        }
        let maximal: BTreeSet<NodeSet> = candidates
            .iter()
            .filter(|f| {
                !candidates
                    .iter()
                    .any(|g| g.len() > f.len() && f.is_subset(g))
            })
            .cloned()
            .collect();

        Ok(Hedg {
            nodes,
            dedges,
            hyperedges: maximal,
        })
    }

    /// Convenience constructor for a graph with only singleton hyperedges.
    pub fn trivial(nodes: NodeSet, dedges: BTreeSet<(NodeId, NodeId)>) -> Result<Self, HedgError> {
        Hedg::new(nodes, dedges, Vec::new())
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn dedges(&self) -> &BTreeSet<(NodeId, NodeId)> {
        &self.dedges
    }

    /// The stored inclusion-maximal hyperedges, maximal singletons included.
    pub fn hyperedges(&self) -> &BTreeSet<NodeSet> {
        &self.hyperedges
    }

    /// The stored hyperedges with at least two members.
    pub fn multi_hyperedges(&self) -> impl Iterator<Item = &NodeSet> {
        self.hyperedges.iter().filter(|f| f.len() >= 2)
    }

    pub fn has_edge(&self, v: &NodeId, w: &NodeId) -> bool {
        self.dedges.contains(&(v.clone(), w.clone()))
    }

    pub fn has_self_loop(&self, v: &NodeId) -> bool {
        self.has_edge(v, v)
    }

    /// True when some hyperedge contains both nodes; the bidirected adjacency
    /// `v <-> w`. Never true for `v == w`.
    pub fn bidirected(&self, v: &NodeId, w: &NodeId) -> bool {
        v != w
            && self
                .hyperedges
                .iter()
                .any(|f| f.contains(v) && f.contains(w))
    }

    fn check_node(&self, v: &NodeId) -> Result<(), HedgError> {
        if self.nodes.contains(v) {
            Ok(())
        } else {
            Err(HedgError::UnknownNode(v.as_str().to_owned()))
        }
    }

    fn check_nodes(&self, s: &NodeSet) -> Result<(), HedgError> {
        match s.iter().find(|v| !self.nodes.contains(*v)) {
            Some(v) => Err(HedgError::UnknownNode(v.as_str().to_owned())),
            None => Ok(()),
        }
    }

    /// Union of the parent sets of the given nodes.
    pub fn parents(&self, s: &NodeSet) -> Result<NodeSet, HedgError> {
        self.check_nodes(s)?;
        Ok(self
            .dedges
            .iter()
            .filter(|(_, w)| s.contains(w))
            .map(|(v, _)| v.clone())
            .collect())
    }

    /// Union of the child sets of the given nodes.
    pub fn children(&self, s: &NodeSet) -> Result<NodeSet, HedgError> {
        self.check_nodes(s)?;
        Ok(self
            .dedges
            .iter()
            .filter(|(v, _)| s.contains(v))
            .map(|(_, w)| w.clone())
            .collect())
    }

    /// All nodes with a directed path into `s`; reflexive, so `s` itself is
    /// always included.
    pub fn ancestors(&self, s: &NodeSet) -> Result<NodeSet, HedgError> {
        self.check_nodes(s)?;
        Ok(self.closure(s, |edge| (edge.1.clone(), edge.0.clone())))
    }

    /// All nodes reachable from `s` by a directed path; reflexive.
    pub fn descendants(&self, s: &NodeSet) -> Result<NodeSet, HedgError> {
        self.check_nodes(s)?;
        Ok(self.closure(s, |edge| (edge.0.clone(), edge.1.clone())))
    }

    /// Complement of the descendant set.
    pub fn nondescendants(&self, s: &NodeSet) -> Result<NodeSet, HedgError> {
        let desc = self.descendants(s)?;
        Ok(self.nodes.difference(&desc).cloned().collect())
    }

    fn closure(
        &self,
        seed: &NodeSet,
        orient: impl Fn(&(NodeId, NodeId)) -> (NodeId, NodeId),
    ) -> NodeSet {
        let mut reached: NodeSet = seed.clone();
        let mut frontier: Vec<NodeId> = seed.iter().cloned().collect();
        let mut adj: BTreeMap<&NodeId, Vec<&NodeId>> = BTreeMap::new();
        let oriented: Vec<(NodeId, NodeId)> = self.dedges.iter().map(orient).collect();
        for (from, to) in &oriented {
            adj.entry(from).or_default().push(to);
        }
        while let Some(v) = frontier.pop() {
            if let Some(nexts) = adj.get(&v) {
                for &w in nexts {
                    if reached.insert(w.clone()) {
                        frontier.push(w.clone());
                    }
                }
            }
        }
        reached
    }

    /// The strongly connected component of `v`: ancestors intersected with
    /// descendants. Singleton for any node outside every directed cycle.
    pub fn scc(&self, v: &NodeId) -> Result<NodeSet, HedgError> {
        self.check_node(v)?;
        let single = NodeSet::from([v.clone()]);
        let anc = self.ancestors(&single)?;
        let desc = self.descendants(&single)?;
        Ok(anc.intersection(&desc).cloned().collect())
    }

    /// All strongly connected components, ordered by smallest member label.
    pub fn scc_partition(&self) -> Vec<NodeSet> {
        let order: Vec<&NodeId> = self.nodes.iter().collect();
        let pos: BTreeMap<&NodeId, usize> = order.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut adj = vec![Vec::new(); order.len()];
        for (v, w) in &self.dedges {
            adj[pos[v]].push(pos[w]);
        }
        let mut blocks: Vec<NodeSet> = tarjan_scc(&adj)
            .into_iter()
            .map(|c| c.into_iter().map(|i| order[i].clone()).collect())
            .collect();
        blocks.sort_by(|a, b| a.iter().next().cmp(&b.iter().next()));
        blocks
    }

    /// Maps each node to the index of its block in `scc_partition()` order.
    pub fn scc_index(&self) -> BTreeMap<NodeId, usize> {
        let mut map = BTreeMap::new();
        for (i, block) in self.scc_partition().iter().enumerate() {
            for v in block {
                map.insert(v.clone(), i);
            }
        }
        map
    }

    /// The bidirected-connected component containing `v`.
    pub fn district(&self, v: &NodeId) -> Result<NodeSet, HedgError> {
        self.check_node(v)?;
        let mut seen = NodeSet::from([v.clone()]);
        let mut frontier = vec![v.clone()];
        while let Some(u) = frontier.pop() {
            for w in &self.nodes {
                if !seen.contains(w) && self.bidirected(&u, w) {
                    seen.insert(w.clone());
                    frontier.push(w.clone());
                }
            }
        }
        Ok(seen)
    }

    /// All districts, ordered by smallest member label.
    pub fn districts(&self) -> Vec<NodeSet> {
        let mut remaining = self.nodes.clone();
        let mut out = Vec::new();
        while let Some(v) = remaining.iter().next().cloned() {
            let d = self.district(&v).expect("district of own node");
            for w in &d {
                remaining.remove(w);
            }
            out.push(d);
        }
        out
    }

    /// Restriction to `a`: edges within `a`, hyperedges intersected with `a`
    /// and re-maximalized.
    pub fn induced_subhedg(&self, a: &NodeSet) -> Result<Hedg, HedgError> {
        self.check_nodes(a)?;
        let dedges = self
            .dedges
            .iter()
            .filter(|(v, w)| a.contains(v) && a.contains(w))
            .cloned()
            .collect();
        let hyperedges = self
            .hyperedges
            .iter()
            .map(|f| f.intersection(a).cloned().collect())
            .collect();
        Hedg::new(a.clone(), dedges, hyperedges)
    }

    /// The induced sub-HEDG on the ancestor set of `s` — the smallest
    /// ancestral subgraph containing `s`.
    pub fn ancestral_closure(&self, s: &NodeSet) -> Result<Hedg, HedgError> {
        let anc = self.ancestors(s)?;
        self.induced_subhedg(&anc)
    }

    /// True iff `a` is closed under taking ancestors.
    pub fn is_ancestral(&self, a: &NodeSet) -> Result<bool, HedgError> {
        Ok(self.ancestors(a)? == *a)
    }

    /// Every node set that is strongly connected in its induced subgraph.
    /// Always contains all singletons and all SCCs; each loop lies inside a
    /// single SCC, so the enumeration runs per component.
    pub fn loop_set(&self) -> Vec<NodeSet> {
        let mut loops: BTreeSet<NodeSet> = BTreeSet::new();
        for v in &self.nodes {
            loops.insert(NodeSet::from([v.clone()]));
        }
        for block in self.scc_partition() {
            if block.len() < 2 {
                continue;
            }
            let members: Vec<&NodeId> = block.iter().collect();
            let k = members.len();
            let idx: BTreeMap<&NodeId, usize> =
                members.iter().enumerate().map(|(i, v)| (*v, i)).collect();
            let mut adj = vec![0u64; k];
            let mut radj = vec![0u64; k];
            for (v, w) in &self.dedges {
                if let (Some(&i), Some(&j)) = (idx.get(v), idx.get(w)) {
                    adj[i] |= 1 << j;
                    radj[j] |= 1 << i;
                }
            }
            for mask in 1u64..(1 << k) {
                if mask.count_ones() < 2 {
                    continue;
                }
                if strongly_connected_mask(mask, &adj) && strongly_connected_mask(mask, &radj) {
                    loops.insert(
                        (0..k)
                            .filter(|i| mask & (1 << i) != 0)
                            .map(|i| members[i].clone())
                            .collect(),
                    );
                }
            }
        }
        loops.into_iter().collect()
    }

    /// Family-membership flags.
    pub fn classify(&self) -> GraphClass {
        let singleton_sccs = self.scc_partition().iter().all(|b| b.len() == 1);
        let no_self_loops = !self.dedges.iter().any(|(v, w)| v == w);
        let trivial_h = self.multi_hyperedges().next().is_none();
        let is_mdag = singleton_sccs && no_self_loops;
        let is_dmg = self.hyperedges.iter().all(|f| f.len() <= 2);
        GraphClass {
            is_dag: is_mdag && trivial_h,
            is_mdag,
            is_dmg,
            is_admg: is_dmg && is_mdag,
        }
    }
}

/// Checks that the subset encoded by `mask` is reachable from its lowest
/// member inside the subset, following the bitmask adjacency `adj`.
fn strongly_connected_mask(mask: u64, adj: &[u64]) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut reached = 1u64 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let i = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[i] & mask & !reached;
        }
        reached |= next;
        frontier = next;
    }
    reached == mask
}
