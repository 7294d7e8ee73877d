use std::collections::BTreeSet;

use hedg_core::{HedgError, NodeId, NodeSet};

/// An undirected graph without self-loops. Edge pairs are stored with the
/// smaller label first, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UGraph {
    nodes: NodeSet,
    uedges: BTreeSet<(NodeId, NodeId)>,
}

impl UGraph {
    pub fn new(
        nodes: NodeSet,
        uedges: impl IntoIterator<Item = (NodeId, NodeId)>,
    ) -> Result<Self, HedgError> {
        let mut normalized = BTreeSet::new();
        for (a, b) in uedges {
            for end in [&a, &b] {
                if !nodes.contains(end) {
                    return Err(HedgError::UnknownNode(end.as_str().to_owned()));
                }
            }
            match a.cmp(&b) {
                std::cmp::Ordering::Less => normalized.insert((a, b)),
                std::cmp::Ordering::Greater => normalized.insert((b, a)),
                std::cmp::Ordering::Equal => {
                    return Err(HedgError::UndirectedSelfLoop(a.as_str().to_owned()))
                }
            };
        }
        Ok(UGraph {
            nodes,
            uedges: normalized,
        })
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn uedges(&self) -> &BTreeSet<(NodeId, NodeId)> {
        &self.uedges
    }

    pub fn has_uedge(&self, v: &NodeId, w: &NodeId) -> bool {
        if v == w {
            return false;
        }
        let key = if v < w {
            (v.clone(), w.clone())
        } else {
            (w.clone(), v.clone())
        };
        self.uedges.contains(&key)
    }

    pub fn neighbors(&self, v: &NodeId) -> Result<NodeSet, HedgError> {
        if !self.nodes.contains(v) {
            return Err(HedgError::UnknownNode(v.as_str().to_owned()));
        }
        Ok(self
            .uedges
            .iter()
            .filter_map(|(a, b)| {
                if a == v {
                    Some(b.clone())
                } else if b == v {
                    Some(a.clone())
                } else {
                    None
                }
            })
            .collect())
    }

    /// True iff every two distinct members of `s` are adjacent.
    pub fn is_complete_on(&self, s: &NodeSet) -> Result<bool, HedgError> {
        for v in s {
            if !self.nodes.contains(v) {
                return Err(HedgError::UnknownNode(v.as_str().to_owned()));
            }
        }
        for v in s {
            for w in s {
                if v < w && !self.has_uedge(v, w) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Removes the given nodes (and their incident edges). Unknown labels in
    /// `z` are ignored, which makes the common "delete the conditioning set"
    /// step robust against z-nodes outside the subgraph at hand.
    pub fn without_nodes(&self, z: &NodeSet) -> UGraph {
        let nodes: NodeSet = self.nodes.difference(z).cloned().collect();
        let uedges = self
            .uedges
            .iter()
            .filter(|(a, b)| nodes.contains(a) && nodes.contains(b))
            .cloned()
            .collect();
        UGraph { nodes, uedges }
    }

    /// All nodes connected to `starts` (inclusive) by a path.
    pub fn reachable_from(&self, starts: &NodeSet) -> Result<NodeSet, HedgError> {
        for v in starts {
            if !self.nodes.contains(v) {
                return Err(HedgError::UnknownNode(v.as_str().to_owned()));
            }
        }
        let mut reached = starts.clone();
        let mut frontier: Vec<NodeId> = starts.iter().cloned().collect();
        while let Some(v) = frontier.pop() {
            for w in self.neighbors(&v)? {
                if reached.insert(w.clone()) {
                    frontier.push(w);
                }
            }
        }
        Ok(reached)
    }

    /// All maximal cliques, via Bron–Kerbosch with pivoting. Deterministic
    /// output order (sorted).
    pub fn maximal_cliques(&self) -> Vec<NodeSet> {
        let order: Vec<&NodeId> = self.nodes.iter().collect();
        let k = order.len();
        if k == 0 {
            return Vec::new();
        }
        assert!(k <= 64, "clique enumeration supports at most 64 nodes");
        let idx = |v: &NodeId| order.binary_search(&v).expect("member node");
        let mut adj = vec![0u64; k];
        for (a, b) in &self.uedges {
            let (i, j) = (idx(a), idx(b));
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
        let mut found: Vec<u64> = Vec::new();
        bron_kerbosch(0, (1u64 << k) - 1, 0, &adj, &mut found);
        let mut cliques: Vec<NodeSet> = found
            .into_iter()
            .map(|mask| {
                (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| order[i].clone())
                    .collect()
            })
            .collect();
        cliques.sort();
        cliques
    }
}

fn bron_kerbosch(r: u64, mut p: u64, mut x: u64, adj: &[u64], out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot on the candidate with the most neighbors in p.
    let pivot = {
        let mut best = usize::MAX;
        let mut best_count = u32::MAX;
        let mut pool = p | x;
        while pool != 0 {
            let i = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            let uncovered = (p & !adj[i]).count_ones();
            if best == usize::MAX || uncovered < best_count {
                best = i;
                best_count = uncovered;
            }
        }
        best
    };
    let mut candidates = p & !adj[pivot];
    while candidates != 0 {
        let i = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let bit = 1u64 << i;
        bron_kerbosch(r | bit, p & adj[i], x & adj[i], adj, out);
        p &= !bit;
        x |= bit;
    }
}

/// Marginalizes an undirected graph onto the complement of `w`: survivors are
/// joined exactly when some path connects them whose interior nodes all lie in
/// `w`.
pub fn u_marginalize(ug: &UGraph, w: &NodeSet) -> Result<UGraph, HedgError> {
    for v in w {
        if !ug.nodes().contains(v) {
            return Err(HedgError::UnknownNode(v.as_str().to_owned()));
        }
    }
    let survivors: NodeSet = ug.nodes().difference(w).cloned().collect();
    let mut uedges = BTreeSet::new();
    for a in &survivors {
        // BFS from `a` where interior steps may only pass through `w`.
        let mut seen: NodeSet = NodeSet::from([a.clone()]);
        let mut frontier = vec![a.clone()];
        let mut adjacent: NodeSet = NodeSet::new();
        while let Some(v) = frontier.pop() {
            for nb in ug.neighbors(&v)? {
                if seen.contains(&nb) {
                    continue;
                }
                seen.insert(nb.clone());
                if survivors.contains(&nb) {
                    adjacent.insert(nb);
                } else {
                    frontier.push(nb);
                }
            }
        }
        for b in adjacent {
            if *a != b {
                let key = if *a < b {
                    (a.clone(), b)
                } else {
                    (b, a.clone())
                };
                uedges.insert(key);
            }
        }
    }
    UGraph::new(survivors, uedges)
}
