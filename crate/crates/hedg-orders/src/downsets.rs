use std::collections::{BTreeMap, BTreeSet};

use hedg_core::{Hedg, NodeId, NodeSet};

use crate::OrderError;

/// The strongly connected components of a graph, topologically sorted with
/// parents before children; ties between simultaneously ready components are
/// broken by their smallest node label.  The ancestrally closed node sets of
/// the graph are exactly the unions of down-closed block sets of this poset.
pub(crate) struct SccPoset {
    /// Blocks in topological order.
    pub blocks: Vec<NodeSet>,
    /// For each block, the indices of its parent blocks (always earlier).
    pub parents: Vec<BTreeSet<usize>>,
    pub block_of: BTreeMap<NodeId, usize>,
}

impl SccPoset {
    pub fn of(g: &Hedg) -> Self {
        let raw = g.scc_partition();
        let mut raw_block = BTreeMap::new();
        for (i, block) in raw.iter().enumerate() {
            for v in block {
                raw_block.insert(v.clone(), i);
            }
        }
        let mut raw_parents = vec![BTreeSet::new(); raw.len()];
        let mut raw_children = vec![BTreeSet::new(); raw.len()];
        for (a, b) in g.dedges() {
            let (pa, pb) = (raw_block[a], raw_block[b]);
            if pa != pb {
                raw_parents[pb].insert(pa);
                raw_children[pa].insert(pb);
            }
        }

        let mut indeg: Vec<usize> = raw_parents.iter().map(|p| p.len()).collect();
        let mut ready: BTreeSet<(NodeId, usize)> = indeg
            .iter()
            .enumerate()
            .filter(|(_, d)| **d == 0)
            .map(|(i, _)| (raw[i].first().expect("components are nonempty").clone(), i))
            .collect();
        let mut topo = Vec::with_capacity(raw.len());
        while let Some(entry) = ready.iter().next().cloned() {
            ready.remove(&entry);
            let i = entry.1;
            topo.push(i);
            for &c in &raw_children[i] {
                indeg[c] -= 1;
                if indeg[c] == 0 {
                    ready.insert((raw[c].first().expect("components are nonempty").clone(), c));
                }
            }
        }
        debug_assert_eq!(topo.len(), raw.len());

        let mut new_index = vec![0usize; raw.len()];
        for (new, &old) in topo.iter().enumerate() {
            new_index[old] = new;
        }
        let blocks: Vec<NodeSet> = topo.iter().map(|&old| raw[old].clone()).collect();
        let parents: Vec<BTreeSet<usize>> = topo
            .iter()
            .map(|&old| raw_parents[old].iter().map(|&p| new_index[p]).collect())
            .collect();
        let block_of = raw_block
            .into_iter()
            .map(|(v, old)| (v, new_index[old]))
            .collect();
        SccPoset {
            blocks,
            parents,
            block_of,
        }
    }

    /// The block of `v` together with all its ancestor blocks.
    pub fn ancestor_blocks(&self, v: &NodeId) -> BTreeSet<usize> {
        let mut closed = BTreeSet::new();
        let mut stack = vec![self.block_of[v]];
        while let Some(i) = stack.pop() {
            if closed.insert(i) {
                stack.extend(self.parents[i].iter().copied());
            }
        }
        closed
    }

    /// Visits every down-closed block set that contains all of `forced`
    /// (which must itself be ancestor-closed), handing the callback the union
    /// of the included blocks as a node set.  The callback returns `false` to
    /// stop early.  Fails once more than `limit` sets have been visited.
    pub fn for_each_downset(
        &self,
        forced: &BTreeSet<usize>,
        limit: usize,
        visit: &mut dyn FnMut(&NodeSet) -> Result<bool, OrderError>,
    ) -> Result<(), OrderError> {
        debug_assert!(forced
            .iter()
            .all(|&i| self.parents[i].iter().all(|p| forced.contains(p))));
        let mut walk = DownsetWalk {
            poset: self,
            forced,
            limit,
            included: vec![false; self.blocks.len()],
            count: 0,
            visit,
        };
        walk.descend(0).map(|_| ())
    }
}

struct DownsetWalk<'a> {
    poset: &'a SccPoset,
    forced: &'a BTreeSet<usize>,
    limit: usize,
    included: Vec<bool>,
    count: usize,
    visit: &'a mut dyn FnMut(&NodeSet) -> Result<bool, OrderError>,
}

impl DownsetWalk<'_> {
    /// Returns `Ok(false)` when the callback asked to stop.
    fn descend(&mut self, i: usize) -> Result<bool, OrderError> {
        if i == self.poset.blocks.len() {
            self.count += 1;
            if self.count > self.limit {
                return Err(OrderError::SizeLimit {
                    size: self.count,
                    limit: self.limit,
                });
            }
            let set: NodeSet = self
                .included
                .iter()
                .enumerate()
                .filter(|(_, inc)| **inc)
                .flat_map(|(b, _)| self.poset.blocks[b].iter().cloned())
                .collect();
            return (self.visit)(&set);
        }
        let parents_in = self.poset.parents[i].iter().all(|&p| self.included[p]);
        if self.forced.contains(&i) {
            debug_assert!(parents_in, "forced sets must be ancestor-closed");
            self.included[i] = true;
            let go_on = self.descend(i + 1)?;
            self.included[i] = false;
            return Ok(go_on);
        }
        if !self.descend(i + 1)? {
            return Ok(false);
        }
        if parents_in {
            self.included[i] = true;
            let go_on = self.descend(i + 1)?;
            self.included[i] = false;
            if !go_on {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hedg_fixtures::{graph, n};

    fn downsets_of(g: &Hedg, forced: &BTreeSet<usize>) -> Vec<NodeSet> {
        let poset = SccPoset::of(g);
        let mut out = Vec::new();
        poset
            .for_each_downset(forced, 1 << 16, &mut |set| {
                out.push(set.clone());
                Ok(true)
            })
            .unwrap();
        out
    }

    #[test]
    fn downsets_of_a_chain_are_its_prefixes() {
        let g = graph(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &[]);
        let mut sets = downsets_of(&g, &BTreeSet::new());
        sets.sort();
        let expect: Vec<NodeSet> = vec![
            NodeSet::new(),
            [n("a")].into_iter().collect(),
            [n("a"), n("b")].into_iter().collect(),
            [n("a"), n("b"), n("c")].into_iter().collect(),
        ];
        assert_eq!(sets, expect);
    }

    #[test]
    fn cycles_collapse_into_single_blocks() {
        let g = graph(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "a"), ("a", "c")],
            &[],
        );
        let poset = SccPoset::of(&g);
        assert_eq!(poset.blocks.len(), 2);
        assert_eq!(poset.blocks[0], [n("a"), n("b")].into_iter().collect());
        let sets = downsets_of(&g, &poset.ancestor_blocks(&n("c")));
        assert_eq!(sets, vec![g.nodes().clone()]);
    }

    #[test]
    fn enumeration_respects_the_size_limit() {
        let g = graph(&["a", "b", "c"], &[], &[]);
        let poset = SccPoset::of(&g);
        let err = poset
            .for_each_downset(&BTreeSet::new(), 3, &mut |_| Ok(true))
            .unwrap_err();
        assert_eq!(err, OrderError::SizeLimit { size: 4, limit: 3 });
    }
}
