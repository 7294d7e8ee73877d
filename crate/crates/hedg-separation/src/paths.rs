//! Exhaustive simple-path search shared by the path-based oracles.
//!
//! Paths are node-simple; the same node sequence traversed with different
//! link kinds counts as a different path, because blocking depends on where
//! the arrowheads sit. The search prunes a branch as soon as its newest
//! interior node is blocked, and stops at the first open path.

use crate::{LinkKind, SepError, SepQuery, SepWitness};
use hedg_core::{Hedg, NodeId};

pub(crate) const PATH_NODE_LIMIT: usize = 14;

/// Decides whether an interior node blocks a path. Arguments: previous node,
/// link into the node, the node itself, link out of the node, next node.
pub(crate) trait BlockRule {
    fn blocked(
        &self,
        prev: &NodeId,
        incoming: LinkKind,
        node: &NodeId,
        outgoing: LinkKind,
        next: &NodeId,
    ) -> bool;
}

/// Searches for a path from `x` to `y` that is open under `rule`, honoring
/// the endnode rule (an endnode in `z` always blocks).
pub(crate) fn find_open_path(
    g: &Hedg,
    q: &SepQuery,
    rule: &dyn BlockRule,
) -> Result<Option<SepWitness>, SepError> {
    q.validate(g)?;
    if g.nodes().len() > PATH_NODE_LIMIT {
        return Err(SepError::SizeLimit {
            nodes: g.nodes().len(),
            limit: PATH_NODE_LIMIT,
        });
    }

    // Single-node paths: a node lying in both X and Y.
    for v in q.x.intersection(&q.y) {
        if !q.z.contains(v) {
            return Ok(Some(SepWitness {
                nodes: vec![v.clone()],
                links: vec![],
            }));
        }
    }

    let nodes: Vec<&NodeId> = g.nodes().iter().collect();
    let index = |v: &NodeId| nodes.binary_search_by(|p| p.as_str().cmp(v.as_str())).unwrap();
    let n = nodes.len();
    let mut adj: Vec<Vec<(usize, LinkKind)>> = vec![Vec::new(); n];
    for (i, v) in nodes.iter().enumerate() {
        for (j, w) in nodes.iter().enumerate() {
            if i == j {
                continue;
            }
            if g.has_edge(v, w) {
                adj[i].push((j, LinkKind::Forward));
            }
            if g.has_edge(w, v) {
                adj[i].push((j, LinkKind::Backward));
            }
            if g.bidirected(v, w) {
                adj[i].push((j, LinkKind::Bidirected));
            }
        }
    }

    let mut state = Search {
        nodes: &nodes,
        adj: &adj,
        q,
        rule,
        path: Vec::new(),
        links: Vec::new(),
        on_path: vec![false; n],
    };
    for x in q.x.difference(&q.z) {
        let s = index(x);
        state.path.push(s);
        state.on_path[s] = true;
        if let Some(w) = state.dfs() {
            return Ok(Some(w));
        }
        state.on_path[s] = false;
        state.path.pop();
    }
    Ok(None)
}

struct Search<'a> {
    nodes: &'a [&'a NodeId],
    adj: &'a [Vec<(usize, LinkKind)>],
    q: &'a SepQuery,
    rule: &'a dyn BlockRule,
    path: Vec<usize>,
    links: Vec<LinkKind>,
    on_path: Vec<bool>,
}

impl Search<'_> {
    fn dfs(&mut self) -> Option<SepWitness> {
        let v = *self.path.last().unwrap();
        for k in 0..self.adj[v].len() {
            let (w, kind) = self.adj[v][k];
            if self.on_path[w] {
                continue;
            }
            // The step v→w fixes both links at v; apply the interior rule.
            if let Some(&incoming) = self.links.last() {
                let prev = self.nodes[self.path[self.path.len() - 2]];
                if self
                    .rule
                    .blocked(prev, incoming, self.nodes[v], kind, self.nodes[w])
                {
                    continue;
                }
            }
            self.path.push(w);
            self.links.push(kind);
            self.on_path[w] = true;
            let target = self.nodes[w];
            if self.q.y.contains(target) && !self.q.z.contains(target) {
                return Some(self.witness());
            }
            if let Some(found) = self.dfs() {
                return Some(found);
            }
            self.on_path[w] = false;
            self.links.pop();
            self.path.pop();
        }
        None
    }

    fn witness(&self) -> SepWitness {
        SepWitness {
            nodes: self.path.iter().map(|&i| self.nodes[i].clone()).collect(),
            links: self.links.clone(),
        }
    }
}
