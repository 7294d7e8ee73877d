use std::collections::BTreeSet;

use hedg_core::{Hedg, NodeId, NodeSet};
use hedg_dist::FiniteDist;
use hedg_separation::{u_separated, SepQuery};
use hedg_transform::{marginalize, moralize, UGraph};

use crate::global::{ancestral_sets, subsets};
use crate::report::{fmt_set, Accum};
use crate::MarkovError;

/// Which family of node subsets an undirected property quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Ground {
    /// Ancestrally closed subsets, read off as induced subgraphs.
    Ancestral,
    /// All subsets, read off as marginalizations.
    All,
}

/// The statement flavor shared by the three undirected properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Flavor {
    Global,
    Local,
    Pairwise,
}

fn grounds(g: &Hedg, ground: Ground) -> Result<Vec<NodeSet>, MarkovError> {
    match ground {
        Ground::Ancestral => ancestral_sets(g),
        Ground::All => {
            let pool: Vec<NodeId> = g.nodes().iter().cloned().collect();
            Ok(subsets(&pool).collect())
        }
    }
}

fn moral_of(g: &Hedg, w: &NodeSet, ground: Ground) -> Result<UGraph, MarkovError> {
    let sub = match ground {
        Ground::Ancestral => g.induced_subhedg(w)?,
        Ground::All => {
            let drop: NodeSet = g.nodes().iter().filter(|v| !w.contains(*v)).cloned().collect();
            marginalize(g, &drop)?
        }
    };
    Ok(moralize(&sub))
}

/// Runs one undirected Markov property: for every ground set, the global,
/// local, or pairwise statements of its moralization must be conditional
/// independencies of `p`.
pub(crate) fn check_undirected(
    g: &Hedg,
    p: &FiniteDist,
    ground: Ground,
    flavor: Flavor,
    tol: f64,
    acc: &mut Accum,
) -> Result<(), MarkovError> {
    match flavor {
        Flavor::Global => {
            // The same separated triple often appears under many ground
            // sets; deduplicate before measuring.
            let mut stmts: BTreeSet<(NodeId, NodeId, NodeSet)> = BTreeSet::new();
            for w in grounds(g, ground)? {
                if w.len() < 2 {
                    continue;
                }
                let m = moral_of(g, &w, ground)?;
                let members: Vec<NodeId> = w.iter().cloned().collect();
                for i in 0..members.len() {
                    for j in i + 1..members.len() {
                        let rest: Vec<NodeId> = members
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| *k != i && *k != j)
                            .map(|(_, v)| v.clone())
                            .collect();
                        for z in subsets(&rest) {
                            let q = SepQuery::new(
                                NodeSet::from([members[i].clone()]),
                                NodeSet::from([members[j].clone()]),
                                z.clone(),
                            );
                            if u_separated(&m, &q)? {
                                stmts.insert((members[i].clone(), members[j].clone(), z));
                            }
                        }
                    }
                }
            }
            for (x, y, z) in stmts {
                acc.require_ci(
                    p,
                    &NodeSet::from([x]),
                    &NodeSet::from([y]),
                    &z,
                    "",
                    tol,
                )?;
            }
        }
        Flavor::Local => {
            for w in grounds(g, ground)? {
                if w.len() < 2 {
                    continue;
                }
                let m = moral_of(g, &w, ground)?;
                for v in &w {
                    let boundary = m.neighbors(v)?;
                    let rest: NodeSet = w
                        .iter()
                        .filter(|u| *u != v && !boundary.contains(*u))
                        .cloned()
                        .collect();
                    acc.require_ci(
                        p,
                        &NodeSet::from([v.clone()]),
                        &rest,
                        &boundary,
                        &format!(" [within {}]", fmt_set(&w)),
                        tol,
                    )?;
                }
            }
        }
        Flavor::Pairwise => {
            for w in grounds(g, ground)? {
                if w.len() < 2 {
                    continue;
                }
                let m = moral_of(g, &w, ground)?;
                let members: Vec<NodeId> = w.iter().cloned().collect();
                for i in 0..members.len() {
                    for j in i + 1..members.len() {
                        let (v, u) = (&members[i], &members[j]);
                        if m.has_uedge(v, u) {
                            continue;
                        }
                        let z: NodeSet = w
                            .iter()
                            .filter(|t| *t != v && *t != u)
                            .cloned()
                            .collect();
                        acc.require_ci(
                            p,
                            &NodeSet::from([v.clone()]),
                            &NodeSet::from([u.clone()]),
                            &z,
                            "",
                            tol,
                        )?;
                    }
                }
            }
        }
    }
    Ok(())
}
