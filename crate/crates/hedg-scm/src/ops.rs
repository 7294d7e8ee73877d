//! Surgery on discrete structural models: interventions that overwrite target
//! nodes with fresh noise, and marginalization that composes mechanisms
//! through removed nodes.
//!
//! Both operations rebuild the noise sources of the transformed graph by
//! bundling: each surviving source keeps its law and is attached to the first
//! stored hyperedge of the new graph that contains its (trimmed or projected)
//! hyperedge, and sources sharing a target hyperedge are combined into one
//! product source. Mechanisms are re-tabulated against the bundled layout, so
//! the result is an ordinary model of the same kind.

use std::collections::BTreeMap;

use hedg_core::{Hedg, NodeId, NodeSet};
use hedg_transform::marginalize as marginalize_graph;

use crate::discrete::{DiscreteMscm, ErrorSpace, MixedRadix, MASS_TOL};
use crate::error::ScmError;

/// Replacement distributions for a set of intervention targets.
#[derive(Debug, Clone, Default)]
pub struct InterventionSpec {
    replacements: BTreeMap<NodeId, Vec<f64>>,
}

impl InterventionSpec {
    pub fn new(replacements: BTreeMap<NodeId, Vec<f64>>) -> Self {
        InterventionSpec { replacements }
    }

    /// Forces `node` to the constant `value` out of a domain of size `card`.
    /// An out-of-range value yields a zero-mass table that `intervene`
    /// rejects.
    pub fn point(node: NodeId, value: u8, card: usize) -> Self {
        InterventionSpec::default().with_point(node, value, card)
    }

    /// Adds a point replacement to the spec.
    pub fn with_point(mut self, node: NodeId, value: u8, card: usize) -> Self {
        let mut probs = vec![0.0; card];
        if let Some(slot) = probs.get_mut(value as usize) {
            *slot = 1.0;
        }
        self.replacements.insert(node, probs);
        self
    }

    /// Adds an arbitrary replacement distribution to the spec.
    pub fn with(mut self, node: NodeId, probs: Vec<f64>) -> Self {
        self.replacements.insert(node, probs);
        self
    }

    pub fn targets(&self) -> NodeSet {
        self.replacements.keys().cloned().collect()
    }

    pub fn replacements(&self) -> &BTreeMap<NodeId, Vec<f64>> {
        &self.replacements
    }
}

/// Cuts every edge into a target, hands each target a fresh independent noise
/// source with its replacement law, and detaches the targets from all shared
/// noise. Non-target mechanisms are unchanged up to noise re-bundling.
pub fn intervene(m: &DiscreteMscm, spec: &InterventionSpec) -> Result<DiscreteMscm, ScmError> {
    let g = m.graph();
    let targets = spec.targets();
    for (v, probs) in spec.replacements() {
        if !g.nodes().contains(v) {
            return Err(ScmError::UnknownTarget(v.as_str().to_owned()));
        }
        let card = m.domain(v).expect("domains cover nodes");
        if probs.len() != card {
            return Err(ScmError::ReplacementArity {
                node: v.as_str().to_owned(),
                got: probs.len(),
                expected: card,
            });
        }
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(ScmError::ErrorTableEntry {
                edge: NodeSet::from([v.clone()]),
            });
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > MASS_TOL {
            return Err(ScmError::ErrorTableMass {
                edge: NodeSet::from([v.clone()]),
                sum,
            });
        }
    }

    let dedges = g
        .dedges()
        .iter()
        .filter(|(_, w)| !targets.contains(w))
        .cloned()
        .collect();
    let mut hyper: Vec<NodeSet> = Vec::new();
    for f in g.hyperedges() {
        let rest: NodeSet = f.difference(&targets).cloned().collect();
        if !rest.is_empty() {
            hyper.push(rest);
        }
    }
    for v in &targets {
        hyper.push(NodeSet::from([v.clone()]));
    }
    let g2 = Hedg::new(g.nodes().clone(), dedges, hyper)?;

    let stored: Vec<NodeSet> = g2.hyperedges().iter().cloned().collect();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); stored.len()];
    for (oi, sp) in m.error_spaces().iter().enumerate() {
        let rest: NodeSet = sp.edge().difference(&targets).cloned().collect();
        if rest.is_empty() {
            // All carriers are overwritten; the source's randomness is
            // replaced wholesale and the source is dropped.
            continue;
        }
        let ni = first_superset(&stored, &rest).expect("trimmed hyperedges survive maximalization");
        members[ni].push(oi);
    }

    let mut error_tables: BTreeMap<NodeSet, Vec<f64>> = BTreeMap::new();
    for (ni, f) in stored.iter().enumerate() {
        let fresh_target = f.len() == 1 && targets.contains(f.first().unwrap());
        if fresh_target {
            debug_assert!(members[ni].is_empty());
            let v = f.first().unwrap();
            error_tables.insert(f.clone(), spec.replacements()[v].clone());
        } else {
            error_tables.insert(f.clone(), bundle_probs(&members[ni], m.error_spaces()));
        }
    }

    let mut mech_tables: BTreeMap<NodeId, Vec<u8>> = BTreeMap::new();
    for v in g2.nodes() {
        if targets.contains(v) {
            let card = m.domain(v).expect("domains cover nodes");
            mech_tables.insert(v.clone(), (0..card).map(|x| x as u8).collect());
            continue;
        }
        let parents = m.parents[v].clone();
        let table = retabulate(m, v, &parents, &stored, &members, |mm, _, vals, e_config| {
            mm.mech_value(v, vals, e_config)
        });
        mech_tables.insert(v.clone(), table);
    }

    DiscreteMscm::new(g2, m.domains().clone(), error_tables, mech_tables)
}

/// Removes the nodes of `w` one at a time (ascending), composing mechanisms
/// through each removed node so the remaining nodes keep exactly their joint
/// law. The graph of the result is the latent projection of the input graph.
pub fn marginalize_mscm(m: &DiscreteMscm, w: &NodeSet) -> Result<DiscreteMscm, ScmError> {
    for v in w {
        if !m.graph().nodes().contains(v) {
            return Err(ScmError::UnknownVariable(v.as_str().to_owned()));
        }
    }
    let mut cur = m.clone();
    for u in w {
        cur = marginalize_one(&cur, u)?;
    }
    Ok(cur)
}

fn marginalize_one(m: &DiscreteMscm, u: &NodeId) -> Result<DiscreteMscm, ScmError> {
    let g = m.graph();
    let u_single = NodeSet::from([u.clone()]);
    let has_self = g.has_edge(u, u);
    let children: NodeSet = g
        .children(&u_single)?
        .into_iter()
        .filter(|c| c != u)
        .collect();
    // When u loops on itself, substituting it into a child needs the fixed
    // point of u's own equation rather than one application of its mechanism.
    let sols = if has_self {
        Some(m.derive_loop_solutions()?)
    } else {
        None
    };
    let self_table = sols
        .as_ref()
        .map(|s| s.table(&u_single).expect("singleton sets are always solved"));

    let g2 = marginalize_graph(g, &u_single)?;
    if g2.nodes().is_empty() {
        return DiscreteMscm::new(g2, BTreeMap::new(), BTreeMap::new(), BTreeMap::new());
    }

    let stored: Vec<NodeSet> = g2.hyperedges().iter().cloned().collect();
    let mut members: Vec<Vec<usize>> = vec![Vec::new(); stored.len()];
    for (oi, sp) in m.error_spaces().iter().enumerate() {
        let image: NodeSet = if sp.edge().contains(u) {
            sp.edge()
                .union(&children)
                .filter(|x| *x != u)
                .cloned()
                .collect()
        } else {
            sp.edge().clone()
        };
        // The image is empty only when u was isolated; its noise then rides
        // along unused on the first stored hyperedge.
        let ni = first_superset(&stored, &image).expect("hyperedge images survive maximalization");
        members[ni].push(oi);
    }

    let mut error_tables: BTreeMap<NodeSet, Vec<f64>> = BTreeMap::new();
    for (ni, f) in stored.iter().enumerate() {
        error_tables.insert(f.clone(), bundle_probs(&members[ni], m.error_spaces()));
    }

    let mut mech_tables: BTreeMap<NodeId, Vec<u8>> = BTreeMap::new();
    for v in g2.nodes() {
        let parents: Vec<NodeId> = g2.parents(&NodeSet::from([v.clone()]))?.into_iter().collect();
        let feeds_from_u = m.parents[v].contains(u);
        let table = retabulate(m, v, &parents, &stored, &members, |mm, vv, vals, e_config| {
            if !feeds_from_u {
                return mm.mech_value(vv, vals, e_config);
            }
            let u_val = match self_table {
                Some(t) => {
                    let inputs: Vec<u8> = t.input_nodes().iter().map(|p| vals[p]).collect();
                    let errs: Vec<u8> =
                        t.space_indices().iter().map(|&si| e_config[si]).collect();
                    t.solve(&inputs, &errs)
                        .expect("fixed-point table covers its grid")[0]
                }
                None => mm.mech_value(u, vals, e_config),
            };
            let mut with_u = vals.clone();
            with_u.insert(u.clone(), u_val);
            mm.mech_value(vv, &with_u, e_config)
        });
        mech_tables.insert(v.clone(), table);
    }

    let domains: BTreeMap<NodeId, usize> = m
        .domains()
        .iter()
        .filter(|(k, _)| *k != u)
        .map(|(k, c)| (k.clone(), *c))
        .collect();
    DiscreteMscm::new(g2, domains, error_tables, mech_tables)
}

/// Builds a mechanism table for `v` against the new noise layout: indexed by
/// `parents` (ascending) then by the bundles containing `v` (stored order),
/// the value delegating to `eval` with the decoded old noise configuration.
fn retabulate(
    m: &DiscreteMscm,
    v: &NodeId,
    parents: &[NodeId],
    stored: &[NodeSet],
    members: &[Vec<usize>],
    eval: impl Fn(&DiscreteMscm, &NodeId, &BTreeMap<NodeId, u8>, &[u8]) -> u8,
) -> Vec<u8> {
    let new_containing: Vec<usize> = stored
        .iter()
        .enumerate()
        .filter(|(_, f)| f.contains(v))
        .map(|(i, _)| i)
        .collect();
    let parent_cards: Vec<usize> = parents
        .iter()
        .map(|p| m.domain(p).expect("parents keep their domains"))
        .collect();
    let bundle_cards: Vec<usize> = new_containing
        .iter()
        .map(|&ni| bundle_card(&members[ni], m.error_spaces()))
        .collect();
    let radices: Vec<usize> = parent_cards
        .iter()
        .chain(bundle_cards.iter())
        .copied()
        .collect();

    let mut table = Vec::new();
    let mut odo = MixedRadix::new(&radices);
    while let Some(assignment) = odo.next_assignment() {
        let (p_vals, b_vals) = assignment.split_at(parents.len());
        let vals: BTreeMap<NodeId, u8> = parents
            .iter()
            .cloned()
            .zip(p_vals.iter().copied())
            .collect();
        let mut e_config = vec![0u8; m.error_spaces().len()];
        for (k, &ni) in new_containing.iter().enumerate() {
            scatter_bundle(b_vals[k], &members[ni], m.error_spaces(), &mut e_config);
        }
        table.push(eval(m, v, &vals, &e_config));
    }
    table
}

/// Index of the first stored hyperedge containing `f`.
fn first_superset(stored: &[NodeSet], f: &NodeSet) -> Option<usize> {
    stored.iter().position(|s| f.is_subset(s))
}

/// Cardinality of the product of the listed sources.
fn bundle_card(members: &[usize], old: &[ErrorSpace]) -> usize {
    members.iter().map(|&oi| old[oi].card()).product()
}

/// Outer product of the listed sources' laws; the last member varies fastest.
fn bundle_probs(members: &[usize], old: &[ErrorSpace]) -> Vec<f64> {
    let mut out = vec![1.0];
    for &oi in members {
        let mut next = Vec::with_capacity(out.len() * old[oi].card());
        for &w in &out {
            for &p in old[oi].probs() {
                next.push(w * p);
            }
        }
        out = next;
    }
    out
}

/// Writes the member values encoded by one bundle value into the old layout.
fn scatter_bundle(val: u8, members: &[usize], old: &[ErrorSpace], e_config: &mut [u8]) {
    let mut rem = val as usize;
    for &oi in members.iter().rev() {
        let c = old[oi].card();
        e_config[oi] = (rem % c) as u8;
        rem /= c;
    }
}
