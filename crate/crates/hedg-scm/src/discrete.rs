//! Discrete structural models with cycles and shared noise.
//!
//! A model couples a directed graph with hyperedges to finite-domain
//! mechanisms: every stored hyperedge carries an independent noise source, and
//! every node computes its value from its parents together with the noise
//! sources whose hyperedge contains it. Cycles are handled by solving the
//! induced fixed-point equations on every strongly connected node set; a model
//! whose loops all admit exactly one solution per input defines an exact joint
//! law, which this module computes by enumeration.

use std::collections::BTreeMap;

use hedg_core::{Hedg, NodeId, NodeSet};
use hedg_dist::FiniteDist;
use hedg_transform::augment_map;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::ScmError;

/// Tolerance within which probability tables must sum to one.
pub(crate) const MASS_TOL: f64 = 1e-9;

/// Largest number of values a single variable or noise source may take.
pub(crate) const MAX_CARD: usize = 256;

/// An independent noise source attached to one stored hyperedge.
#[derive(Debug, Clone)]
pub struct ErrorSpace {
    pub(crate) edge: NodeSet,
    pub(crate) card: usize,
    pub(crate) probs: Vec<f64>,
}

impl ErrorSpace {
    /// The stored hyperedge this source is attached to.
    pub fn edge(&self) -> &NodeSet {
        &self.edge
    }

    /// Number of values the source takes.
    pub fn card(&self) -> usize {
        self.card
    }

    /// Probability of each value.
    pub fn probs(&self) -> &[f64] {
        &self.probs
    }
}

/// A structural model over a directed graph with hyperedges, with finite
/// node domains, one noise source per stored hyperedge, and a deterministic
/// mechanism per node.
///
/// A mechanism table for node `v` is indexed by the values of `v`'s parents in
/// ascending label order, followed by the values of the noise sources whose
/// hyperedge contains `v` in stored order; the last input varies fastest.
#[derive(Debug, Clone)]
pub struct DiscreteMscm {
    graph: Hedg,
    domains: BTreeMap<NodeId, usize>,
    errors: Vec<ErrorSpace>,
    mechanisms: BTreeMap<NodeId, Vec<u8>>,
    /// Parents of each node, ascending; cached from the graph.
    pub(crate) parents: BTreeMap<NodeId, Vec<NodeId>>,
    /// Indices into `errors` of the sources containing each node.
    pub(crate) containing: BTreeMap<NodeId, Vec<usize>>,
}

impl DiscreteMscm {
    pub fn new(
        graph: Hedg,
        domains: BTreeMap<NodeId, usize>,
        error_tables: BTreeMap<NodeSet, Vec<f64>>,
        mechanism_tables: BTreeMap<NodeId, Vec<u8>>,
    ) -> Result<Self, ScmError> {
        for v in graph.nodes() {
            match domains.get(v) {
                None => return Err(ScmError::MissingDomain(v.as_str().to_owned())),
                Some(0) => return Err(ScmError::EmptyDomain(v.as_str().to_owned())),
                Some(&c) if c > MAX_CARD => {
                    return Err(ScmError::DomainTooLarge(v.as_str().to_owned()))
                }
                Some(_) => {}
            }
        }
        for v in domains.keys() {
            if !graph.nodes().contains(v) {
                return Err(ScmError::StrayDomain(v.as_str().to_owned()));
            }
        }

        let mut error_tables = error_tables;
        let mut errors = Vec::new();
        for f in graph.hyperedges() {
            let probs = error_tables
                .remove(f)
                .ok_or_else(|| ScmError::MissingErrorSpace(f.clone()))?;
            if probs.is_empty() || probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
                return Err(ScmError::ErrorTableEntry { edge: f.clone() });
            }
            if probs.len() > MAX_CARD {
                return Err(ScmError::DomainTooLarge(format!("{f:?}")));
            }
            let sum: f64 = probs.iter().sum();
            if (sum - 1.0).abs() > MASS_TOL {
                return Err(ScmError::ErrorTableMass {
                    edge: f.clone(),
                    sum,
                });
            }
            errors.push(ErrorSpace {
                edge: f.clone(),
                card: probs.len(),
                probs,
            });
        }
        if let Some(edge) = error_tables.into_keys().next() {
            return Err(ScmError::StrayErrorSpace(edge));
        }

        let mut parents = BTreeMap::new();
        let mut containing = BTreeMap::new();
        for v in graph.nodes() {
            let ps = graph.parents(&NodeSet::from([v.clone()]))?;
            parents.insert(v.clone(), ps.into_iter().collect::<Vec<_>>());
            let cs: Vec<usize> = errors
                .iter()
                .enumerate()
                .filter(|(_, sp)| sp.edge.contains(v))
                .map(|(i, _)| i)
                .collect();
            containing.insert(v.clone(), cs);
        }

        let mut mechanism_tables = mechanism_tables;
        let mut mechanisms = BTreeMap::new();
        for v in graph.nodes() {
            let table = mechanism_tables
                .remove(v)
                .ok_or_else(|| ScmError::MissingMechanism(v.as_str().to_owned()))?;
            let expected: usize = parents[v]
                .iter()
                .map(|p| domains[p])
                .chain(containing[v].iter().map(|&si| errors[si].card))
                .product();
            if table.len() != expected {
                return Err(ScmError::MechanismArity {
                    node: v.as_str().to_owned(),
                    got: table.len(),
                    expected,
                });
            }
            let card = domains[v];
            if let Some(&bad) = table.iter().find(|x| **x as usize >= card) {
                return Err(ScmError::MechanismRange {
                    node: v.as_str().to_owned(),
                    value: bad,
                    card,
                });
            }
            mechanisms.insert(v.clone(), table);
        }
        if let Some(v) = mechanism_tables.into_keys().next() {
            return Err(ScmError::StrayMechanism(v.as_str().to_owned()));
        }

        Ok(DiscreteMscm {
            graph,
            domains,
            errors,
            mechanisms,
            parents,
            containing,
        })
    }

    pub fn graph(&self) -> &Hedg {
        &self.graph
    }

    pub fn domains(&self) -> &BTreeMap<NodeId, usize> {
        &self.domains
    }

    pub fn domain(&self, v: &NodeId) -> Option<usize> {
        self.domains.get(v).copied()
    }

    /// Noise sources, one per stored hyperedge, in stored order.
    pub fn error_spaces(&self) -> &[ErrorSpace] {
        &self.errors
    }

    pub fn mechanism(&self, v: &NodeId) -> Option<&[u8]> {
        self.mechanisms.get(v).map(|t| t.as_slice())
    }

    /// Evaluates `v`'s mechanism. `vals` must assign all parents of `v` and
    /// `e_config` must hold one value per noise source (only the coordinates
    /// whose hyperedge contains `v` are read).
    pub(crate) fn mech_value(
        &self,
        v: &NodeId,
        vals: &BTreeMap<NodeId, u8>,
        e_config: &[u8],
    ) -> u8 {
        let mut idx = 0usize;
        for p in &self.parents[v] {
            idx = idx * self.domains[p] + vals[p] as usize;
        }
        for &si in &self.containing[v] {
            idx = idx * self.errors[si].card + e_config[si] as usize;
        }
        self.mechanisms[v][idx]
    }

    /// Solves the fixed-point equations of every strongly connected node set.
    ///
    /// For each such set `s`, each assignment of the parents outside `s`, and
    /// each value of the noise sources meeting `s`, the mechanisms of `s` must
    /// pin down exactly one joint value on `s`; otherwise an error reports the
    /// offending set and input index.
    pub fn derive_loop_solutions(&self) -> Result<LoopSolutions, ScmError> {
        let mut tables = BTreeMap::new();
        for s in self.graph.loop_set() {
            let nodes: Vec<NodeId> = s.iter().cloned().collect();
            let node_cards: Vec<usize> = nodes.iter().map(|v| self.domains[v]).collect();
            let input_nodes: Vec<NodeId> = self
                .graph
                .parents(&s)?
                .difference(&s)
                .cloned()
                .collect();
            let input_cards: Vec<usize> = input_nodes.iter().map(|v| self.domains[v]).collect();
            let space_indices: Vec<usize> = self
                .errors
                .iter()
                .enumerate()
                .filter(|(_, sp)| sp.edge.intersection(&s).next().is_some())
                .map(|(i, _)| i)
                .collect();
            let space_cards: Vec<usize> =
                space_indices.iter().map(|&si| self.errors[si].card).collect();

            let radices: Vec<usize> = input_cards
                .iter()
                .chain(space_cards.iter())
                .copied()
                .collect();
            let mut values = Vec::new();
            let mut input_index = 0usize;
            let mut odo = MixedRadix::new(&radices);
            while let Some(assignment) = odo.next_assignment() {
                let (in_vals, e_vals) = assignment.split_at(input_nodes.len());
                let mut e_config = vec![0u8; self.errors.len()];
                for (k, &si) in space_indices.iter().enumerate() {
                    e_config[si] = e_vals[k];
                }
                let base: BTreeMap<NodeId, u8> = input_nodes
                    .iter()
                    .cloned()
                    .zip(in_vals.iter().copied())
                    .collect();

                let mut found: Option<Vec<u8>> = None;
                let mut cand = MixedRadix::new(&node_cards);
                while let Some(xs) = cand.next_assignment() {
                    let mut vals = base.clone();
                    for (node, &x) in nodes.iter().zip(xs) {
                        vals.insert(node.clone(), x);
                    }
                    let consistent = nodes
                        .iter()
                        .zip(xs)
                        .all(|(v, &x)| self.mech_value(v, &vals, &e_config) == x);
                    if consistent {
                        if let Some(first) = &found {
                            return Err(ScmError::MultipleSolutions {
                                loop_nodes: s.clone(),
                                input: input_index,
                                first: first.clone(),
                                second: xs.to_vec(),
                            });
                        }
                        found = Some(xs.to_vec());
                    }
                }
                match found {
                    Some(sol) => values.push(sol),
                    None => {
                        return Err(ScmError::NoSolution {
                            loop_nodes: s.clone(),
                            input: input_index,
                        })
                    }
                }
                input_index += 1;
            }

            tables.insert(
                s.clone(),
                LoopTable {
                    nodes,
                    input_nodes,
                    input_cards,
                    space_indices,
                    space_cards,
                    values,
                },
            );
        }
        Ok(LoopSolutions { tables })
    }

    /// Evaluates the whole model at one noise configuration, walking the
    /// strongly connected blocks in dependency order.
    pub(crate) fn solve_config(
        &self,
        sols: &LoopSolutions,
        blocks: &[NodeSet],
        e_config: &[u8],
    ) -> BTreeMap<NodeId, u8> {
        let mut vals: BTreeMap<NodeId, u8> = BTreeMap::new();
        for block in blocks {
            let t = sols
                .table(block)
                .expect("every strongly connected block has a solution table");
            let inputs: Vec<u8> = t.input_nodes.iter().map(|p| vals[p]).collect();
            let errs: Vec<u8> = t.space_indices.iter().map(|&si| e_config[si]).collect();
            let xs = t
                .solve(&inputs, &errs)
                .expect("solution table covers its input grid");
            for (node, &x) in t.nodes.iter().zip(xs) {
                vals.insert(node.clone(), x);
            }
        }
        vals
    }

    /// The exact joint law of the observed nodes.
    pub fn exact_joint(&self) -> Result<FiniteDist, ScmError> {
        let sols = self.derive_loop_solutions()?;
        self.joint_from(&sols, false)
    }

    /// The exact joint law of the observed nodes together with one variable
    /// per noise source, named like the synthetic latent nodes of the
    /// augmented graph.
    pub fn exact_augmented_joint(&self) -> Result<FiniteDist, ScmError> {
        let sols = self.derive_loop_solutions()?;
        self.joint_from(&sols, true)
    }

    fn joint_from(&self, sols: &LoopSolutions, augmented: bool) -> Result<FiniteDist, ScmError> {
        let blocks = scc_topo_blocks(&self.graph);
        let mut cols: Vec<(NodeId, usize, Option<usize>)> = self
            .graph
            .nodes()
            .iter()
            .map(|v| (v.clone(), self.domains[v], None))
            .collect();
        if augmented {
            let aug = augment_map(&self.graph);
            let edge_index: BTreeMap<&NodeSet, usize> = self
                .errors
                .iter()
                .enumerate()
                .map(|(i, sp)| (&sp.edge, i))
                .collect();
            for (name, edge) in &aug.latents {
                let si = *edge_index
                    .get(edge)
                    .expect("latent nodes mirror stored hyperedges");
                cols.push((name.clone(), self.errors[si].card, Some(si)));
            }
            cols.sort_by(|a, b| a.0.cmp(&b.0));
        }

        let total: usize = cols.iter().map(|c| c.1).product();
        let mut probs = vec![0.0f64; total];
        let space_cards: Vec<usize> = self.errors.iter().map(|sp| sp.card).collect();
        let mut odo = MixedRadix::new(&space_cards);
        while let Some(e_config) = odo.next_assignment() {
            let mut w = 1.0f64;
            for (i, sp) in self.errors.iter().enumerate() {
                w *= sp.probs[e_config[i] as usize];
            }
            if w == 0.0 {
                continue;
            }
            let vals = self.solve_config(sols, &blocks, e_config);
            let mut idx = 0usize;
            for (name, card, src) in &cols {
                let x = match src {
                    None => vals[name],
                    Some(si) => e_config[*si],
                };
                idx = idx * card + x as usize;
            }
            probs[idx] += w;
        }

        let vars: Vec<(NodeId, usize)> = cols.into_iter().map(|(n, c, _)| (n, c)).collect();
        Ok(FiniteDist::new_renormalized(vars, probs)?)
    }

    /// Draws `n` independent rows by sampling every noise source and solving.
    /// Returns the node names (ascending) and one row of values per draw.
    pub fn sample(&self, n: usize, seed: u64) -> Result<(Vec<NodeId>, Vec<Vec<u8>>), ScmError> {
        let sols = self.derive_loop_solutions()?;
        let blocks = scc_topo_blocks(&self.graph);
        let names: Vec<NodeId> = self.graph.nodes().iter().cloned().collect();
        let cums: Vec<Vec<f64>> = self
            .errors
            .iter()
            .map(|sp| {
                let mut acc = 0.0;
                sp.probs
                    .iter()
                    .map(|p| {
                        acc += p;
                        acc
                    })
                    .collect()
            })
            .collect();
        let mut rng = StdRng::seed_from_u64(seed);
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let e_config: Vec<u8> = cums
                .iter()
                .map(|cum| {
                    let r: f64 = rng.gen();
                    let i = cum.partition_point(|&c| c <= r);
                    i.min(cum.len() - 1) as u8
                })
                .collect();
            let vals = self.solve_config(&sols, &blocks, &e_config);
            rows.push(names.iter().map(|v| vals[v]).collect());
        }
        Ok((names, rows))
    }
}

/// Fixed-point solution tables, one per strongly connected node set.
#[derive(Debug, Clone)]
pub struct LoopSolutions {
    tables: BTreeMap<NodeSet, LoopTable>,
}

impl LoopSolutions {
    /// The solved node sets, ascending.
    pub fn loops(&self) -> impl Iterator<Item = &NodeSet> {
        self.tables.keys()
    }

    pub fn table(&self, s: &NodeSet) -> Option<&LoopTable> {
        self.tables.get(s)
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }
}

/// The unique solution of one strongly connected node set, tabulated over the
/// values of its outside parents and of the noise sources meeting the set.
#[derive(Debug, Clone)]
pub struct LoopTable {
    pub(crate) nodes: Vec<NodeId>,
    pub(crate) input_nodes: Vec<NodeId>,
    pub(crate) input_cards: Vec<usize>,
    pub(crate) space_indices: Vec<usize>,
    pub(crate) space_cards: Vec<usize>,
    /// Indexed by outside-parent values then noise values, last fastest.
    pub(crate) values: Vec<Vec<u8>>,
}

impl LoopTable {
    /// The solved nodes, ascending.
    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    /// Parents outside the set, ascending.
    pub fn input_nodes(&self) -> &[NodeId] {
        &self.input_nodes
    }

    /// Indices (into the model's noise sources) of the sources whose
    /// hyperedge meets the set.
    pub fn space_indices(&self) -> &[usize] {
        &self.space_indices
    }

    /// Looks up the solution for one assignment of the outside parents and
    /// one value per listed noise source. `None` on shape mismatch.
    pub fn solve(&self, inputs: &[u8], errors: &[u8]) -> Option<&[u8]> {
        if inputs.len() != self.input_cards.len() || errors.len() != self.space_cards.len() {
            return None;
        }
        let mut idx = 0usize;
        for (k, &x) in inputs.iter().enumerate() {
            if x as usize >= self.input_cards[k] {
                return None;
            }
            idx = idx * self.input_cards[k] + x as usize;
        }
        for (k, &e) in errors.iter().enumerate() {
            if e as usize >= self.space_cards[k] {
                return None;
            }
            idx = idx * self.space_cards[k] + e as usize;
        }
        self.values.get(idx).map(|v| v.as_slice())
    }
}

/// Strongly connected blocks in dependency order (ties broken by smallest
/// member label, so the order is deterministic).
pub(crate) fn scc_topo_blocks(g: &Hedg) -> Vec<NodeSet> {
    let blocks = g.scc_partition();
    let index = g.scc_index();
    let k = blocks.len();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (v, w) in g.dedges() {
        let (i, j) = (index[v], index[w]);
        if i != j {
            preds[j].push(i);
        }
    }
    let mut emitted = vec![false; k];
    let mut out = Vec::with_capacity(k);
    while out.len() < k {
        let mut pick: Option<usize> = None;
        for b in 0..k {
            if emitted[b] || preds[b].iter().any(|&p| !emitted[p]) {
                continue;
            }
            let better = match pick {
                None => true,
                Some(cur) => blocks[b].first() < blocks[cur].first(),
            };
            if better {
                pick = Some(b);
            }
        }
        let b = pick.expect("block condensation is acyclic");
        emitted[b] = true;
        out.push(blocks[b].clone());
    }
    out
}

/// Odometer over mixed-radix assignments; the last coordinate varies fastest.
/// Zero radices yield a single empty assignment.
pub(crate) struct MixedRadix {
    radices: Vec<usize>,
    current: Vec<u8>,
    started: bool,
    done: bool,
}

impl MixedRadix {
    pub(crate) fn new(radices: &[usize]) -> Self {
        let done = radices.iter().any(|&r| r == 0);
        MixedRadix {
            radices: radices.to_vec(),
            current: vec![0; radices.len()],
            started: false,
            done,
        }
    }

    pub(crate) fn next_assignment(&mut self) -> Option<&[u8]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let mut i = self.radices.len();
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if (self.current[i] as usize) + 1 < self.radices[i] {
                self.current[i] += 1;
                break;
            }
            self.current[i] = 0;
        }
        Some(&self.current)
    }
}
