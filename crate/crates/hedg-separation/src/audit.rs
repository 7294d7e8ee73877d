//! Exhaustive audit of an abstract independence model against the
//! semi-graphoid axioms.

use crate::SepError;
use hedg_core::{NodeId, NodeSet};

/// The axioms the auditor can quantify over.
///
/// Irrelevance through Contraction hold for every separation notion and
/// every distribution; Intersection is restricted to pairwise-disjoint
/// arguments (and needs positive densities on the distribution side);
/// Composition holds for separation notions but not for distributions in
/// general.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// X ⟂ Y | Y.
    Irrelevance,
    /// X ⟂ Y | Z implies Y ⟂ X | Z.
    Symmetry,
    /// X ⟂ Y∪W | Z implies X ⟂ Y | Z.
    Decomposition,
    /// X ⟂ Y∪W | Z implies X ⟂ Y | W∪Z.
    WeakUnion,
    /// X ⟂ Y | W∪Z and X ⟂ W | Z imply X ⟂ Y∪W | Z.
    Contraction,
    /// X ⟂ Y | W∪Z and X ⟂ W | Y∪Z imply X ⟂ Y∪W | Z, for pairwise
    /// disjoint X, Y, Z, W.
    Intersection,
    /// X ⟂ Y | Z and X ⟂ W | Z imply X ⟂ Y∪W | Z.
    Composition,
}

/// The semi-graphoid half plus composition: what both separation notions
/// satisfy on every graph.
pub const SEPARATION_AXIOMS: [Axiom; 6] = [
    Axiom::Irrelevance,
    Axiom::Symmetry,
    Axiom::Decomposition,
    Axiom::WeakUnion,
    Axiom::Contraction,
    Axiom::Composition,
];

/// One failed axiom instance. `w` is absent for the axioms that only
/// quantify over three sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub x: NodeSet,
    pub y: NodeSet,
    pub z: NodeSet,
    pub w: Option<NodeSet>,
}

/// Outcome of an audit. `violations` holds at most 1000 instances;
/// `violation_count` is always exact.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub checked: Vec<Axiom>,
    pub violations: Vec<AxiomViolation>,
    pub violation_count: usize,
    pub truncated: bool,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

/// Exhaustive-quantification bound for the auditor.
pub const AUDIT_NODE_LIMIT: usize = 6;
const MAX_RECORDED: usize = 1000;

struct Memo<'a, F> {
    n: usize,
    order: &'a [NodeId],
    table: Vec<i8>,
    oracle: F,
}

impl<F: FnMut(&NodeSet, &NodeSet, &NodeSet) -> bool> Memo<'_, F> {
    fn set_of(&self, mask: u64) -> NodeSet {
        self.order
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v.clone())
            .collect()
    }

    fn get(&mut self, x: u64, y: u64, z: u64) -> bool {
        let idx = (x | y << self.n | z << (2 * self.n)) as usize;
        if self.table[idx] < 0 {
            let (xs, ys, zs) = (self.set_of(x), self.set_of(y), self.set_of(z));
            self.table[idx] = (self.oracle)(&xs, &ys, &zs) as i8;
        }
        self.table[idx] == 1
    }
}

/// Audits the ternary relation `oracle` over the ground set `v` against the
/// requested axioms, quantifying exhaustively over all subset
/// instantiations. Caps out at [`AUDIT_NODE_LIMIT`] nodes.
pub fn independence_model_audit<F>(
    oracle: F,
    v: &NodeSet,
    axioms: &[Axiom],
) -> Result<AuditReport, SepError>
where
    F: FnMut(&NodeSet, &NodeSet, &NodeSet) -> bool,
{
    if v.len() > AUDIT_NODE_LIMIT {
        return Err(SepError::SizeLimit {
            nodes: v.len(),
            limit: AUDIT_NODE_LIMIT,
        });
    }
    let order: Vec<NodeId> = v.iter().cloned().collect();
    let n = order.len();
    let full = 1u64 << n;
    let mut memo = Memo {
        n,
        order: &order,
        table: vec![-1; 1 << (3 * n)],
        oracle,
    };

    let mut report = AuditReport {
        checked: axioms.to_vec(),
        violations: Vec::new(),
        violation_count: 0,
        truncated: false,
    };
    let record =
        |report: &mut AuditReport, memo: &Memo<F>, axiom, x, y, z, w: Option<u64>| {
            report.violation_count += 1;
            if report.violations.len() < MAX_RECORDED {
                report.violations.push(AxiomViolation {
                    axiom,
                    x: memo.set_of(x),
                    y: memo.set_of(y),
                    z: memo.set_of(z),
                    w: w.map(|m| memo.set_of(m)),
                });
            } else {
                report.truncated = true;
            }
        };

    for &axiom in axioms {
        match axiom {
            Axiom::Irrelevance => {
                for x in 0..full {
                    for y in 0..full {
                        if !memo.get(x, y, y) {
                            record(&mut report, &memo, axiom, x, y, y, None);
                        }
                    }
                }
            }
            Axiom::Symmetry => {
                for x in 0..full {
                    for y in 0..full {
                        for z in 0..full {
                            if memo.get(x, y, z) && !memo.get(y, x, z) {
                                record(&mut report, &memo, axiom, x, y, z, None);
                            }
                        }
                    }
                }
            }
            _ => {
                for x in 0..full {
                    for y in 0..full {
                        for w in 0..full {
                            for z in 0..full {
                                let holds = match axiom {
                                    Axiom::Decomposition => {
                                        !memo.get(x, y | w, z) || memo.get(x, y, z)
                                    }
                                    Axiom::WeakUnion => {
                                        !memo.get(x, y | w, z) || memo.get(x, y, w | z)
                                    }
                                    Axiom::Contraction => {
                                        !(memo.get(x, y, w | z) && memo.get(x, w, z))
                                            || memo.get(x, y | w, z)
                                    }
                                    Axiom::Intersection => {
                                        let disjoint = x & y == 0
                                            && x & z == 0
                                            && x & w == 0
                                            && y & z == 0
                                            && y & w == 0
                                            && z & w == 0;
                                        !disjoint
                                            || !(memo.get(x, y, w | z)
                                                && memo.get(x, w, y | z))
                                            || memo.get(x, y | w, z)
                                    }
                                    Axiom::Composition => {
                                        !(memo.get(x, y, z) && memo.get(x, w, z))
                                            || memo.get(x, y | w, z)
                                    }
                                    Axiom::Irrelevance | Axiom::Symmetry => unreachable!(),
                                };
                                if !holds {
                                    record(&mut report, &memo, axiom, x, y, z, Some(w));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{d_separated, SepQuery};
    use hedg_fixtures::{four_cycle, three_coin};

    #[test]
    fn d_separation_on_fixtures_satisfies_the_axioms() {
        for g in [four_cycle(), three_coin()] {
            let report = independence_model_audit(
                |x: &NodeSet, y: &NodeSet, z: &NodeSet| {
                    d_separated(&g, &SepQuery::new(x.clone(), y.clone(), z.clone())).unwrap()
                },
                g.nodes(),
                &SEPARATION_AXIOMS,
            )
            .unwrap();
            assert!(report.passed(), "violations: {:?}", report.violations);
        }
    }

    #[test]
    fn constant_false_relation_breaks_irrelevance() {
        let v = hedg_fixtures::ns(&["a", "b"]);
        let report =
            independence_model_audit(|_, _, _| false, &v, &[Axiom::Irrelevance]).unwrap();
        assert!(!report.passed());
        assert!(report
            .violations
            .iter()
            .all(|viol| viol.axiom == Axiom::Irrelevance));
    }

    #[test]
    fn too_many_nodes_hit_the_limit() {
        let v = hedg_fixtures::ns(&["a", "b", "c", "d", "e", "f", "g"]);
        assert!(matches!(
            independence_model_audit(|_, _, _| true, &v, &SEPARATION_AXIOMS),
            Err(SepError::SizeLimit { .. })
        ));
    }
}
