use hedg_core::{NodeId, NodeSet};

use crate::DistError;

/// Default tolerance for the conditional-independence test.
pub const DEFAULT_CI_TOL: f64 = 1e-9;

/// An exact joint probability table over named variables with finite domains.
///
/// Variable `v` with cardinality `k` takes the values `0, …, k-1`.  The table
/// is dense and row-major with the *last* variable fastest; the variable
/// order is part of the distribution's identity.  A distribution over no
/// variables is the single-cell table `[1.0]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteDist {
    vars: Vec<(NodeId, usize)>,
    probs: Vec<f64>,
}

fn check_vars(vars: &[(NodeId, usize)]) -> Result<usize, DistError> {
    let mut seen = NodeSet::new();
    let mut cells = 1usize;
    for (v, card) in vars {
        if !seen.insert(v.clone()) {
            return Err(DistError::DuplicateVariable(v.as_str().to_owned()));
        }
        if *card == 0 {
            return Err(DistError::EmptyDomain(v.as_str().to_owned()));
        }
        cells = cells.checked_mul(*card).ok_or(DistError::TableSizeMismatch {
            got: usize::MAX,
            expected: usize::MAX,
        })?;
    }
    Ok(cells)
}

impl FiniteDist {
    /// Builds a distribution, requiring the table to sum to 1 within 1e-12.
    pub fn new(vars: Vec<(NodeId, usize)>, probs: Vec<f64>) -> Result<Self, DistError> {
        let dist = Self::unnormalized(vars, probs)?;
        let sum: f64 = dist.probs.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(DistError::NotNormalized { sum });
        }
        Ok(dist)
    }

    /// Builds a distribution from a table with any positive total mass,
    /// dividing it through.  Useful for inputs that are only approximately
    /// normalized.
    pub fn new_renormalized(vars: Vec<(NodeId, usize)>, probs: Vec<f64>) -> Result<Self, DistError> {
        let mut dist = Self::unnormalized(vars, probs)?;
        let sum: f64 = dist.probs.iter().sum();
        if !(sum > 0.0) || !sum.is_finite() {
            return Err(DistError::NotNormalized { sum });
        }
        for p in &mut dist.probs {
            *p /= sum;
        }
        Ok(dist)
    }

    fn unnormalized(vars: Vec<(NodeId, usize)>, probs: Vec<f64>) -> Result<Self, DistError> {
        let cells = check_vars(&vars)?;
        if probs.len() != cells {
            return Err(DistError::TableSizeMismatch {
                got: probs.len(),
                expected: cells,
            });
        }
        if let Some((index, &value)) = probs
            .iter()
            .enumerate()
            .find(|(_, p)| !p.is_finite() || **p < 0.0)
        {
            return Err(DistError::InvalidProbability { index, value });
        }
        Ok(FiniteDist { vars, probs })
    }

    /// Builds a distribution from sparse cells; absent cells are zero and
    /// repeated cells accumulate.
    pub fn from_cells(
        vars: Vec<(NodeId, usize)>,
        cells: &[(&[u8], f64)],
    ) -> Result<Self, DistError> {
        let total = check_vars(&vars)?;
        let mut probs = vec![0.0; total];
        let stage = FiniteDist { vars, probs: vec![] };
        for (asg, p) in cells {
            let idx = stage.index_of(asg)?;
            probs[idx] += p;
        }
        Self::new(stage.vars, probs)
    }

    /// The uniform distribution over the given variables.
    pub fn uniform(vars: Vec<(NodeId, usize)>) -> Result<Self, DistError> {
        let cells = check_vars(&vars)?;
        Ok(FiniteDist {
            vars,
            probs: vec![1.0 / cells as f64; cells],
        })
    }

    pub fn vars(&self) -> &[(NodeId, usize)] {
        &self.vars
    }

    /// The variable names as a set.
    pub fn var_names(&self) -> NodeSet {
        self.vars.iter().map(|(v, _)| v.clone()).collect()
    }

    pub fn cardinality(&self, v: &NodeId) -> Option<usize> {
        self.vars
            .iter()
            .find(|(name, _)| name == v)
            .map(|(_, card)| *card)
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn num_cells(&self) -> usize {
        self.probs.len()
    }

    /// Row-major strides: the last variable has stride 1.
    pub(crate) fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.vars.len()];
        for i in (0..self.vars.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.vars[i + 1].1;
        }
        strides
    }

    /// The table index of a full assignment, validating length and ranges.
    pub(crate) fn index_of(&self, asg: &[u8]) -> Result<usize, DistError> {
        if asg.len() != self.vars.len() {
            return Err(DistError::AssignmentLength {
                got: asg.len(),
                expected: self.vars.len(),
            });
        }
        let strides = self.strides();
        let mut idx = 0usize;
        for (i, &value) in asg.iter().enumerate() {
            let (ref var, card) = self.vars[i];
            if (value as usize) >= card {
                return Err(DistError::ValueOutOfRange {
                    var: var.as_str().to_owned(),
                    value,
                    card,
                });
            }
            idx += value as usize * strides[i];
        }
        Ok(idx)
    }

    /// The full assignment stored at a table index.
    pub(crate) fn decode(&self, mut idx: usize) -> Vec<u8> {
        let mut asg = vec![0u8; self.vars.len()];
        for i in (0..self.vars.len()).rev() {
            let card = self.vars[i].1;
            asg[i] = (idx % card) as u8;
            idx /= card;
        }
        asg
    }

    /// The probability of one full assignment.
    pub fn prob(&self, asg: &[u8]) -> Result<f64, DistError> {
        Ok(self.probs[self.index_of(asg)?])
    }

    /// Iterates all cells as `(assignment, probability)`.
    pub fn cells(&self) -> impl Iterator<Item = (Vec<u8>, f64)> + '_ {
        (0..self.probs.len()).map(|i| (self.decode(i), self.probs[i]))
    }

    /// Sums out every variable not in `s`, keeping the surviving variables in
    /// their original order.
    pub fn marginal(&self, s: &NodeSet) -> Result<FiniteDist, DistError> {
        self.check_known(s)?;
        let kept: Vec<usize> = (0..self.vars.len())
            .filter(|&i| s.contains(&self.vars[i].0))
            .collect();
        let out_vars: Vec<(NodeId, usize)> = kept.iter().map(|&i| self.vars[i].clone()).collect();
        let out_cells: usize = out_vars.iter().map(|(_, c)| c).product();
        let mut out_probs = vec![0.0; out_cells];
        let out_stage = FiniteDist {
            vars: out_vars,
            probs: vec![],
        };
        let out_strides = out_stage.strides();
        for (idx, &p) in self.probs.iter().enumerate() {
            let asg = self.decode(idx);
            let mut out_idx = 0usize;
            for (pos, &i) in kept.iter().enumerate() {
                out_idx += asg[i] as usize * out_strides[pos];
            }
            out_probs[out_idx] += p;
        }
        Ok(FiniteDist {
            vars: out_stage.vars,
            probs: out_probs,
        })
    }

    fn check_known(&self, s: &NodeSet) -> Result<(), DistError> {
        let names = self.var_names();
        for v in s {
            if !names.contains(v) {
                return Err(DistError::UnknownVariable(v.as_str().to_owned()));
            }
        }
        Ok(())
    }

    /// The largest cellwise defect of the independence identity
    /// `p(x,y,z)·p(z) = p(x,z)·p(y,z)` over assignments of `x ∪ y ∪ z`.
    pub fn ci_defect(&self, x: &NodeSet, y: &NodeSet, z: &NodeSet) -> Result<f64, DistError> {
        self.check_known(x)?;
        self.check_known(y)?;
        self.check_known(z)?;
        let mut u = x.clone();
        u.extend(y.iter().cloned());
        u.extend(z.iter().cloned());
        let xz: NodeSet = x.union(z).cloned().collect();
        let yz: NodeSet = y.union(z).cloned().collect();

        let m_u = self.marginal(&u)?;
        let m_z = m_u.marginal(z)?;
        let m_xz = m_u.marginal(&xz)?;
        let m_yz = m_u.marginal(&yz)?;

        let project = |target: &FiniteDist| -> Vec<usize> {
            target
                .vars
                .iter()
                .map(|(v, _)| m_u.vars.iter().position(|(w, _)| w == v).expect("subset"))
                .collect()
        };
        let z_pos = project(&m_z);
        let xz_pos = project(&m_xz);
        let yz_pos = project(&m_yz);

        let sub_prob = |sub: &FiniteDist, pos: &[usize], asg: &[u8]| -> f64 {
            let strides = sub.strides();
            let mut idx = 0usize;
            for (k, &i) in pos.iter().enumerate() {
                idx += asg[i] as usize * strides[k];
            }
            sub.probs[idx]
        };

        let mut worst = 0.0f64;
        for (asg, p_full) in m_u.cells() {
            let lhs = p_full * sub_prob(&m_z, &z_pos, &asg);
            let rhs = sub_prob(&m_xz, &xz_pos, &asg) * sub_prob(&m_yz, &yz_pos, &asg);
            worst = worst.max((lhs - rhs).abs());
        }
        Ok(worst)
    }

    /// Is `x` independent of `y` given `z`, up to `tol` per cell?
    pub fn is_ci(
        &self,
        x: &NodeSet,
        y: &NodeSet,
        z: &NodeSet,
        tol: f64,
    ) -> Result<bool, DistError> {
        Ok(self.ci_defect(x, y, z)? <= tol)
    }

    /// Total-variation distance to another distribution over the same
    /// variables in the same order.
    pub fn tv_distance(&self, other: &FiniteDist) -> Result<f64, DistError> {
        for i in 0..self.vars.len().max(other.vars.len()) {
            match (self.vars.get(i), other.vars.get(i)) {
                (Some((a, ca)), Some((b, cb))) if a == b => {
                    if ca != cb {
                        return Err(DistError::DomainMismatch {
                            var: a.as_str().to_owned(),
                            expected: *ca,
                            got: *cb,
                        });
                    }
                }
                (Some((a, _)), _) => {
                    return Err(DistError::UnknownVariable(a.as_str().to_owned()))
                }
                (None, Some((b, _))) => {
                    return Err(DistError::UnknownVariable(b.as_str().to_owned()))
                }
                (None, None) => unreachable!(),
            }
        }
        let sum: f64 = self
            .probs
            .iter()
            .zip(&other.probs)
            .map(|(a, b)| (a - b).abs())
            .sum();
        Ok(0.5 * sum)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> NodeId {
        NodeId::new(s).unwrap()
    }

    fn set(labels: &[&str]) -> NodeSet {
        labels.iter().map(|s| v(s)).collect()
    }

    fn binary_vars(labels: &[&str]) -> Vec<(NodeId, usize)> {
        labels.iter().map(|s| (v(s), 2)).collect()
    }

    /// Uniform mass on eight of the sixteen binary points over (x1,x2,x3,x4).
    fn eight_point() -> FiniteDist {
        let cells: [&[u8]; 8] = [
            &[0, 0, 0, 0],
            &[1, 0, 0, 0],
            &[1, 1, 0, 0],
            &[1, 1, 1, 0],
            &[0, 0, 0, 1],
            &[0, 0, 1, 1],
            &[0, 1, 1, 1],
            &[1, 1, 1, 1],
        ];
        let weighted: Vec<(&[u8], f64)> = cells.iter().map(|c| (*c, 0.125)).collect();
        FiniteDist::from_cells(binary_vars(&["x1", "x2", "x3", "x4"]), &weighted).unwrap()
    }

    fn coin_copy() -> FiniteDist {
        FiniteDist::from_cells(binary_vars(&["c1", "c2"]), &[(&[0, 0], 0.5), (&[1, 1], 0.5)])
            .unwrap()
    }

    #[test]
    fn construction_validates_shape_and_mass() {
        let err = FiniteDist::new(binary_vars(&["a"]), vec![0.5, 0.4]).unwrap_err();
        assert!(matches!(err, DistError::NotNormalized { .. }));
        let err = FiniteDist::new(binary_vars(&["a"]), vec![1.5, -0.5]).unwrap_err();
        assert_eq!(
            err,
            DistError::InvalidProbability {
                index: 1,
                value: -0.5
            }
        );
        let err = FiniteDist::new(binary_vars(&["a", "a"]), vec![0.25; 4]).unwrap_err();
        assert_eq!(err, DistError::DuplicateVariable("a".into()));
        let err = FiniteDist::new(binary_vars(&["a", "b"]), vec![0.5, 0.5]).unwrap_err();
        assert_eq!(err, DistError::TableSizeMismatch { got: 2, expected: 4 });
        let err = FiniteDist::from_cells(binary_vars(&["a"]), &[(&[2], 1.0)]).unwrap_err();
        assert_eq!(
            err,
            DistError::ValueOutOfRange {
                var: "a".into(),
                value: 2,
                card: 2
            }
        );
        let renorm = FiniteDist::new_renormalized(binary_vars(&["a"]), vec![3.0, 1.0]).unwrap();
        assert_eq!(renorm.probs(), &[0.75, 0.25]);
    }

    #[test]
    fn a_distribution_over_no_variables_is_the_unit_cell() {
        let unit = FiniteDist::uniform(vec![]).unwrap();
        assert_eq!(unit.probs(), &[1.0]);
        assert_eq!(unit.marginal(&NodeSet::new()).unwrap(), unit);
    }

    #[test]
    fn marginals_sum_the_dropped_variables_out() {
        let p = eight_point();
        assert_eq!(p.marginal(&p.var_names()).unwrap(), p);
        let x1 = p.marginal(&set(&["x1"])).unwrap();
        assert_eq!(x1.probs(), &[0.5, 0.5]);
        let pair = p.marginal(&set(&["x1", "x3"])).unwrap();
        assert!(pair.probs().iter().all(|&q| (q - 0.25).abs() < 1e-15));
    }

    #[test]
    fn marginalization_factors_through_intermediate_sets() {
        let p = eight_point();
        let via = p
            .marginal(&set(&["x1", "x2", "x4"]))
            .unwrap()
            .marginal(&set(&["x2", "x4"]))
            .unwrap();
        let direct = p.marginal(&set(&["x2", "x4"])).unwrap();
        assert!(via.tv_distance(&direct).unwrap() < 1e-15);
    }

    #[test]
    fn the_eight_point_table_has_its_two_advertised_independences() {
        let p = eight_point();
        assert!(p
            .is_ci(&set(&["x1"]), &set(&["x3"]), &set(&["x2", "x4"]), 1e-9)
            .unwrap());
        assert!(p
            .is_ci(&set(&["x2"]), &set(&["x4"]), &set(&["x1", "x3"]), 1e-9)
            .unwrap());
        // Conditioning on only one of the two blocking variables breaks it.
        let defect = p.ci_defect(&set(&["x1"]), &set(&["x3"]), &set(&["x2"])).unwrap();
        assert!((defect - 1.0 / 64.0).abs() < 1e-12);
    }

    #[test]
    fn copied_coins_are_marginally_dependent() {
        let p = coin_copy();
        let defect = p.ci_defect(&set(&["c1"]), &set(&["c2"]), &NodeSet::new()).unwrap();
        assert!((defect - 0.25).abs() < 1e-15);
        assert!(!p.is_ci(&set(&["c1"]), &set(&["c2"]), &NodeSet::new(), 1e-9).unwrap());
        let two = p.marginal(&set(&["c1", "c2"])).unwrap();
        assert_eq!(two.prob(&[0, 0]).unwrap(), 0.5);
        assert_eq!(two.prob(&[0, 1]).unwrap(), 0.0);
    }

    #[test]
    fn independence_against_nothing_is_free() {
        let p = coin_copy();
        assert!(p
            .is_ci(&set(&["c1"]), &NodeSet::new(), &set(&["c2"]), 1e-9)
            .unwrap());
        assert!(p.is_ci(&set(&["c1"]), &set(&["c1"]), &set(&["c1"]), 1e-9).unwrap());
        assert!(!p.is_ci(&set(&["c1"]), &set(&["c1"]), &NodeSet::new(), 1e-9).unwrap());
    }

    #[test]
    fn unknown_variables_are_rejected() {
        let p = coin_copy();
        assert_eq!(
            p.marginal(&set(&["zz"])).unwrap_err(),
            DistError::UnknownVariable("zz".into())
        );
        assert!(p
            .ci_defect(&set(&["c1"]), &set(&["zz"]), &NodeSet::new())
            .is_err());
    }

    #[test]
    fn tv_distance_requires_matching_variables() {
        let p = coin_copy();
        let q = FiniteDist::uniform(binary_vars(&["c1", "c2"])).unwrap();
        assert!((p.tv_distance(&q).unwrap() - 0.5).abs() < 1e-15);
        let r = FiniteDist::uniform(binary_vars(&["c1"])).unwrap();
        assert!(p.tv_distance(&r).is_err());
    }
}
