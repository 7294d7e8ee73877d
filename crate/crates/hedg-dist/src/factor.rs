use hedg_core::{NodeId, NodeSet};

use crate::{DistError, FiniteDist};

/// A nonnegative table over a subset of variables.
#[derive(Debug, Clone, PartialEq)]
pub struct Factor {
    scope: Vec<(NodeId, usize)>,
    table: Vec<f64>,
}

impl Factor {
    pub fn new(scope: Vec<(NodeId, usize)>, table: Vec<f64>) -> Result<Self, DistError> {
        // Reuse the distribution's shape checks, minus normalization.
        let expected: usize = {
            let mut seen = NodeSet::new();
            let mut cells = 1usize;
            for (v, card) in &scope {
                if !seen.insert(v.clone()) {
                    return Err(DistError::DuplicateVariable(v.as_str().to_owned()));
                }
                if *card == 0 {
                    return Err(DistError::EmptyDomain(v.as_str().to_owned()));
                }
                cells *= card;
            }
            cells
        };
        if table.len() != expected {
            return Err(DistError::TableSizeMismatch {
                got: table.len(),
                expected,
            });
        }
        if let Some((index, &value)) = table
            .iter()
            .enumerate()
            .find(|(_, x)| !x.is_finite() || **x < 0.0)
        {
            return Err(DistError::InvalidProbability { index, value });
        }
        Ok(Factor { scope, table })
    }

    pub fn scope(&self) -> &[(NodeId, usize)] {
        &self.scope
    }

    pub fn scope_names(&self) -> NodeSet {
        self.scope.iter().map(|(v, _)| v.clone()).collect()
    }

    pub fn table(&self) -> &[f64] {
        &self.table
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.scope.len()];
        for i in (0..self.scope.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.scope[i + 1].1;
        }
        strides
    }
}

/// A list of factors, intended as a candidate product representation of a
/// joint table.
#[derive(Debug, Clone, PartialEq)]
pub struct FactorSet {
    factors: Vec<Factor>,
}

impl FactorSet {
    pub fn new(factors: Vec<Factor>) -> Self {
        FactorSet { factors }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }
}

/// The largest cellwise gap between the factor product and the joint table.
///
/// Every factor scope must be a subset of the distribution's variables with
/// matching cardinalities.
pub fn factor_product_defect(p: &FiniteDist, fs: &FactorSet) -> Result<f64, DistError> {
    // Map each factor variable to its position in the joint's variable list.
    let mut lookups: Vec<(Vec<usize>, &Factor)> = Vec::with_capacity(fs.factors.len());
    for f in &fs.factors {
        let mut pos = Vec::with_capacity(f.scope.len());
        for (v, card) in &f.scope {
            let Some(i) = p.vars().iter().position(|(w, _)| w == v) else {
                return Err(DistError::UnknownVariable(v.as_str().to_owned()));
            };
            let joint_card = p.vars()[i].1;
            if joint_card != *card {
                return Err(DistError::DomainMismatch {
                    var: v.as_str().to_owned(),
                    expected: joint_card,
                    got: *card,
                });
            }
            pos.push(i);
        }
        lookups.push((pos, f));
    }

    let mut worst = 0.0f64;
    for (asg, prob) in p.cells() {
        let mut product = 1.0f64;
        for (pos, f) in &lookups {
            let strides = f.strides();
            let mut idx = 0usize;
            for (k, &i) in pos.iter().enumerate() {
                idx += asg[i] as usize * strides[k];
            }
            product *= f.table[idx];
        }
        worst = worst.max((product - prob).abs());
    }
    Ok(worst)
}

/// Does the factor product reproduce the joint table within `tol` per cell?
pub fn factor_product_check(p: &FiniteDist, fs: &FactorSet, tol: f64) -> Result<bool, DistError> {
    Ok(factor_product_defect(p, fs)? <= tol)
}
