//! Linear structural equations with correlated Gaussian noise.
//!
//! A model assigns each node the equation `x = B x + e` with `e ~ N(0, Λ)`;
//! coefficient support follows the directed edges (self-loops included) and
//! noise correlation follows the hyperedges. When `I - B` is invertible the
//! model has the exact covariance `(I - B)^{-1} Λ (I - B)^{-T}`, which makes
//! conditional-independence queries answerable in closed form.

use hedg_core::{Hedg, NodeId, NodeSet};
use nalgebra::{Cholesky, DMatrix};

use crate::error::ScmError;

#[derive(Debug, Clone)]
pub struct GaussianLinearSem {
    graph: Hedg,
    order: Vec<NodeId>,
    b: DMatrix<f64>,
    lambda: DMatrix<f64>,
}

impl GaussianLinearSem {
    /// Rows and columns follow the nodes in ascending label order: `b[(i, j)]`
    /// is the coefficient of node `j` in the equation of node `i` and may be
    /// nonzero only along a directed edge `j -> i`; `lambda` must be symmetric
    /// with off-diagonal entries only between nodes joined by a hyperedge.
    pub fn new(graph: Hedg, b: DMatrix<f64>, lambda: DMatrix<f64>) -> Result<Self, ScmError> {
        let order: Vec<NodeId> = graph.nodes().iter().cloned().collect();
        let n = order.len();
        for m in [&b, &lambda] {
            if m.nrows() != n || m.ncols() != n {
                return Err(ScmError::MatrixShape {
                    rows: m.nrows(),
                    cols: m.ncols(),
                    n,
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                if b[(i, j)] != 0.0 && !graph.has_edge(&order[j], &order[i]) {
                    return Err(ScmError::CoefficientSupport {
                        child: order[i].as_str().to_owned(),
                        parent: order[j].as_str().to_owned(),
                    });
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if lambda[(i, j)] != lambda[(j, i)] {
                    return Err(ScmError::AsymmetricNoise(
                        order[i].as_str().to_owned(),
                        order[j].as_str().to_owned(),
                    ));
                }
                if lambda[(i, j)] != 0.0 && !graph.bidirected(&order[i], &order[j]) {
                    return Err(ScmError::NoiseSupport {
                        a: order[i].as_str().to_owned(),
                        b: order[j].as_str().to_owned(),
                    });
                }
            }
        }
        Ok(GaussianLinearSem {
            graph,
            order,
            b,
            lambda,
        })
    }

    pub fn graph(&self) -> &Hedg {
        &self.graph
    }

    /// Node order underlying the matrix indices (ascending labels).
    pub fn order(&self) -> &[NodeId] {
        &self.order
    }

    pub fn coefficients(&self) -> &DMatrix<f64> {
        &self.b
    }

    pub fn noise_covariance(&self) -> &DMatrix<f64> {
        &self.lambda
    }

    pub fn index_of(&self, v: &NodeId) -> Option<usize> {
        self.order.binary_search(v).ok()
    }

    /// The covariance `(I - B)^{-1} Λ (I - B)^{-T}`, symmetrized against
    /// rounding.
    pub fn covariance(&self) -> Result<DMatrix<f64>, ScmError> {
        let n = self.order.len();
        let ib = DMatrix::<f64>::identity(n, n) - &self.b;
        let inv = ib.try_inverse().ok_or(ScmError::SingularSystem)?;
        let sigma = &inv * &self.lambda * inv.transpose();
        let mut sym = sigma.clone() + sigma.transpose();
        sym *= 0.5;
        Ok(sym)
    }

    /// Largest absolute entry of `cov(X, Y | Z)`, the conditional
    /// cross-covariance block.
    pub fn conditional_cross_cov(
        &self,
        x: &NodeSet,
        y: &NodeSet,
        z: &NodeSet,
    ) -> Result<f64, ScmError> {
        let sigma = self.covariance()?;
        let xi = self.indices(x)?;
        let yi = self.indices(y)?;
        let zi = self.indices(z)?;
        let sxy = block(&sigma, &xi, &yi);
        let cond = if zi.is_empty() {
            sxy
        } else {
            let szz = block(&sigma, &zi, &zi);
            let chol = Cholesky::new(szz).ok_or(ScmError::SingularConditioning)?;
            let szy = block(&sigma, &zi, &yi);
            let sxz = block(&sigma, &xi, &zi);
            sxy - sxz * chol.solve(&szy)
        };
        Ok(cond.iter().map(|v| v.abs()).fold(0.0, f64::max))
    }

    fn indices(&self, s: &NodeSet) -> Result<Vec<usize>, ScmError> {
        s.iter()
            .map(|v| {
                self.index_of(v)
                    .ok_or_else(|| ScmError::UnknownVariable(v.as_str().to_owned()))
            })
            .collect()
    }
}

fn block(sigma: &DMatrix<f64>, rows: &[usize], cols: &[usize]) -> DMatrix<f64> {
    DMatrix::from_fn(rows.len(), cols.len(), |a, b| sigma[(rows[a], cols[b])])
}

/// The implied covariance of the model.
pub fn gaussian_covariance(s: &GaussianLinearSem) -> Result<DMatrix<f64>, ScmError> {
    s.covariance()
}

/// True iff every conditional cross-covariance between `x` and `y` given `z`
/// vanishes below `tol`.
pub fn gaussian_ci(
    s: &GaussianLinearSem,
    x: &NodeSet,
    y: &NodeSet,
    z: &NodeSet,
    tol: f64,
) -> Result<bool, ScmError> {
    Ok(s.conditional_cross_cov(x, y, z)? < tol)
}
