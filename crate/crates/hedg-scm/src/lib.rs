//! Structural causal models over directed graphs with hyperedges.
//!
//! The discrete engine ([`DiscreteMscm`]) attaches one independent noise
//! source to every stored hyperedge and a finite mechanism to every node,
//! solves the fixed-point equations of all strongly connected node sets, and
//! computes exact joint laws, interventions, and marginalizations. The
//! Gaussian engine ([`GaussianLinearSem`]) answers conditional-independence
//! queries in closed form from the implied covariance. The Monte-Carlo module
//! samples two reference cyclic systems and estimates conditional mutual
//! information against a permutation null.

mod discrete;
mod error;
mod gaussian;
mod mc;
mod ops;

pub use discrete::{DiscreteMscm, ErrorSpace, LoopSolutions, LoopTable};
pub use error::ScmError;
pub use gaussian::{gaussian_ci, gaussian_covariance, GaussianLinearSem};
pub use mc::{
    cmi_estimate, linearized_example, nonlinear_example, CmiEstimate, SampleMatrix,
    DEFAULT_CMI_BINS, DEFAULT_CMI_PERMUTATIONS, MIN_MC_SAMPLES,
};
pub use ops::{intervene, marginalize_mscm, InterventionSpec};
