//! Exact probability distributions over finite variable domains.
//!
//! [`FiniteDist`] stores a joint probability table over named variables with
//! finite domains `{0, …, k-1}`.  On top of it sit the three oracles the rest
//! of the workspace leans on:
//!
//! * a conditional-independence test ([`FiniteDist::is_ci`]) that checks the
//!   cellwise identity `p(x,y,z)·p(z) = p(x,z)·p(y,z)` to a tolerance;
//! * a factor-product verifier ([`factor_product_check`]) deciding whether a
//!   table equals a pointwise product of given factors;
//! * iterative proportional fitting ([`ipf_fit`]), which projects a
//!   distribution onto the set factorizing over given cliques and reports the
//!   total-variation gap — small when a factorization exists, visibly large
//!   when the support structure forbids one.
//!
//! Everything is exact arithmetic on `f64` tables; nothing is sampled.

mod dist;
mod error;
mod factor;
mod ipf;

pub use dist::{FiniteDist, DEFAULT_CI_TOL};
pub use error::DistError;
pub use factor::{factor_product_check, Factor, FactorSet};
pub use ipf::{ipf_fit, IpfFit, DEFAULT_IPF_MAX_ITERS, DEFAULT_IPF_TOL};
