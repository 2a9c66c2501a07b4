//! Finite-order Stieltjes calculus.
//!
//! The crate builds the truncated-Laurent kernels that replace the Stieltjes
//! kernel 1/(x+t) at finite smoothness order, computes the forward and inverse
//! finite-type transforms, and certifies membership in the function classes
//! S_k (finite-order Stieltjes), M_k (k-monotone), HM_k (hyperbolically
//! monotone of order k) and its power-regular subclass.
//!
//! Layering, bottom up:
//! - [`algebra`]: exact rationals, polynomials, rational functions, piecewise
//!   rational functions with jump records, and the hyperbolic v-chart;
//! - [`kernels`]: the kernel family (P_k, psi_k, Phi_k) with exact derivatives
//!   and the Dirac-mass extraction;
//! - [`model`]: a differentiation-closed symbolic language for candidate
//!   functions, with a plain-text grammar;
//! - [`transform`]: measures, the forward transform, and the finite-type
//!   inversion formula (exact on polynomial densities);
//! - [`membership`]: certified grid testers for the function classes;
//! - [`hyperbolic`]: the hyperbolic difference quotient machinery and the
//!   hypergeometric cross-checks;
//! - [`showcase`]: the worked identity families (Cauchy-type thresholds,
//!   GIG decomposition, kernel recursions, self-decomposable Levy objects);
//! - [`suite`]: the full verification suite behind `stieltjesk verify`.

pub mod algebra;
pub mod error;
pub mod kernels;
pub mod membership;
pub mod model;
pub mod numeric;
pub mod transform;

pub mod hyperbolic;
pub mod showcase;

pub mod cli;
pub mod suite;

pub use error::{Error, Result};
