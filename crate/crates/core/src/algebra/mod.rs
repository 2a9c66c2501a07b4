//! Exact substrate: arbitrary-precision rational scalars, dense polynomials,
//! rational functions in canonical form, piecewise rational functions with
//! jump bookkeeping, and the hyperbolic v-chart. Everything here is exact;
//! all values are immutable after construction and safe to share across
//! threads.

pub mod piecewise;
pub mod poly;
pub mod ratfn;
pub mod scalar;
pub mod vfield;

pub use piecewise::PiecewiseRatFn;
pub use poly::{Poly, QPoly};
pub use ratfn::{poly_of_ratfn, Limit, RatFn};
pub use scalar::{binomial, binomial_rat, mp_precision, set_mp_precision, Coeff, Mp, Rat, Real};
pub use vfield::VFieldFn;

use crate::error::{Error, Result};

/// The operator T_n(h) = x^n (x^{n-1} h)^{(2n-1)} on rational functions.
pub fn theta_op(h: &RatFn, n: usize) -> Result<RatFn> {
    if n == 0 {
        return Err(Error::InvalidParameter("theta_op needs n >= 1".into()));
    }
    let inner = h.mul_xpow(n as i64 - 1);
    Ok(inner.derivative_n(2 * n - 1).mul_xpow(n as i64))
}

/// Alternate route for the same operator: (x^{2n-1} h^{(n)})^{(n-1)}.
pub fn theta_op_alt(h: &RatFn, n: usize) -> Result<RatFn> {
    if n == 0 {
        return Err(Error::InvalidParameter("theta_op needs n >= 1".into()));
    }
    let inner = h.derivative_n(n).mul_xpow(2 * n as i64 - 1);
    Ok(inner.derivative_n(n - 1))
}
