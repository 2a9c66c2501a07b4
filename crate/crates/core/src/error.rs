use thiserror::Error;

/// Errors surfaced by the library.
///
/// Construction and arithmetic on exact types panic on programming errors
/// (zero denominators and the like); `Error` covers conditions a caller can
/// legitimately hit with valid-looking input.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("derivative of order {order} is distributional at x = t (classical orders stop at {max_classical})")]
    DistributionalOrder { order: usize, max_classical: usize },

    #[error("function model cannot be differentiated: {0}")]
    Differentiation(String),

    #[error("model tree exceeded the node cap ({cap} nodes)")]
    NodeCap { cap: usize },

    #[error("function has a zero on (0,\u{221e}) near x = {near}; logarithmic derivative is unbounded")]
    ZeroFactor { near: f64 },

    #[error("divergent limit: {0}")]
    DivergentLimit(String),

    #[error("measure fails the integrability requirement: {0}")]
    NotIntegrable(String),

    #[error("computed density is negative at t = {location} (value {value:.3e}); input is not in the class")]
    NegativeDensity { location: f64, value: f64 },

    #[error("quadrature did not converge: achieved error {achieved:.3e} > requested {requested:.3e}")]
    QuadratureAccuracy { achieved: f64, requested: f64 },

    #[error("hypergeometric parameters out of range: {0}")]
    HypergeometricParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
