//! Crate-wide error type.
//!
//! Every fallible numeric routine reports *why* it could not produce a value
//! at the requested tolerance instead of silently returning garbage: poles
//! are distinguished from domain violations, and truncation failures carry
//! the achieved estimate so callers can decide whether to retry with looser
//! settings.

use num_complex::Complex64;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Evaluation requested at a pole of the function.
    #[error("pole encountered: {what} at {where_}")]
    Pole { what: &'static str, where_: Complex64 },

    /// Arguments outside the domain a routine is specified for.
    #[error("domain error: {0}")]
    Domain(String),

    /// A truncated expansion could not reach the requested tolerance.
    #[error("convergence failure in {what}: estimated error {estimate:e} exceeds tolerance {tolerance:e}")]
    Convergence {
        what: &'static str,
        estimate: f64,
        tolerance: f64,
    },

    /// Adaptive quadrature ran out of subdivision depth or panel budget.
    #[error("quadrature failed to converge: estimated error {estimate:e} exceeds tolerance {tolerance:e} after {panels} panels")]
    QuadratureDepth {
        estimate: f64,
        tolerance: f64,
        panels: usize,
    },

    /// Malformed textual input (CLI argument or serialized form).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
