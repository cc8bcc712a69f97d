//! Evaluation of the Tornheim double series
//!
//!   T(s1, s2, s3) = sum_{n1, n2 >= 1} n1^{-s1} n2^{-s2} (n1 + n2)^{-s3}
//!
//! in its absolute convergence region (Re(s2+s3) > 1, Re(s3+s1) > 1,
//! Re(s1+s2+s3) > 2), together with:
//!
//! * exact closed forms at integer arguments as rational combinations of
//!   pi powers and zeta'(-2m),
//! * the symbolic unit-interval calculus for integrals of products of
//!   Hurwitz zeta functions zeta(s, alpha) at nonpositive integer s,
//! * complex-argument Hurwitz zeta, gamma, and adaptive quadrature kernels,
//! * a verification harness that checks the functional identities linking
//!   those integrals to cosine-weighted combinations of T values, with
//!   every identity evaluated through two independent routes.

pub mod alpha;
pub mod closed_form;
pub mod error;
pub mod eval;
pub mod exact;
pub mod numeric;
pub mod quad;
pub mod verify;

pub use error::{Error, Result};
