//! Floating-point special functions: gamma, digamma, and Hurwitz/Riemann
//! zeta with first s-derivatives, each available through two independent
//! evaluation routes (Euler-Maclaurin and oscillatory-series) so results can
//! be cross-checked rather than trusted blind.

mod fourier;
mod gamma;
mod hurwitz;

pub use fourier::{hurwitz_fourier, hurwitz_fourier_sin};
pub use gamma::{digamma, gamma};
pub use hurwitz::{hurwitz_zeta, riemann_zeta, zeta_prime_neg_even, EvalSettings};
