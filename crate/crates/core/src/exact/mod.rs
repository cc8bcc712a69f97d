//! Exact rational arithmetic: big rationals, Bernoulli numbers and
//! polynomials, and the closed-form triple product integral that anchors
//! every floating-point result in the crate to something provable.

mod bernoulli;
mod polynomial;
mod rational;

pub use bernoulli::{bernoulli_number, zeta_neg_int, BernoulliCache};
pub use polynomial::{
    bernoulli_polynomial, hurwitz_neg_int_poly, triple_bernoulli_integral, RationalPolynomial,
};
pub use rational::{binomial, factorial, Rational};
