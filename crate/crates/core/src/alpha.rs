//! Exact integrals over the shift parameter.
//!
//! For nonpositive integer argument, zeta(-n, alpha) is the polynomial
//! -B_{n+1}(alpha)/(n+1), so integrals of polynomial multiples reduce to
//! rational arithmetic.  With one derivative factor zeta'(s0, alpha) the
//! integral is no longer rational, but integration by parts against the
//! antiderivatives
//!
//!   d/da [zeta(s-1, a)] = (1-s) zeta(s, a)
//!   d/da [zeta(s-1, a)/(1-s)^2 + zeta'(s-1, a)/(1-s)] = zeta'(s, a)
//!
//! walks the argument down while differentiating the polynomial, and every
//! boundary term it sheds is rational or a rational multiple of zeta' at a
//! negative integer.  The result is an exact `ClosedForm`.

use crate::closed_form::ClosedForm;
use crate::error::{Error, Result};
use crate::exact::{
    factorial, hurwitz_neg_int_poly, zeta_neg_int, Rational, RationalPolynomial,
};
use crate::numeric::{riemann_zeta, zeta_prime_neg_even, EvalSettings};
use num_complex::Complex64;

/// int_0^1 p(a) zeta(s0, a) da (r = 0) or int_0^1 p(a) zeta'(s0, a) da
/// (r = 1), exactly, for integer s0 <= 0.
pub fn integrate_poly_zeta(p: &RationalPolynomial, s0: i64, r: u8) -> Result<ClosedForm> {
    if s0 > 0 {
        return Err(Error::domain(format!(
            "exact integration needs a nonpositive integer argument, got {s0}"
        )));
    }
    if r > 1 {
        return Err(Error::domain(format!(
            "derivative order {r} not supported (only r = 0, 1)"
        )));
    }
    if p.is_zero() {
        return Ok(ClosedForm::zero());
    }
    if r == 0 {
        let product = p.mul(&hurwitz_neg_int_poly((-s0) as usize));
        return Ok(ClosedForm::from_rational(product.integral01()));
    }
    if p.degree() <= 0 {
        // int_0^1 zeta'(s0, a) da = 0: every Fourier mode of the shift
        // integrates to zero, uniformly in s near s0.
        return Ok(ClosedForm::zero());
    }
    // By parts with the r = 1 antiderivative; both endpoint values of
    // zeta(s0-1, .) and zeta'(s0-1, .) coincide with the argument-(s0-1)
    // constants because s0 - 1 < 0.
    let inv = Rational::new(1, 1 - s0);
    let delta = p.eval(&Rational::one()) - p.eval(&Rational::zero());
    let mut acc = ClosedForm::zero();
    if !delta.is_zero() {
        let z = zeta_neg_int((1 - s0) as u64);
        acc = acc.add(&ClosedForm::from_rational(
            delta.clone() * z * inv.clone() * inv.clone(),
        ));
        acc = acc.add(&ClosedForm::zeta_prime_term(delta * inv.clone(), 0, s0 - 1));
    }
    let dp = p.derivative();
    let tail0 = integrate_poly_zeta(&dp, s0 - 1, 0)?;
    let tail1 = integrate_poly_zeta(&dp, s0 - 1, 1)?;
    acc = acc.add(&tail0.scale(&-(inv.clone() * inv.clone())));
    acc = acc.add(&tail1.scale(&-inv));
    Ok(acc)
}

/// int_0^1 zeta(-m, a) zeta(-n, a) da, exactly.
pub fn integrate_zeta_product(m: u32, n: u32) -> Rational {
    hurwitz_neg_int_poly(m as usize)
        .mul(&hurwitz_neg_int_poly(n as usize))
        .integral01()
}

/// Numeric value of a closed form; zeta' factors at even negative arguments
/// go through the odd-zeta route, the rest through the functional equation.
pub fn closedform_eval(cf: &ClosedForm, settings: &EvalSettings) -> Result<f64> {
    let pi = std::f64::consts::PI;
    let mut acc = 0.0;
    for term in cf.terms() {
        let mut v = term.coeff.to_f64() * pi.powi(term.pi_power as i32);
        if let Some(arg) = term.zeta_prime_arg {
            let factor = if arg < 0 && arg % 2 == 0 {
                zeta_prime_neg_even((-arg / 2) as u32, settings)?
            } else {
                riemann_zeta(Complex64::new(arg as f64, 0.0), 1, settings)?.re
            };
            v *= factor;
        }
        acc += v;
    }
    Ok(acc)
}
