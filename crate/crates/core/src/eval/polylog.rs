//! Li_s(e^{-t}) on the positive half line: a direct series for t away from
//! zero, and symbolic expansions around t = 0 used to integrate through the
//! origin exactly.
//!
//! For noninteger s (and every s with Re s <= 0),
//!
//!   Li_s(e^{-t}) = Gamma(1-s) t^{s-1} + sum_{k>=0} zeta(s-k) (-t)^k / k!,
//!
//! while at a positive integer s = n the colliding pole and zeta(1) terms
//! merge into a log:
//!
//!   Li_n(e^{-t}) = ((-t)^{n-1}/(n-1)!) (H_{n-1} - ln t)
//!                  + sum_{k>=0, k != n-1} zeta(n-k) (-t)^k / k!.
//!
//! Both hold for |t| < 2 pi.  Terms are kept as (coefficient, t-power,
//! log-power) triples so products of two expansions stay symbolic and each
//! monomial t^w ln^p t integrates in closed form.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::factorial;
use crate::numeric::{riemann_zeta, EvalSettings};
use num_traits::ToPrimitive;

/// One monomial c * t^w * (ln t)^p of an expansion around t = 0.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ExpTerm {
    pub c: Complex64,
    pub w: Complex64,
    pub p: u8,
}

pub(crate) fn positive_int(s: Complex64) -> Option<u32> {
    if s.im != 0.0 || s.re < 0.5 {
        return None;
    }
    let n = s.re.round();
    if (s.re - n).abs() == 0.0 {
        Some(n as u32)
    } else {
        None
    }
}

/// Direct series sum_{k>=1} e^{-kt} k^{-s}; fast for t >= 1.
pub(crate) fn li_series(
    s: Complex64,
    t: f64,
    max_terms: usize,
    tol: f64,
) -> Result<Complex64> {
    let mut sum = Complex64::default();
    let e = (-t).exp();
    let mut ek = 1.0;
    for k in 1..=max_terms.max(8) {
        ek *= e;
        let term = ek * (-s * (k as f64).ln()).exp();
        sum += term;
        if term.norm() < tol * 1e-2 && k > 4 {
            return Ok(sum);
        }
    }
    Err(Error::Convergence {
        what: "polylog series",
        estimate: ek,
        tolerance: tol,
    })
}

/// Expansion of Li_s(e^{-t}) around t = 0, to order K in the analytic part.
pub(crate) fn li_expansion(
    s: Complex64,
    k_terms: usize,
    eval: &EvalSettings,
) -> Result<Vec<ExpTerm>> {
    let mut terms = Vec::with_capacity(k_terms + 2);
    let mut sign = 1.0;
    let mut kfact = 1.0;
    if let Some(n) = positive_int(s) {
        let h: f64 = (1..n).map(|j| 1.0 / j as f64).sum();
        let nf = factorial(n as u64 - 1).to_f64().unwrap();
        let lead = if n % 2 == 1 { 1.0 / nf } else { -1.0 / nf };
        let w = Complex64::new((n - 1) as f64, 0.0);
        if h != 0.0 {
            terms.push(ExpTerm {
                c: Complex64::new(lead * h, 0.0),
                w,
                p: 0,
            });
        }
        terms.push(ExpTerm {
            c: Complex64::new(-lead, 0.0),
            w,
            p: 1,
        });
        for k in 0..=k_terms {
            if k + 1 != n as usize {
                let z = riemann_zeta(Complex64::new((n as f64) - k as f64, 0.0), 0, eval)?;
                terms.push(ExpTerm {
                    c: z * (sign / kfact),
                    w: Complex64::new(k as f64, 0.0),
                    p: 0,
                });
            }
            sign = -sign;
            kfact *= (k + 1) as f64;
        }
    } else {
        let g = crate::numeric::gamma(Complex64::new(1.0, 0.0) - s)?;
        terms.push(ExpTerm {
            c: g,
            w: s - 1.0,
            p: 0,
        });
        for k in 0..=k_terms {
            let z = riemann_zeta(s - k as f64, 0, eval)?;
            terms.push(ExpTerm {
                c: z * (sign / kfact),
                w: Complex64::new(k as f64, 0.0),
                p: 0,
            });
            sign = -sign;
            kfact *= (k + 1) as f64;
        }
    }
    Ok(terms)
}

/// int_0^1 t^w ln^p t dt for Re w > -1 and p <= 2 (the unit upper limit
/// makes the antiderivative collapse to inverse powers of w + 1).
pub(crate) fn unit_power_log_integral(w: Complex64, p: u8) -> Complex64 {
    let d = w + 1.0;
    match p {
        0 => 1.0 / d,
        1 => -1.0 / (d * d),
        _ => 2.0 / (d * d * d),
    }
}
