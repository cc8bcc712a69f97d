//! Hurwitz and Riemann zeta via shifted Euler-Maclaurin summation, with
//! analytic first derivatives in s.
//!
//! For zeta(s, a) the evaluator sums m direct terms and replaces the tail by
//! the Euler-Maclaurin expansion around x = a + m:
//!
//!   x^{1-s}/(s-1) + x^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} x^{-s-2j+1}
//!
//! Derivatives in s are propagated analytically through every term, so r = 1
//! evaluates zeta'(s, a) without numerical differencing.  The pair (m, j) is
//! chosen from a short ladder of candidates; each evaluation carries an error
//! estimate combining the first omitted correction with a rounding model, and
//! the call fails rather than return a value whose estimate exceeds the
//! requested tolerance.  For Re s well below zero the direct terms grow, so
//! the ladder prefers small shifts there to keep cancellation in check.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::{bernoulli_number, factorial, hurwitz_neg_int_poly, zeta_neg_int, Rational};

use super::gamma::{digamma, gamma};

/// Tuning knobs for the Euler-Maclaurin evaluator.
#[derive(Debug, Clone)]
pub struct EvalSettings {
    /// Terms summed directly before the expansion takes over.
    pub shift_terms: usize,
    /// Bernoulli correction terms kept in the expansion.
    pub correction_terms: usize,
    /// Absolute error target; evaluation fails if the internal estimate
    /// cannot be brought below this.
    pub target_tol: f64,
}

impl Default for EvalSettings {
    fn default() -> Self {
        EvalSettings {
            shift_terms: 30,
            correction_terms: 12,
            // Judged against max(1, |value|); the floor leaves headroom over
            // the conservative rounding model at Re s ~ -3 with r = 1.
            target_tol: 5e-12,
        }
    }
}

/// B_{2j}/(2j)! as f64, indexed by j; index 0 is unused.
fn correction_coefficients() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut v = vec![0.0; MAX_CORRECTIONS + 2];
        for (j, slot) in v.iter_mut().enumerate().skip(1) {
            let c = bernoulli_number(2 * j) / Rational::from_big_int(factorial(2 * j as u64));
            *slot = c.to_f64();
        }
        v
    })
}

const MAX_CORRECTIONS: usize = 25;

/// One Euler-Maclaurin evaluation at fixed (m, j); returns the value and an
/// absolute error estimate (truncation plus accumulated rounding).
fn em_once(s: Complex64, a: f64, r: u8, m: usize, j_max: usize) -> (Complex64, f64) {
    let mut sum = Complex64::default();
    let mut absacc = 0.0f64;
    for n in 0..m {
        let base = a + n as f64;
        let lb = base.ln();
        let t = (-s * lb).exp();
        let term = if r == 0 { t } else { -lb * t };
        sum += term;
        absacc += term.norm();
    }
    let x = a + m as f64;
    let lx = x.ln();
    let xs = (-s * lx).exp();
    let sm1 = s - 1.0;

    let integral = if r == 0 {
        x * xs / sm1
    } else {
        x * xs * (-lx / sm1 - 1.0 / (sm1 * sm1))
    };
    sum += integral;
    absacc += integral.norm();

    let half = if r == 0 { 0.5 * xs } else { -0.5 * lx * xs };
    sum += half;
    absacc += half.norm();

    let coefs = correction_coefficients();
    // Pochhammer pair: p = (s)_k, dp = d/ds (s)_k, extended factor by factor
    // so a zero factor at integer s never divides anything.
    let mut p = Complex64::new(1.0, 0.0);
    let mut dp = Complex64::default();
    let mut factors = 0usize;
    let x2 = x * x;
    let mut xpow = xs / x;
    for jj in 1..=j_max {
        while factors < 2 * jj - 1 {
            let f = s + factors as f64;
            dp = dp * f + p;
            p *= f;
            factors += 1;
        }
        let term = if r == 0 {
            coefs[jj] * p * xpow
        } else {
            coefs[jj] * (dp - lx * p) * xpow
        };
        sum += term;
        absacc += term.norm();
        xpow /= x2;
    }
    while factors < 2 * j_max + 1 {
        let f = s + factors as f64;
        dp = dp * f + p;
        p *= f;
        factors += 1;
    }
    let omitted = if r == 0 {
        coefs[j_max + 1].abs() * p.norm() * xpow.norm()
    } else {
        coefs[j_max + 1].abs() * (dp.norm() + (1.0 + lx.abs()) * p.norm()) * xpow.norm()
    };
    (sum, 4.0 * omitted + absacc * 3e-16)
}

/// Candidate (shift, corrections) pairs, cheapest plausible first.
fn plan(s: Complex64, a: f64, settings: &EvalSettings) -> Vec<(usize, usize)> {
    let m0 = settings.shift_terms;
    let j0 = settings.correction_terms.clamp(2, MAX_CORRECTIONS);
    let mut v: Vec<(usize, usize)> = Vec::with_capacity(8);
    if a >= 32.0 && s.re > 0.5 {
        // The argument already sits deep in the expansion's region.
        v.push((0, j0.max(14)));
    }
    if s.re < -0.5 {
        v.extend([
            (16, j0.max(20)),
            (8, 25),
            (16, 25),
            (4, 25),
            (m0.min(30), j0.max(20)),
            (2, 25),
            (64, 25),
        ]);
    } else {
        v.extend([
            (m0, j0),
            (m0, 25),
            (m0.max(64), 18),
            (m0.max(100), 22),
            (m0.max(200), 25),
        ]);
    }
    v.dedup();
    v
}

/// Core evaluator behind the public wrappers; `a` may be any positive shift.
pub(crate) fn hurwitz_em(s: Complex64, a: f64, r: u8, settings: &EvalSettings) -> Result<Complex64> {
    let tol = settings.target_tol;
    let mut best = f64::INFINITY;
    let mut best_val = Complex64::default();
    for (m, j) in plan(s, a, settings) {
        let (val, est) = em_once(s, a, r, m, j);
        // Absolute target with a relative escape hatch: huge values (e.g.
        // alpha near 0 at negative arguments) are only meaningful relatively.
        let scaled = est / val.norm().max(1.0);
        if scaled.is_finite() && scaled < best {
            best = scaled;
            best_val = val;
        }
        if best <= tol {
            return Ok(best_val);
        }
    }
    Err(Error::Convergence {
        what: "hurwitz zeta evaluation",
        estimate: best,
        tolerance: tol,
    })
}

fn check_order(r: u8) -> Result<()> {
    if r > 1 {
        return Err(Error::domain(format!(
            "derivative order {r} not supported (only r = 0, 1)"
        )));
    }
    Ok(())
}

/// Horner evaluation of zeta(-n, alpha) from cached f64 coefficients; hot in
/// quadrature, where the same small n recurs per node.
fn neg_int_eval(n: u32, alpha: f64) -> f64 {
    static CACHE: OnceLock<std::sync::Mutex<Vec<Option<Vec<f64>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| std::sync::Mutex::new(Vec::new()));
    let coeffs = {
        let mut guard = cache.lock().unwrap();
        if guard.len() <= n as usize {
            guard.resize(n as usize + 1, None);
        }
        guard[n as usize]
            .get_or_insert_with(|| {
                hurwitz_neg_int_poly(n as usize)
                    .coeffs()
                    .iter()
                    .map(|c| c.to_f64())
                    .collect()
            })
            .clone()
    };
    let mut acc = 0.0;
    for &c in coeffs.iter().rev() {
        acc = acc * alpha + c;
    }
    acc
}

fn near_nonpositive_int(s: Complex64) -> Option<u32> {
    if s.im != 0.0 || s.re > 0.0 {
        return None;
    }
    let n = (-s.re).round();
    if (s.re + n).abs() == 0.0 {
        Some(n as u32)
    } else {
        None
    }
}

/// zeta(s, alpha) for alpha > 0, or its s-derivative when r = 1.
pub fn hurwitz_zeta(s: Complex64, alpha: f64, r: u8, settings: &EvalSettings) -> Result<Complex64> {
    check_order(r)?;
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::domain(format!("hurwitz shift must be positive, got {alpha}")));
    }
    if (s - 1.0).norm() < 1e-9 {
        return Err(Error::Pole {
            what: "hurwitz zeta",
            where_: s,
        });
    }
    if r == 0 {
        if let Some(n) = near_nonpositive_int(s) {
            // At s = -n the function is the degree n+1 Bernoulli polynomial
            // form; evaluating it directly is exact and cheap.
            return Ok(Complex64::new(neg_int_eval(n, alpha), 0.0));
        }
    }
    hurwitz_em(s, alpha, r, settings)
}

/// zeta(s) (r = 0) or zeta'(s) (r = 1).  Arguments left of Re s = -1/2 go
/// through the functional equation
///   zeta(s) = chi(s) zeta(1-s),  chi(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s),
/// which keeps the Euler-Maclaurin side on well-conditioned ground.
pub fn riemann_zeta(s: Complex64, r: u8, settings: &EvalSettings) -> Result<Complex64> {
    check_order(r)?;
    if (s - 1.0).norm() < 1e-9 {
        return Err(Error::Pole {
            what: "riemann zeta",
            where_: s,
        });
    }
    if r == 0 {
        if let Some(n) = near_nonpositive_int(s) {
            return Ok(Complex64::new(zeta_neg_int(n as u64).to_f64(), 0.0));
        }
    }
    if s.re >= -0.5 {
        return hurwitz_em(s, 1.0, r, settings);
    }
    let one = Complex64::new(1.0, 0.0);
    let z1s = hurwitz_em(one - s, 1.0, 0, settings)?;
    let g = gamma(one - s)?;
    let pref = (s * 2.0f64.ln()).exp() * ((s - 1.0) * PI.ln()).exp() * g;
    let (sin_half, cos_half) = {
        let h = 0.5 * PI * s;
        (h.sin(), h.cos())
    };
    let chi = pref * sin_half;
    if r == 0 {
        return Ok(chi * z1s);
    }
    let dz1s = hurwitz_em(one - s, 1.0, 1, settings)?;
    let psi = digamma(one - s)?;
    let chi_prime = pref * (sin_half * ((2.0 * PI).ln() - psi) + 0.5 * PI * cos_half);
    Ok(chi_prime * z1s - chi * dz1s)
}

/// zeta'(-2m) for m >= 1, through zeta(2m+1):
///   zeta'(-2m) = (-1)^m (2m)! zeta(2m+1) / (2^{2m+1} pi^{2m}).
pub fn zeta_prime_neg_even(m: u32, settings: &EvalSettings) -> Result<f64> {
    if m == 0 {
        return Err(Error::domain("zeta_prime_neg_even needs m >= 1".to_string()));
    }
    let z = riemann_zeta(Complex64::new((2 * m + 1) as f64, 0.0), 0, settings)?.re;
    let fact = factorial(2 * m as u64)
        .to_f64()
        .ok_or_else(|| Error::domain(format!("(2m)! overflows f64 at m = {m}")))?;
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * fact * z / (2f64.powi(2 * m as i32 + 1) * PI.powi(2 * m as i32)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st() -> EvalSettings {
        EvalSettings::default()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeta_classical_values() {
        let z2 = riemann_zeta(c(2.0, 0.0), 0, &st()).unwrap().re;
        assert!((z2 - PI * PI / 6.0).abs() < 1e-13);
        let z3 = riemann_zeta(c(3.0, 0.0), 0, &st()).unwrap().re;
        assert!((z3 - 1.202_056_903_159_594_3).abs() < 1e-13);
        let z5 = riemann_zeta(c(5.0, 0.0), 0, &st()).unwrap().re;
        assert!((z5 - 1.036_927_755_143_369_9).abs() < 1e-13);
    }

    #[test]
    fn zeta_at_nonpositive_integers() {
        assert_eq!(riemann_zeta(c(0.0, 0.0), 0, &st()).unwrap().re, -0.5);
        assert_eq!(
            riemann_zeta(c(-1.0, 0.0), 0, &st()).unwrap().re,
            -1.0 / 12.0
        );
        assert_eq!(riemann_zeta(c(-2.0, 0.0), 0, &st()).unwrap().re, 0.0);
        assert_eq!(
            riemann_zeta(c(-3.0, 0.0), 0, &st()).unwrap().re,
            1.0 / 120.0
        );
    }

    #[test]
    fn zeta_pole_reported() {
        assert!(riemann_zeta(c(1.0, 0.0), 0, &st()).is_err());
        assert!(hurwitz_zeta(c(1.0, 0.0), 0.3, 0, &st()).is_err());
    }

    #[test]
    fn zeta_prime_values() {
        // zeta'(0) = -ln(2 pi)/2
        let d0 = riemann_zeta(c(0.0, 0.0), 1, &st()).unwrap().re;
        assert!((d0 + 0.5 * (2.0 * PI).ln()).abs() < 1e-11);
        // zeta'(-1) = 1/12 - ln A with Glaisher's constant
        let d1 = riemann_zeta(c(-1.0, 0.0), 1, &st()).unwrap().re;
        assert!((d1 + 0.165_421_143_700_450_9).abs() < 1e-11);
    }

    #[test]
    fn zeta_prime_neg_even_two_routes() {
        let via_formula = zeta_prime_neg_even(1, &st()).unwrap();
        let via_reflection = riemann_zeta(c(-2.0, 0.0), 1, &st()).unwrap().re;
        let z3 = 1.202_056_903_159_594_3;
        let expected = -z3 / (4.0 * PI * PI);
        assert!((via_formula - expected).abs() < 1e-13);
        assert!((via_reflection - expected).abs() < 1e-11);
        let m2 = zeta_prime_neg_even(2, &st()).unwrap();
        assert!((m2 - 7.983_811_450_268_6e-3).abs() < 1e-13);
        assert!(
            (riemann_zeta(c(-4.0, 0.0), 1, &st()).unwrap().re - m2).abs() < 1e-11
        );
    }

    #[test]
    fn hurwitz_half_shift() {
        let v = hurwitz_zeta(c(-1.0, 0.0), 0.5, 0, &st()).unwrap().re;
        assert!((v - 1.0 / 24.0).abs() < 1e-15);
    }

    #[test]
    fn hurwitz_matches_bernoulli_polynomials() {
        // The Euler-Maclaurin path itself, not the polynomial shortcut.
        for n in 0usize..=6 {
            let p = hurwitz_neg_int_poly(n);
            for &alpha in &[0.1, 0.25, 0.5, 0.75, 0.9] {
                let em = hurwitz_em(c(-(n as f64), 0.0), alpha, 0, &st()).unwrap();
                let exact = p.eval_f64(alpha);
                assert!(
                    (em.re - exact).abs() < 1e-11 && em.im.abs() < 1e-14,
                    "n = {n}, alpha = {alpha}: {} vs {exact}",
                    em.re
                );
            }
        }
    }

    #[test]
    fn hurwitz_derivative_at_half_shift() {
        // zeta(s, 1/2) = (2^s - 1) zeta(s), hence
        // zeta'(s, 1/2) = 2^s ln 2 zeta(s) + (2^s - 1) zeta'(s).
        for &sr in &[-0.5, -1.5, 0.3] {
            let s = c(sr, 0.0);
            let lhs = hurwitz_zeta(s, 0.5, 1, &st()).unwrap().re;
            let z = riemann_zeta(s, 0, &st()).unwrap().re;
            let dz = riemann_zeta(s, 1, &st()).unwrap().re;
            let p = 2.0f64.powf(sr);
            let rhs = p * 2.0f64.ln() * z + (p - 1.0) * dz;
            assert!((lhs - rhs).abs() < 1e-10, "s = {sr}: {lhs} vs {rhs}");
        }
    }

    #[test]
    fn hurwitz_shift_recurrence() {
        // zeta(s, a) = a^{-s} + zeta(s, a+1), and its s-derivative.
        for &(re, im) in &[(-2.3, 0.7), (0.4, -1.1), (-0.9, 0.0), (2.5, 0.3)] {
            let s = c(re, im);
            for &a in &[0.2, 0.55, 0.9] {
                let la = f64::ln(a);
                let head = (-s * la).exp();
                let lhs0 = hurwitz_zeta(s, a, 0, &st()).unwrap();
                let rhs0 = head + hurwitz_zeta(s, a + 1.0, 0, &st()).unwrap();
                assert!((lhs0 - rhs0).norm() < 1e-10, "r=0 fails at s={s}, a={a}");
                let lhs1 = hurwitz_zeta(s, a, 1, &st()).unwrap();
                let rhs1 = -la * head + hurwitz_zeta(s, a + 1.0, 1, &st()).unwrap();
                assert!((lhs1 - rhs1).norm() < 1e-10, "r=1 fails at s={s}, a={a}");
            }
        }
    }

    #[test]
    fn large_shift_fast_path() {
        // Tail evaluations start the expansion at the shift itself.
        let direct: f64 = (0..200).map(|n| ((n + 501) as f64).powf(-2.5)).sum::<f64>()
            + hurwitz_zeta(c(2.5, 0.0), 701.0, 0, &st()).unwrap().re;
        let tail = hurwitz_zeta(c(2.5, 0.0), 501.0, 0, &st()).unwrap().re;
        assert!((direct - tail).abs() < 1e-13);
    }

    #[test]
    fn unsupported_order_rejected() {
        assert!(hurwitz_zeta(c(0.5, 0.0), 0.5, 2, &st()).is_err());
        assert!(zeta_prime_neg_even(0, &st()).is_err());
    }
}
