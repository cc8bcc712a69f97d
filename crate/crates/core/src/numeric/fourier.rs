//! Hurwitz zeta from its oscillatory series representation
//!
//!   zeta(s, a) = Gamma(1-s) sum_{n != 0} (2 pi i n)^{s-1} e^{2 pi i n a},
//!
//! valid for Re s < 1 and 0 < a < 1, with the principal branch
//! log(2 pi i n) = ln(2 pi |n|) + i (pi/2) sgn n.  The two one-sided sums
//! F(x) = sum_{m >= 1} m^{s-1} e^{2 pi i m x} converge only conditionally, so
//! the tail is accelerated by K-fold summation by parts against the geometric
//! weights.  This route shares nothing with the Euler-Maclaurin evaluator,
//! which makes the two a genuine cross-check of each other.
//!
//! Both the exponential assembly above and the equivalent sine form
//!   2^s pi^{s-1} Gamma(1-s) sum_n sin(pi s/2 + 2 pi n a) n^{s-1}
//! are provided; they recombine the same one-sided sums with different
//! prefactor algebra.

use std::collections::VecDeque;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exact::binomial;

use super::gamma::{digamma, gamma};
use super::hurwitz::EvalSettings;

fn series_term(sm1: Complex64, n: f64, with_log: bool) -> Complex64 {
    let ln = n.ln();
    let v = (sm1 * ln).exp();
    if with_log {
        v * ln
    } else {
        v
    }
}

/// sum_{m >= 1} m^{s-1} (ln m)^q e^{2 pi i m x} for q in {0, 1}, Re s < 1.
///
/// Head terms are summed directly; the rest is rewritten through repeated
/// summation by parts (difference order K) until the differenced terms decay
/// fast enough to truncate with a certified bound.
fn periodic_sum(sm1: Complex64, x: f64, with_log: bool, tol: f64) -> Result<Complex64> {
    let z = Complex64::from_polar(1.0, 2.0 * PI * x);
    let omz = Complex64::new(1.0, 0.0) - z;
    let q = 1.0 / omz.norm();
    if !q.is_finite() || q > 64.0 {
        return Err(Error::domain(format!(
            "oscillatory series needs the phase away from integers, got x = {x}"
        )));
    }
    let sigma = sm1.re;
    let k = ((sigma.ceil() as i64) + 6).clamp(6, 10) as usize;
    let head = 48.0_f64.max(10.0 * q).max(4.0 * sm1.norm()) as usize;

    let mut sum = Complex64::default();
    let mut zn = Complex64::new(1.0, 0.0);
    for n in 1..=head {
        zn *= z;
        sum += series_term(sm1, n as f64, with_log) * zn;
    }
    let zn1 = zn * z;

    // Boundary terms: with w = z/(1-z) and D the forward difference
    // a_n - a_{n+1},
    //   sum_{n>N} a_n z^n = z^{N+1}/(1-z) sum_{k<K} (-w)^k (D^k a)_{N+1}
    //                       + (-w)^K sum_{n>N} (D^K a)_n z^n.
    let w = z / omz;
    let mut window: VecDeque<Complex64> = (0..=k)
        .map(|j| series_term(sm1, (head + 1 + j) as f64, with_log))
        .collect();
    let mut diffs: Vec<Complex64> = window.iter().copied().collect();
    let mut boundary = Complex64::default();
    let mut mw = Complex64::new(1.0, 0.0);
    for _ in 0..k {
        boundary += mw * diffs[0];
        for j in 0..diffs.len() - 1 {
            diffs[j] = diffs[j] - diffs[j + 1];
        }
        diffs.pop();
        mw *= -w;
    }
    sum += zn1 / omz * boundary;

    // mw is now (-w)^K; sum the differenced tail until its own bound clears.
    let sbin: Vec<f64> = (0..=k)
        .map(|j| {
            let b = binomial(k as u64, j as u64).to_f64().unwrap();
            if j % 2 == 0 {
                b
            } else {
                -b
            }
        })
        .collect();
    let wk = mw.norm();
    let decay = k as f64 - 1.0 - sigma;
    let tol_part = tol / 4.0;
    let mut tail = Complex64::default();
    let mut zt = zn1;
    let mut n = head + 1;
    loop {
        let mut dk = Complex64::default();
        for (j, &b) in sbin.iter().enumerate() {
            dk += b * window[j];
        }
        tail += dk * zt;
        let logfac = if with_log { 1.0 + (n as f64).ln() } else { 1.0 };
        let bound = wk * dk.norm() * (n as f64) / decay * 1.5 * logfac;
        if n > head + 16 && bound <= tol_part {
            break;
        }
        if n - head > 300_000 {
            return Err(Error::Convergence {
                what: "oscillatory tail",
                estimate: bound,
                tolerance: tol_part,
            });
        }
        window.pop_front();
        window.push_back(series_term(sm1, (n + k + 1) as f64, with_log));
        zt *= z;
        n += 1;
    }
    Ok(sum + mw * tail)
}

struct Pieces {
    g: Complex64,
    tp: Complex64,
    ep: Complex64,
    em: Complex64,
    fp: Complex64,
    fm: Complex64,
}

fn common(s: Complex64, alpha: f64, r: u8, settings: &EvalSettings) -> Result<Pieces> {
    if r > 1 {
        return Err(Error::domain(format!(
            "derivative order {r} not supported (only r = 0, 1)"
        )));
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "series representation needs 0 < alpha < 1, got {alpha}"
        )));
    }
    if s.re >= 1.0 - 1e-9 {
        return Err(Error::domain(format!(
            "series representation needs Re s < 1, got {s}"
        )));
    }
    let sm1 = s - 1.0;
    let g = gamma(Complex64::new(1.0, 0.0) - s)?;
    let tp = (sm1 * (2.0 * PI).ln()).exp();
    let scale = (g * tp).norm().max(1.0);
    let tol = settings.target_tol / (4.0 * scale);
    let half_i_pi = Complex64::new(0.0, 0.5 * PI);
    Ok(Pieces {
        g,
        tp,
        ep: (half_i_pi * sm1).exp(),
        em: (-half_i_pi * sm1).exp(),
        fp: periodic_sum(sm1, alpha, false, tol)?,
        fm: periodic_sum(sm1, 1.0 - alpha, false, tol)?,
    })
}

/// zeta(s, alpha) or zeta'(s, alpha) through the exponential assembly.
pub fn hurwitz_fourier(s: Complex64, alpha: f64, r: u8, settings: &EvalSettings) -> Result<Complex64> {
    let p = common(s, alpha, r, settings)?;
    let zeta = p.g * p.tp * (p.ep * p.fp + p.em * p.fm);
    if r == 0 {
        return Ok(zeta);
    }
    let sm1 = s - 1.0;
    let scale = (p.g * p.tp).norm().max(1.0);
    let tol = settings.target_tol / (4.0 * scale);
    let gp = periodic_sum(sm1, alpha, true, tol)?;
    let gm = periodic_sum(sm1, 1.0 - alpha, true, tol)?;
    let psi = digamma(Complex64::new(1.0, 0.0) - s)?;
    let l2p = Complex64::new((2.0 * PI).ln(), 0.0);
    let ip2 = Complex64::new(0.0, 0.5 * PI);
    Ok(-psi * zeta
        + p.g * p.tp * (p.ep * ((l2p + ip2) * p.fp + gp) + p.em * ((l2p - ip2) * p.fm + gm)))
}

/// Same values through the sine assembly; a deliberate second arrangement of
/// the prefactor algebra.
pub fn hurwitz_fourier_sin(
    s: Complex64,
    alpha: f64,
    r: u8,
    settings: &EvalSettings,
) -> Result<Complex64> {
    let p = common(s, alpha, r, settings)?;
    let half_i_pi_s = Complex64::new(0.0, 0.5 * PI) * s;
    let eps = half_i_pi_s.exp();
    let ems = (-half_i_pi_s).exp();
    let two_i = Complex64::new(0.0, 2.0);
    let sin_sum = (eps * p.fp - ems * p.fm) / two_i;
    let pref = (s * 2.0f64.ln()).exp() * ((s - 1.0) * PI.ln()).exp() * p.g;
    let zeta = pref * sin_sum;
    if r == 0 {
        return Ok(zeta);
    }
    let sm1 = s - 1.0;
    let scale = pref.norm().max(1.0);
    let tol = settings.target_tol / (4.0 * scale);
    let gp = periodic_sum(sm1, alpha, true, tol)?;
    let gm = periodic_sum(sm1, 1.0 - alpha, true, tol)?;
    let psi = digamma(Complex64::new(1.0, 0.0) - s)?;
    let cos_sum = (eps * p.fp + ems * p.fm) / 2.0;
    let sin_log_sum = (eps * gp - ems * gm) / two_i;
    Ok(((2.0 * PI).ln() - psi) * zeta + pref * (0.5 * PI * cos_sum + sin_log_sum))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::hurwitz::hurwitz_zeta;

    fn st() -> EvalSettings {
        EvalSettings::default()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn known_value_at_half() {
        let v = hurwitz_fourier(c(-1.0, 0.0), 0.5, 0, &st()).unwrap();
        assert!((v.re - 1.0 / 24.0).abs() < 1e-12, "{v}");
        assert!(v.im.abs() < 1e-12);
        let w = hurwitz_fourier_sin(c(-1.0, 0.0), 0.5, 0, &st()).unwrap();
        assert!((w.re - 1.0 / 24.0).abs() < 1e-12);
    }

    #[test]
    fn agrees_with_euler_maclaurin() {
        let points = [
            c(-3.0, 0.0),
            c(-2.2, 0.0),
            c(-1.0, 0.7),
            c(-0.4, -1.1),
            c(0.5, 0.0),
            c(0.3, 0.8),
        ];
        for &s in &points {
            for &alpha in &[0.12, 0.37, 0.5, 0.81] {
                for r in 0u8..=1 {
                    let f = hurwitz_fourier(s, alpha, r, &st()).unwrap();
                    let e = hurwitz_zeta(s, alpha, r, &st()).unwrap();
                    assert!(
                        (f - e).norm() < 1e-9,
                        "s = {s}, alpha = {alpha}, r = {r}: {f} vs {e}"
                    );
                }
            }
        }
    }

    #[test]
    fn sine_and_exponential_assemblies_agree() {
        for &s in &[c(-2.7, 0.4), c(-0.9, 0.0), c(0.6, -0.5)] {
            for &alpha in &[0.2, 0.55, 0.9] {
                for r in 0u8..=1 {
                    let a = hurwitz_fourier(s, alpha, r, &st()).unwrap();
                    let b = hurwitz_fourier_sin(s, alpha, r, &st()).unwrap();
                    assert!(
                        (a - b).norm() < 1e-10,
                        "s = {s}, alpha = {alpha}, r = {r}: {a} vs {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn domain_guards() {
        assert!(hurwitz_fourier(c(-1.0, 0.0), 0.0, 0, &st()).is_err());
        assert!(hurwitz_fourier(c(-1.0, 0.0), 1.0, 0, &st()).is_err());
        assert!(hurwitz_fourier(c(1.5, 0.0), 0.5, 0, &st()).is_err());
        assert!(hurwitz_fourier(c(-1.0, 0.0), 0.5, 2, &st()).is_err());
    }
}
