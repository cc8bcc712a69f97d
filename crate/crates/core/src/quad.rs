//! Adaptive Gauss-Legendre quadrature on (0, 1), tuned for integrands built
//! from products of Hurwitz zeta factors.
//!
//! Panels live in a priority queue keyed by an embedded error estimate
//! (full-order vs half-order rule); the worst panel is bisected until the
//! summed estimates clear the tolerance.  Endpoint singularities such as
//! alpha^{-s} or ln(alpha) drive the subdivision into a geometric cascade at
//! the ends, which is why the depth limit is generous: a panel of width
//! 2^{-40} is routine, not pathological.  If the budget runs out the call
//! fails with the achieved estimate instead of returning a guess.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::{hurwitz_zeta, EvalSettings};

#[derive(Debug, Clone)]
pub struct QuadSettings {
    /// Nodes per panel for the main rule; the error reference uses half as
    /// many.
    pub gauss_order: usize,
    /// Deepest bisection level a panel may reach.
    pub max_depth: usize,
    /// Cap on the total number of panels.
    pub max_panels: usize,
    /// Absolute tolerance on the whole integral.
    pub target_tol: f64,
}

impl Default for QuadSettings {
    fn default() -> Self {
        QuadSettings {
            gauss_order: 20,
            max_depth: 60,
            max_panels: 4096,
            target_tol: 1e-10,
        }
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
pub(crate) fn gauss_rule(n: usize) -> Arc<(Vec<f64>, Vec<f64>)> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<(Vec<f64>, Vec<f64>)>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| {
            let mut xs = vec![0.0; n];
            let mut ws = vec![0.0; n];
            for i in 0..n {
                // Newton iteration on P_n from the classic cosine initial guess.
                let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
                for _ in 0..100 {
                    let (p, dp) = legendre_with_derivative(n, x);
                    let dx = p / dp;
                    x -= dx;
                    if dx.abs() < 1e-15 {
                        break;
                    }
                }
                let (_, dp) = legendre_with_derivative(n, x);
                xs[i] = x;
                ws[i] = 2.0 / ((1.0 - x * x) * dp * dp);
            }
            Arc::new((xs, ws))
        })
        .clone()
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

struct Panel {
    err: f64,
    a: f64,
    h: f64,
    depth: usize,
    value: Complex64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.total_cmp(&other.err)
    }
}

fn eval_panel<F>(f: &mut F, a: f64, h: f64, hi: &(Vec<f64>, Vec<f64>), lo: &(Vec<f64>, Vec<f64>)) -> Result<(Complex64, f64)>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let mid = a + 0.5 * h;
    let half = 0.5 * h;
    let mut sum_hi = Complex64::default();
    for (&x, &w) in hi.0.iter().zip(hi.1.iter()) {
        sum_hi += w * f(mid + half * x)?;
    }
    sum_hi *= half;
    let mut sum_lo = Complex64::default();
    for (&x, &w) in lo.0.iter().zip(lo.1.iter()) {
        sum_lo += w * f(mid + half * x)?;
    }
    sum_lo *= half;
    Ok((sum_hi, (sum_hi - sum_lo).norm()))
}

/// Integrate f over (0, 1); f is never called at the endpoints themselves.
pub fn integrate_01<F>(mut f: F, settings: &QuadSettings) -> Result<Complex64>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let n = settings.gauss_order.clamp(4, 64);
    let hi = gauss_rule(n);
    let lo = gauss_rule((n / 2).max(2));
    let tol = settings.target_tol;

    let mut heap: BinaryHeap<Panel> = BinaryHeap::new();
    let mut live_err = 0.0;
    let mut frozen_value = Complex64::default();
    let mut frozen_err = 0.0;
    let mut panels = 4usize;
    for i in 0..4 {
        let a = i as f64 / 4.0;
        let (value, err) = eval_panel(&mut f, a, 0.25, &hi, &lo)?;
        live_err += err;
        heap.push(Panel {
            err,
            a,
            h: 0.25,
            depth: 2,
            value,
        });
    }

    loop {
        if frozen_err + live_err <= tol {
            let mut total = frozen_value;
            for p in heap.iter() {
                total += p.value;
            }
            return Ok(total);
        }
        let worst = match heap.pop() {
            Some(p) => p,
            None => {
                return Err(Error::QuadratureDepth {
                    estimate: frozen_err,
                    tolerance: tol,
                    panels,
                })
            }
        };
        live_err -= worst.err;
        if worst.depth >= settings.max_depth || panels >= settings.max_panels {
            frozen_value += worst.value;
            frozen_err += worst.err;
            if frozen_err > tol {
                return Err(Error::QuadratureDepth {
                    estimate: frozen_err + live_err,
                    tolerance: tol,
                    panels,
                });
            }
            continue;
        }
        let h2 = 0.5 * worst.h;
        for k in 0..2 {
            let a = worst.a + k as f64 * h2;
            let (value, err) = eval_panel(&mut f, a, h2, &hi, &lo)?;
            live_err += err;
            heap.push(Panel {
                err,
                a,
                h: h2,
                depth: worst.depth + 1,
                value,
            });
        }
        panels += 1;
    }
}

/// One zeta factor of an integrand over the shift variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaFactor {
    pub s: Complex64,
    /// Derivative order in s (0 or 1).
    pub r: u8,
    /// Evaluate at 1 - alpha instead of alpha.
    pub reflected: bool,
}

/// A product of zeta factors, integrated over alpha in (0, 1).
#[derive(Debug, Clone, Default)]
pub struct IntegrandSpec {
    pub factors: Vec<ZetaFactor>,
}

impl IntegrandSpec {
    pub fn new(factors: Vec<ZetaFactor>) -> Self {
        IntegrandSpec { factors }
    }
}

/// int_0^1 prod_k zeta^{(r_k)}(s_k, alpha or 1-alpha) d alpha.
///
/// Every factor must have Re s < 1; integrability at the endpoints is the
/// caller's responsibility and shows up as a quadrature failure otherwise.
pub fn alpha_product_integral(
    spec: &IntegrandSpec,
    quad: &QuadSettings,
    eval: &EvalSettings,
) -> Result<Complex64> {
    for fac in &spec.factors {
        if fac.s.re >= 1.0 - 1e-9 {
            return Err(Error::domain(format!(
                "zeta factor at s = {} is outside Re s < 1",
                fac.s
            )));
        }
        if fac.r > 1 {
            return Err(Error::domain(format!(
                "derivative order {} not supported (only r = 0, 1)",
                fac.r
            )));
        }
    }
    // Identical factors appear together (squares, cubes); evaluate once.
    let mut grouped: Vec<(ZetaFactor, i32)> = Vec::new();
    for fac in &spec.factors {
        match grouped.iter_mut().find(|(g, _)| g == fac) {
            Some((_, count)) => *count += 1,
            None => grouped.push((*fac, 1)),
        }
    }
    // Both endpoints can be singular (reflected factors blow up at 1), and
    // near 1 the float grid is too coarse for deep bisection.  Split at 1/2
    // and fold each half onto the origin, where resolution is unbounded;
    // beta = u/2 is exact, so nodes crowd the singular point losslessly.
    let half = |toward_one: bool, quad: &QuadSettings| {
        let mut tuned = quad.clone();
        tuned.target_tol = quad.target_tol / 2.0;
        integrate_01(
            |u| {
                let beta = 0.5 * u;
                let mut prod = Complex64::new(1.0, 0.0);
                for (fac, count) in &grouped {
                    // Left half: alpha = beta; right half: alpha = 1 - beta.
                    let arg = if fac.reflected == toward_one {
                        beta
                    } else {
                        1.0 - beta
                    };
                    let v = hurwitz_zeta(fac.s, arg, fac.r, eval)?;
                    prod *= v.powi(*count);
                }
                Ok(0.5 * prod)
            },
            &tuned,
        )
    };
    Ok(half(false, quad)? + half(true, quad)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs() -> QuadSettings {
        QuadSettings::default()
    }

    #[test]
    fn polynomial_is_exact() {
        let v = integrate_01(|x| Ok(Complex64::new(x.powi(5), 0.0)), &qs()).unwrap();
        assert!((v.re - 1.0 / 6.0).abs() < 1e-14);
        assert!(v.im.abs() < 1e-14);
    }

    #[test]
    fn log_singularity() {
        let v = integrate_01(|x| Ok(Complex64::new(x.ln(), 0.0)), &qs()).unwrap();
        assert!((v.re + 1.0).abs() < 1e-10, "{}", v.re);
    }

    #[test]
    fn algebraic_singularity() {
        // int_0^1 x^{-1/2} = 2
        let v = integrate_01(|x| Ok(Complex64::new(1.0 / x.sqrt(), 0.0)), &qs()).unwrap();
        assert!((v.re - 2.0).abs() < 1e-9, "{}", v.re);
    }

    #[test]
    fn nonintegrable_fails_honestly() {
        let err = integrate_01(|x| Ok(Complex64::new(x.powf(-1.2), 0.0)), &qs());
        assert!(matches!(err, Err(Error::QuadratureDepth { .. })));
    }

    #[test]
    fn zeta_square_product() {
        // int_0^1 zeta(0, a)^2 da = int_0^1 (1/2 - a)^2 da = 1/12
        let spec = IntegrandSpec::new(vec![
            ZetaFactor {
                s: Complex64::default(),
                r: 0,
                reflected: false,
            };
            2
        ]);
        let v = alpha_product_integral(&spec, &qs(), &EvalSettings::default()).unwrap();
        assert!((v.re - 1.0 / 12.0).abs() < 1e-12, "{}", v.re);
    }

    #[test]
    fn derivative_factor_integrates_to_zero() {
        // int_0^1 zeta'(0, a) da = 0, with a log singularity at 0.
        let spec = IntegrandSpec::new(vec![ZetaFactor {
            s: Complex64::default(),
            r: 1,
            reflected: false,
        }]);
        let v = alpha_product_integral(&spec, &qs(), &EvalSettings::default()).unwrap();
        assert!(v.norm() < 1e-9, "{v}");
    }

    #[test]
    fn cubed_shift_against_exact_route() {
        // int_0^1 zeta(0,a)^2 zeta'(0,a) da = -zeta'(-2)
        let z = ZetaFactor {
            s: Complex64::default(),
            r: 0,
            reflected: false,
        };
        let spec = IntegrandSpec::new(vec![
            z,
            z,
            ZetaFactor {
                s: Complex64::default(),
                r: 1,
                reflected: false,
            },
        ]);
        let v = alpha_product_integral(&spec, &qs(), &EvalSettings::default()).unwrap();
        assert!((v.re - 0.030_448_457_058_393).abs() < 1e-9, "{}", v.re);
        assert!(v.im.abs() < 1e-10);
    }

    #[test]
    fn reflected_factor() {
        // int_0^1 zeta(-1, 1-a) da = int_0^1 zeta(-1, a) da = 0
        let spec = IntegrandSpec::new(vec![ZetaFactor {
            s: Complex64::new(-1.0, 0.0),
            r: 0,
            reflected: true,
        }]);
        let v = alpha_product_integral(&spec, &qs(), &EvalSettings::default()).unwrap();
        assert!(v.norm() < 1e-12, "{v}");
    }

    #[test]
    fn factor_domain_checked() {
        let spec = IntegrandSpec::new(vec![ZetaFactor {
            s: Complex64::new(1.5, 0.0),
            r: 0,
            reflected: false,
        }]);
        assert!(alpha_product_integral(&spec, &qs(), &EvalSettings::default()).is_err());
    }
}
