//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending order of degree with no trailing
//! zeros; the zero polynomial is the empty vector and reports degree -1.
//! That convention makes the integration-by-parts recursion elsewhere in
//! the crate terminate on `degree() <= 0` without special cases.

use std::fmt;

use num_bigint::BigInt;

use super::bernoulli::bernoulli_number;
use super::rational::{binomial, Rational};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = RationalPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RationalPolynomial {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalPolynomial::new(vec![c])
    }

    /// `c * alpha^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        RationalPolynomial { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Degree, with the zero polynomial at -1.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `alpha^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &other.coeff(k));
        }
        RationalPolynomial::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        RationalPolynomial::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RationalPolynomial::zero();
        }
        RationalPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// d/d(alpha).
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RationalPolynomial::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * &Rational::from_int(k as i64))
            .collect();
        RationalPolynomial { coeffs }
    }

    /// Exact integral over [0, 1].
    pub fn integral01(&self) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            acc += &(c / &Rational::from_int(k as i64 + 1));
        }
        acc
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Horner evaluation in floating point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64();
        }
        acc
    }

    /// The reflected polynomial p(1 - alpha).
    pub fn reflect(&self) -> Self {
        // Substitute via repeated Horner in (1 - alpha).
        let one_minus = RationalPolynomial::new(vec![Rational::one(), Rational::from_int(-1)]);
        let mut acc = RationalPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&one_minus);
            acc = acc.add(&RationalPolynomial::constant(c.clone()));
        }
        acc
    }
}

impl fmt::Display for RationalPolynomial {
    /// Human form, descending powers: `alpha^2 - alpha + 1/6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let unit_coeff = mag.is_one();
            match (k, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "alpha")?,
                (1, false) => write!(f, "{mag}*alpha")?,
                (_, true) => write!(f, "alpha^{k}")?,
                (_, false) => write!(f, "{mag}*alpha^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl serde::Serialize for RationalPolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter())
    }
}

impl<'de> serde::Deserialize<'de> for RationalPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<Rational>::deserialize(deserializer)?;
        Ok(RationalPolynomial::new(coeffs))
    }
}

// ---- Bernoulli polynomials and the triple product integral ----

/// B_n(alpha) = sum_{i=0}^{n} C(n, i) B_{n-i} alpha^i.
pub fn bernoulli_polynomial(n: usize) -> RationalPolynomial {
    let mut coeffs = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let c = Rational::from_big_int(binomial(n as u64, i as u64)) * bernoulli_number(n - i);
        coeffs.push(c);
    }
    RationalPolynomial::new(coeffs)
}

/// The polynomial equal to zeta(-n, alpha): -B_{n+1}(alpha)/(n+1).
pub fn hurwitz_neg_int_poly(n: usize) -> RationalPolynomial {
    bernoulli_polynomial(n + 1).scale(&Rational::new(-1, n as i64 + 1))
}

/// Exact value of the integral over [0,1] of
/// zeta(1-n1, alpha) * zeta(1-n2, alpha) * zeta(1-n3, alpha)
/// via the closed triple binomial-Bernoulli sum
///
///   -(1/(n1 n2 n3)) * sum_{i,j,k} C(n1,i) C(n2,j) C(n3,k)
///       B_{n1-i} B_{n2-j} B_{n3-k} / (i+j+k+1).
///
/// Vanishes whenever n1+n2+n3 is odd.  Requires n1, n2, n3 >= 1.
pub fn triple_bernoulli_integral(n1: usize, n2: usize, n3: usize) -> Rational {
    assert!(n1 >= 1 && n2 >= 1 && n3 >= 1, "indices must be positive");
    let mut acc = Rational::zero();
    for i in 0..=n1 {
        let b1 = bernoulli_number(n1 - i);
        if b1.is_zero() {
            continue;
        }
        let c1 = Rational::from_big_int(binomial(n1 as u64, i as u64)) * b1;
        for j in 0..=n2 {
            let b2 = bernoulli_number(n2 - j);
            if b2.is_zero() {
                continue;
            }
            let c12 = &c1 * &(Rational::from_big_int(binomial(n2 as u64, j as u64)) * b2);
            for k in 0..=n3 {
                let b3 = bernoulli_number(n3 - k);
                if b3.is_zero() {
                    continue;
                }
                let c123 = &c12 * &(Rational::from_big_int(binomial(n3 as u64, k as u64)) * b3);
                acc += &(&c123 / &Rational::from_int((i + j + k + 1) as i64));
            }
        }
    }
    let scale = Rational::from_big(
        BigInt::from(-1),
        BigInt::from(n1 as u64) * BigInt::from(n2 as u64) * BigInt::from(n3 as u64),
    );
    acc * scale
}
