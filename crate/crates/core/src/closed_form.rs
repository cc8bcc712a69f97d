//! Symbolic closed forms: finite rational combinations of pi^p and
//! pi^p * zeta'(-m) with m >= 0.
//!
//! The canonical basis keeps zeta values out of the picture entirely:
//! zeta(2k) folds to a rational times pi^{2k}, and zeta(2k+1) folds to a
//! rational times pi^{2k} * zeta'(-2k), via the classical closed forms
//!
//!   zeta(N) = (-1)^{N/2} 2^{N-1} pi^N / (N-1)! * zeta(1-N)     (N even),
//!   zeta(N) = (-1)^{(N-1)/2} 2^N pi^{N-1} / (N-1)! * zeta'(1-N) (N odd).
//!
//! Terms are stored sorted by (pi_power, zeta_prime_arg) with zero
//! coefficients dropped and duplicates merged, so equality of closed forms
//! is structural equality.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exact::{factorial, zeta_neg_int, Rational};

/// One basis term: coeff * pi^pi_power * zeta'(zeta_prime_arg)?.
///
/// `zeta_prime_arg` is always a nonpositive integer when present.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Term {
    pub coeff: Rational,
    pub pi_power: u32,
    pub zeta_prime_arg: Option<i64>,
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct ClosedForm {
    terms: Vec<Term>,
}

// zeta'-free terms first, then by pi power, then by descending zeta' arg
// (so zeta'(-2) precedes zeta'(-4)).
fn key_order(a: &Term, b: &Term) -> Ordering {
    let key = |t: &Term| (t.zeta_prime_arg.is_some(), t.pi_power, -t.zeta_prime_arg.unwrap_or(0));
    key(a).cmp(&key(b))
}

impl ClosedForm {
    pub fn zero() -> Self {
        ClosedForm { terms: Vec::new() }
    }

    pub fn from_rational(c: Rational) -> Self {
        ClosedForm {
            terms: vec![Term {
                coeff: c,
                pi_power: 0,
                zeta_prime_arg: None,
            }],
        }
        .canonical()
    }

    /// coeff * pi^power.
    pub fn pi_term(coeff: Rational, power: u32) -> Self {
        ClosedForm {
            terms: vec![Term {
                coeff,
                pi_power: power,
                zeta_prime_arg: None,
            }],
        }
        .canonical()
    }

    /// coeff * pi^power * zeta'(arg) with arg <= 0.
    pub fn zeta_prime_term(coeff: Rational, power: u32, arg: i64) -> Self {
        assert!(arg <= 0, "zeta' symbols only at nonpositive integers");
        ClosedForm {
            terms: vec![Term {
                coeff,
                pi_power: power,
                zeta_prime_arg: Some(arg),
            }],
        }
        .canonical()
    }

    fn canonical(mut self) -> Self {
        self.terms.sort_by(key_order);
        let mut merged: Vec<Term> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            if let Some(last) = merged.last_mut() {
                if key_order(last, &t) == Ordering::Equal {
                    last.coeff += t.coeff;
                    continue;
                }
            }
            merged.push(t);
        }
        merged.retain(|t| !t.coeff.is_zero());
        ClosedForm { terms: merged }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value if the form is a pure constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 if self.terms[0].pi_power == 0 && self.terms[0].zeta_prime_arg.is_none() => {
                Some(self.terms[0].coeff.clone())
            }
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        ClosedForm { terms }.canonical()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        ClosedForm {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: -&t.coeff,
                    ..t.clone()
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return ClosedForm::zero();
        }
        ClosedForm {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// Multiplies every term by pi^k.
    pub fn mul_pi_power(&self, k: u32) -> Self {
        ClosedForm {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone(),
                    pi_power: t.pi_power + k,
                    zeta_prime_arg: t.zeta_prime_arg,
                })
                .collect(),
        }
    }

    /// Product of closed forms.
    ///
    /// Fails when a cross term would carry two zeta' symbols: such products
    /// leave the basis and no identity in this crate produces them.
    pub fn try_mul(&self, other: &Self) -> Result<Self, crate::Error> {
        let mut terms = Vec::new();
        for a in &self.terms {
            for b in &other.terms {
                let arg = match (a.zeta_prime_arg, b.zeta_prime_arg) {
                    (None, x) => x,
                    (x, None) => x,
                    (Some(p), Some(q)) => {
                        return Err(crate::Error::domain(format!(
                            "product zeta'({p}) * zeta'({q}) is outside the closed-form basis"
                        )))
                    }
                };
                terms.push(Term {
                    coeff: &a.coeff * &b.coeff,
                    pi_power: a.pi_power + b.pi_power,
                    zeta_prime_arg: arg,
                });
            }
        }
        Ok(ClosedForm { terms }.canonical())
    }
}

// ---- Exact zeta folding ----

/// zeta(n) for even n >= 2 as a rational multiple of pi^n.
pub fn zeta_even_closed(n: u32) -> ClosedForm {
    assert!(n >= 2 && n % 2 == 0, "needs an even integer >= 2");
    let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
    let coeff = Rational::from_int(sign)
        * Rational::from_int(2).pow(n as i32 - 1)
        * Rational::from_big_int(factorial(n as u64 - 1)).recip()
        * zeta_neg_int(n as u64 - 1);
    ClosedForm::pi_term(coeff, n)
}

/// zeta(n) for odd n >= 3 as a rational multiple of pi^{n-1} * zeta'(1-n).
pub fn zeta_odd_closed(n: u32) -> ClosedForm {
    assert!(n >= 3 && n % 2 == 1, "needs an odd integer >= 3");
    let sign = if ((n - 1) / 2) % 2 == 0 { 1 } else { -1 };
    let coeff = Rational::from_int(sign)
        * Rational::from_int(2).pow(n as i32)
        * Rational::from_big_int(factorial(n as u64 - 1)).recip();
    ClosedForm::zeta_prime_term(coeff, n - 1, 1 - n as i64)
}

/// zeta(n) for any integer n >= 2, folded into the canonical basis.
pub fn zeta_closed(n: u32) -> ClosedForm {
    if n % 2 == 0 {
        zeta_even_closed(n)
    } else {
        zeta_odd_closed(n)
    }
}

// ---- Text form ----

impl fmt::Display for ClosedForm {
    /// `(1/2835)*pi^6 + (3/4)*pi^2*zeta'(-2)`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", t.coeff)?;
            match t.pi_power {
                0 => {}
                1 => write!(f, "*pi")?,
                p => write!(f, "*pi^{p}")?,
            }
            if let Some(arg) = t.zeta_prime_arg {
                write!(f, "*zeta'({arg})")?;
            }
        }
        Ok(())
    }
}
