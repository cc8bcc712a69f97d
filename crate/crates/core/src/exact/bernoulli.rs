//! Bernoulli numbers with a process-wide cache.
//!
//! Convention: B_1 = -1/2, i.e. B_n = B_n(0) for the Bernoulli polynomials
//! used elsewhere in the crate.  Values are produced by the defining
//! recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0 and cached; a published prefix
//! is never mutated, so concurrent readers always see consistent values.

use std::sync::RwLock;

use num_bigint::BigInt;

use super::rational::{binomial, Rational};

/// Grow-only table of Bernoulli numbers.
#[derive(Debug, Default)]
pub struct BernoulliCache {
    values: Vec<Rational>,
}

impl BernoulliCache {
    pub fn new() -> Self {
        BernoulliCache {
            values: vec![Rational::one()],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Extends the table through index `n` if needed and returns B_n.
    pub fn get(&mut self, n: usize) -> Rational {
        self.ensure(n);
        self.values[n].clone()
    }

    fn ensure(&mut self, n: usize) {
        if self.values.is_empty() {
            self.values.push(Rational::one());
        }
        while self.values.len() <= n {
            let m = self.values.len(); // computing B_m
            let mut acc = Rational::zero();
            for (k, bk) in self.values.iter().enumerate() {
                acc += &Rational::from_big_int(binomial(m as u64 + 1, k as u64)) * bk;
            }
            let bm = -acc / Rational::from_big_int(BigInt::from(m as u64 + 1));
            self.values.push(bm);
        }
    }
}

static GLOBAL: RwLock<BernoulliCache> = RwLock::new(BernoulliCache { values: Vec::new() });

/// B_n from the shared cache.
pub fn bernoulli_number(n: usize) -> Rational {
    if let Ok(cache) = GLOBAL.read() {
        if let Some(v) = cache.values.get(n) {
            return v.clone();
        }
    }
    GLOBAL.write().expect("bernoulli cache poisoned").get(n)
}

/// Exact value of the zeta function at a nonpositive integer: zeta(-k).
///
/// zeta(0) = -1/2 and zeta(-k) = -B_{k+1}/(k+1) for k >= 1 (zero at even k).
pub fn zeta_neg_int(k: u64) -> Rational {
    if k == 0 {
        return Rational::new(-1, 2);
    }
    let b = bernoulli_number(k as usize + 1);
    -b / Rational::from_int(k as i64 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(bernoulli_number(0), Rational::one());
        assert_eq!(bernoulli_number(1), Rational::new(-1, 2));
        assert_eq!(bernoulli_number(2), Rational::new(1, 6));
        assert_eq!(bernoulli_number(4), Rational::new(-1, 30));
        assert_eq!(bernoulli_number(12), Rational::new(-691, 2730));
    }

    #[test]
    fn odd_indices_vanish() {
        for n in (3..=25).step_by(2) {
            assert!(bernoulli_number(n).is_zero(), "B_{n} should vanish");
        }
    }

    // Independent oracle: von Staudt-Clausen fixes the exact denominator of
    // B_n (product of primes p with (p-1) | n), which the recurrence route
    // knows nothing about.
    #[test]
    fn von_staudt_clausen_denominators() {
        for n in (2..=24usize).step_by(2) {
            let b = bernoulli_number(n);
            let mut denom = BigInt::from(1);
            for p in 2..=(n as u64 + 1) {
                let is_prime = (2..p).all(|d| p % d != 0);
                if is_prime && n as u64 % (p - 1) == 0 {
                    denom *= BigInt::from(p);
                }
            }
            assert_eq!(b.denom(), &denom, "von Staudt-Clausen fails at n={n}");
        }
    }

    #[test]
    fn zeta_negative_integers() {
        assert_eq!(zeta_neg_int(0), Rational::new(-1, 2));
        assert_eq!(zeta_neg_int(1), Rational::new(-1, 12));
        assert_eq!(zeta_neg_int(2), Rational::zero());
        assert_eq!(zeta_neg_int(3), Rational::new(1, 120));
        assert_eq!(zeta_neg_int(5), Rational::new(-1, 252));
    }
}
