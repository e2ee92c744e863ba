//! Finite prime sets and prime generation.
//!
//! [`PrimeSet`] is the validated, immutable set S that fixes the arithmetic
//! universe for everything else in this crate. Prime generation for sequence
//! providers goes through a segmented sieve of Eratosthenes.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Deterministic primality test by trial division.
///
/// Desk-scale inputs only; the divisor loop walks 6k±1 candidates up to √n.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.checked_mul(d).map_or(false, |sq| sq <= n) {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// The finite set S of primes, strictly increasing and nonempty.
///
/// Cheap to clone; the prime list is shared behind an `Arc`. Two sets are
/// equal iff they hold the same primes in the same order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeSet {
    primes: Arc<[u64]>,
}

impl PrimeSet {
    /// Validates and builds a prime set.
    ///
    /// Rejects empty input, composite entries, and entries out of order.
    pub fn new(primes: &[u64]) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::EmptyPrimeSet);
        }
        for &p in primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
        }
        for w in primes.windows(2) {
            if w[1] <= w[0] {
                return Err(Error::UnsortedPrimes(w[1], w[0]));
            }
        }
        Ok(PrimeSet {
            primes: primes.into(),
        })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Debug for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeSet{:?}", self.primes)
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.primes.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// All primes up to `limit` inclusive, via a segmented sieve.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    // Base primes up to sqrt(limit) by a plain sieve.
    let root = (limit as f64).sqrt() as u64 + 1;
    let mut base_mask = vec![true; (root + 1) as usize];
    base_mask[0] = false;
    if root >= 1 {
        base_mask[1] = false;
    }
    let mut i = 2u64;
    while i * i <= root {
        if base_mask[i as usize] {
            let mut j = i * i;
            while j <= root {
                base_mask[j as usize] = false;
                j += i;
            }
        }
        i += 1;
    }
    let base: Vec<u64> = (2..=root).filter(|&i| base_mask[i as usize]).collect();

    let mut out: Vec<u64> = base.iter().copied().filter(|&p| p <= limit).collect();
    const SEGMENT: u64 = 1 << 18;
    let mut low = root + 1;
    while low <= limit {
        let high = (low + SEGMENT - 1).min(limit);
        let mut mask = vec![true; (high - low + 1) as usize];
        for &p in &base {
            if p * p > high {
                break;
            }
            let mut start = low.div_ceil(p) * p;
            if start < p * p {
                start = p * p;
            }
            let mut j = start;
            while j <= high {
                mask[(j - low) as usize] = false;
                j += p;
            }
        }
        for (off, keep) in mask.iter().enumerate() {
            if *keep {
                out.push(low + off as u64);
            }
        }
        low = high + 1;
    }
    out
}

/// The first `count` primes, in order.
///
/// Grows the sieve bound geometrically until enough primes appear; the usual
/// n·(ln n + ln ln n) overshoot makes one pass suffice in practice.
pub fn first_n_primes(count: usize) -> Vec<u64> {
    if count == 0 {
        return Vec::new();
    }
    let n = count as f64;
    let mut bound = if count < 6 {
        16
    } else {
        (n * (n.ln() + n.ln().ln())).ceil() as u64 + 16
    };
    loop {
        let ps = primes_up_to(bound);
        if ps.len() >= count {
            return ps[..count].to_vec();
        }
        bound *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(97));
        assert!(is_prime(7919));
        assert!(!is_prime(0));
        assert!(!is_prime(1));
        assert!(!is_prime(4));
        assert!(!is_prime(91)); // 7 * 13
        assert!(!is_prime(1_000_000));
    }

    #[test]
    fn prime_set_validation() {
        assert!(PrimeSet::new(&[2, 3]).is_ok());
        assert_eq!(PrimeSet::new(&[]), Err(Error::EmptyPrimeSet));
        assert_eq!(PrimeSet::new(&[4, 6]), Err(Error::NotPrime(4)));
        assert_eq!(PrimeSet::new(&[3, 2]), Err(Error::UnsortedPrimes(2, 3)));
        assert_eq!(PrimeSet::new(&[2, 2]), Err(Error::UnsortedPrimes(2, 2)));
    }

    #[test]
    fn sieve_matches_trial_division() {
        let sieved = primes_up_to(2000);
        let trial: Vec<u64> = (2..=2000).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, trial);
    }

    #[test]
    fn first_n_primes_prefix() {
        assert_eq!(first_n_primes(5), vec![2, 3, 5, 7, 11]);
        assert_eq!(first_n_primes(0), Vec::<u64>::new());
        let ps = first_n_primes(10_000);
        assert_eq!(ps.len(), 10_000);
        assert_eq!(ps[9_999], 104_729);
    }

    #[test]
    fn display_is_comma_separated() {
        let s = PrimeSet::new(&[2, 3, 5]).unwrap();
        assert_eq!(s.to_string(), "2,3,5");
    }
}
