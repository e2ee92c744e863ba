//! S-units and S-integers as exact exponent vectors over a fixed [`PrimeSet`].
//!
//! An S-unit is a nonzero rational of the form ±∏ pᵉ with p ranging over S
//! and integer exponents of either sign. The representation here is the sign
//! together with the exponent vector, so equality, multiplication, and
//! inversion are exact and allocation-light; the rational value is only
//! materialized on demand. S-integers are the S-units with nonnegative
//! exponents, carrying their evaluated integer value as a cache.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::primes::PrimeSet;

/// Multiplicative sign, the {±1} part of the unit group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(n: &BigInt) -> Sign {
        if n.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// An element of the multiplicative group generated by S ∪ {−1}.
///
/// Canonical: two S-units are equal iff their signs and exponent vectors
/// agree. The structural `Ord` (exponents, then sign) is only a deterministic
/// set order; user-facing listings sort by canonical text form instead.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SUnit {
    primes: PrimeSet,
    sign: Sign,
    exponents: Vec<i64>,
}

impl SUnit {
    /// Builds a unit from its sign and exponent vector.
    pub fn new(primes: PrimeSet, sign: Sign, exponents: Vec<i64>) -> Result<Self> {
        if exponents.len() != primes.len() {
            return Err(Error::ArityMismatch {
                expected: primes.len(),
                got: exponents.len(),
            });
        }
        Ok(SUnit {
            primes,
            sign,
            exponents,
        })
    }

    /// The multiplicative identity (+1, all exponents zero).
    pub fn one(primes: PrimeSet) -> Self {
        let n = primes.len();
        SUnit {
            primes,
            sign: Sign::Plus,
            exponents: vec![0; n],
        }
    }

    pub fn primes(&self) -> &PrimeSet {
        &self.primes
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    /// Largest |exponent|, the height used for bounded searches.
    pub fn height(&self) -> u64 {
        self.exponents
            .iter()
            .map(|e| e.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    /// True iff every exponent is nonnegative, i.e. the value is an integer.
    pub fn is_integral(&self) -> bool {
        self.exponents.iter().all(|&e| e >= 0)
    }

    /// Exact rational value sign·∏ pᵉ. No rounding anywhere.
    pub fn value(&self) -> BigRational {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (&p, &e) in self.primes.primes().iter().zip(&self.exponents) {
            let exp = u32::try_from(e.unsigned_abs()).expect("exponent too large to evaluate");
            let pw = BigUint::from(p).pow(exp);
            if e >= 0 {
                num *= pw;
            } else {
                den *= pw;
            }
        }
        let mut n = BigInt::from(num);
        if self.sign.is_negative() {
            n = -n;
        }
        // Distinct prime powers: numerator and denominator are coprime.
        BigRational::new_raw(n, BigInt::from(den))
    }

    /// Group multiplication: exponent vectors add, signs multiply.
    pub fn mul(&self, other: &SUnit) -> Result<SUnit> {
        if self.primes != other.primes {
            return Err(Error::PrimeSetMismatch);
        }
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Ok(SUnit {
            primes: self.primes.clone(),
            sign: self.sign * other.sign,
            exponents,
        })
    }

    /// Group inverse: exponents negate, sign is preserved.
    pub fn inverse(&self) -> SUnit {
        SUnit {
            primes: self.primes.clone(),
            sign: self.sign,
            exponents: self.exponents.iter().map(|e| -e).collect(),
        }
    }

    /// Canonical text form: `[-]p1^e1 * p2^e2 * ...` with zero exponents
    /// omitted and `1`/`-1` for the empty product.
    pub fn canonical_text(&self) -> String {
        self.to_string()
    }

    /// Parses either a canonical product form (`-2^3 * 3^-2`), an integer
    /// (`-8`), or a rational (`9/8`), then checks membership in the unit
    /// group of `primes`.
    pub fn parse(text: &str, primes: &PrimeSet) -> Result<SUnit> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty S-unit".into()));
        }
        let (sign, body) = match t.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest.trim_start()),
            None => (Sign::Plus, t),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("invalid S-unit `{t}`")));
        }
        if body.contains('^') || body.contains('*') {
            return parse_product_form(sign, body, primes);
        }
        if let Some((n, d)) = body.split_once('/') {
            let num: BigInt = n
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid numerator `{n}`")))?;
            let den: BigInt = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid denominator `{d}`")))?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            let mut value = BigRational::new(num, den);
            if sign.is_negative() {
                value = -value;
            }
            return SUnit::from_rational(&value, primes);
        }
        let mut value: BigInt = body
            .parse()
            .map_err(|_| Error::Parse(format!("invalid S-unit `{t}`")))?;
        if sign.is_negative() {
            value = -value;
        }
        let rat = BigRational::from_integer(value);
        SUnit::from_rational(&rat, primes)
    }

    /// Recognizes an exact rational as an S-unit, if it is one.
    pub fn from_rational(value: &BigRational, primes: &PrimeSet) -> Result<SUnit> {
        if value.is_zero() {
            return Err(Error::ZeroValue);
        }
        let sign = Sign::of(value.numer());
        let num_exps = factor_magnitude(&value.numer().abs(), primes)
            .ok_or_else(|| Error::NotAnSInteger(value.numer().abs()))?;
        let den_exps = factor_magnitude(&value.denom().abs(), primes)
            .ok_or_else(|| Error::NotAnSInteger(value.denom().abs()))?;
        let exponents = num_exps
            .iter()
            .zip(&den_exps)
            .map(|(n, d)| n - d)
            .collect();
        Ok(SUnit {
            primes: primes.clone(),
            sign,
            exponents,
        })
    }
}

fn parse_product_form(sign: Sign, body: &str, primes: &PrimeSet) -> Result<SUnit> {
    let mut exponents = vec![0i64; primes.len()];
    for factor in body.split('*') {
        let factor = factor.trim();
        let (base_s, exp_s) = match factor.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim()),
            None => (factor, "1"),
        };
        let base: u64 = base_s
            .parse()
            .map_err(|_| Error::Parse(format!("invalid factor base `{base_s}`")))?;
        if base == 1 {
            // bare `1` or `-1`
            if exp_s != "1" {
                return Err(Error::Parse(format!("invalid factor `{factor}`")));
            }
            continue;
        }
        let exp: i64 = exp_s
            .parse()
            .map_err(|_| Error::Parse(format!("invalid exponent `{exp_s}`")))?;
        let idx = primes
            .primes()
            .iter()
            .position(|&p| p == base)
            .ok_or_else(|| Error::NotAnSInteger(BigInt::from(base)))?;
        exponents[idx] = exponents[idx]
            .checked_add(exp)
            .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
    }
    Ok(SUnit {
        primes: primes.clone(),
        sign,
        exponents,
    })
}

impl fmt::Display for SUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign.is_negative() {
            f.write_str("-")?;
        }
        let mut wrote = false;
        for (&p, &e) in self.primes.primes().iter().zip(&self.exponents) {
            if e == 0 {
                continue;
            }
            if wrote {
                f.write_str(" * ")?;
            }
            write!(f, "{p}^{e}")?;
            wrote = true;
        }
        if !wrote {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SUnit({self})")
    }
}

impl PartialOrd for SUnit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SUnit {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponents
            .cmp(&other.exponents)
            .then(self.sign.cmp(&other.sign))
    }
}

/// Exponents of |n| over the prime set, or `None` if a cofactor survives.
fn factor_magnitude(n: &BigInt, primes: &PrimeSet) -> Option<Vec<i64>> {
    debug_assert!(n.is_positive());
    let mut rest = n.magnitude().clone();
    let mut exponents = vec![0i64; primes.len()];
    for (i, &p) in primes.primes().iter().enumerate() {
        let p = BigUint::from(p);
        loop {
            let (q, r) = num_integer::Integer::div_rem(&rest, &p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            exponents[i] += 1;
        }
    }
    if rest.is_one() {
        Some(exponents)
    } else {
        None
    }
}

/// A nonzero integer divisible only by primes of S, with its value cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SInteger {
    unit: SUnit,
    value: BigInt,
}

impl SInteger {
    /// Wraps a unit with nonnegative exponents, evaluating its value.
    pub fn from_unit(unit: SUnit) -> Result<SInteger> {
        if !unit.is_integral() {
            return Err(Error::NotAnSInteger(
                unit.value().numer().clone(), // fractional: report the numerator
            ));
        }
        let value = unit.value().to_integer();
        Ok(SInteger { unit, value })
    }

    pub fn unit(&self) -> &SUnit {
        &self.unit
    }

    pub fn into_unit(self) -> SUnit {
        self.unit
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn sign(&self) -> Sign {
        self.unit.sign
    }
}

impl fmt::Debug for SInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SInteger({})", self.value)
    }
}

impl fmt::Display for SInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Decides whether `n` is an S-integer and returns its factorization if so.
///
/// Zero is rejected outright: it is neither an S-unit nor a legal sequence
/// term. A non-S-integer (some cofactor outside S survives) yields `None`.
pub fn factor_over_s(n: &BigInt, primes: &PrimeSet) -> Result<Option<SInteger>> {
    if n.is_zero() {
        return Err(Error::ZeroValue);
    }
    let exponents = match factor_magnitude(&n.abs(), primes) {
        Some(e) => e,
        None => return Ok(None),
    };
    Ok(Some(SInteger {
        unit: SUnit {
            primes: primes.clone(),
            sign: Sign::of(n),
            exponents,
        },
        value: n.clone(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s23() -> PrimeSet {
        PrimeSet::new(&[2, 3]).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factor_72_over_23() {
        let s = factor_over_s(&big(72), &s23()).unwrap().unwrap();
        assert_eq!(s.sign(), Sign::Plus);
        assert_eq!(s.unit().exponents(), &[3, 2]);
        assert_eq!(s.value(), &big(72));
    }

    #[test]
    fn factor_minus_one_is_pure_unit() {
        let s = factor_over_s(&big(-1), &s23()).unwrap().unwrap();
        assert_eq!(s.sign(), Sign::Minus);
        assert_eq!(s.unit().exponents(), &[0, 0]);
    }

    #[test]
    fn factor_rejects_foreign_prime() {
        assert_eq!(factor_over_s(&big(10), &s23()).unwrap(), None);
    }

    #[test]
    fn factor_rejects_zero() {
        assert_eq!(factor_over_s(&big(0), &s23()), Err(Error::ZeroValue));
    }

    #[test]
    fn value_of_examples() {
        let s = s23();
        let six = SUnit::new(s.clone(), Sign::Plus, vec![1, 1]).unwrap();
        assert_eq!(six.value(), BigRational::from_integer(big(6)));

        let neg_half = SUnit::new(s.clone(), Sign::Minus, vec![-1, 0]).unwrap();
        assert_eq!(neg_half.value(), BigRational::new(big(-1), big(2)));

        assert_eq!(SUnit::one(s).value(), BigRational::from_integer(big(1)));
    }

    #[test]
    fn mul_and_inverse() {
        let s = s23();
        let six = SUnit::new(s.clone(), Sign::Plus, vec![1, 1]).unwrap();
        let neg_half = SUnit::new(s.clone(), Sign::Minus, vec![-1, 0]).unwrap();
        let prod = six.mul(&neg_half).unwrap();
        assert_eq!(prod.value(), BigRational::from_integer(big(-3)));

        assert_eq!(six.mul(&six.inverse()).unwrap(), SUnit::one(s.clone()));

        let eight = SUnit::new(s.clone(), Sign::Plus, vec![3, 0]).unwrap();
        let nine = SUnit::new(s.clone(), Sign::Plus, vec![0, 2]).unwrap();
        assert_eq!(
            eight.mul(&nine).unwrap().value(),
            BigRational::from_integer(big(72))
        );
    }

    #[test]
    fn mul_rejects_mismatched_prime_sets() {
        let a = SUnit::one(s23());
        let b = SUnit::one(PrimeSet::new(&[2, 5]).unwrap());
        assert_eq!(a.mul(&b), Err(Error::PrimeSetMismatch));
    }

    #[test]
    fn canonical_text_round_trip() {
        let s = s23();
        for (sign, exps, text) in [
            (Sign::Plus, vec![3, 2], "2^3 * 3^2"),
            (Sign::Minus, vec![-1, 0], "-2^-1"),
            (Sign::Plus, vec![0, 0], "1"),
            (Sign::Minus, vec![0, 0], "-1"),
        ] {
            let u = SUnit::new(s.clone(), sign, exps).unwrap();
            assert_eq!(u.to_string(), text);
            assert_eq!(SUnit::parse(text, &s).unwrap(), u);
        }
    }

    #[test]
    fn parse_accepts_plain_values() {
        let s = s23();
        let four = SUnit::parse("4", &s).unwrap();
        assert_eq!(four.exponents(), &[2, 0]);
        let neg_half = SUnit::parse("-1/2", &s).unwrap();
        assert_eq!(neg_half.exponents(), &[-1, 0]);
        assert_eq!(neg_half.sign(), Sign::Minus);
        let nine_eighths = SUnit::parse("9/8", &s).unwrap();
        assert_eq!(nine_eighths.exponents(), &[-3, 2]);
        assert!(SUnit::parse("5", &s).is_err());
        assert!(SUnit::parse("0", &s).is_err());
    }

    #[test]
    fn s_integer_requires_nonnegative_exponents() {
        let s = s23();
        let half = SUnit::new(s.clone(), Sign::Plus, vec![-1, 0]).unwrap();
        assert!(SInteger::from_unit(half).is_err());
        let six = SUnit::new(s, Sign::Plus, vec![1, 1]).unwrap();
        assert_eq!(SInteger::from_unit(six).unwrap().value(), &big(6));
    }
}
