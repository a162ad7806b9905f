//! Coefficient scalars.
//!
//! Polynomials and rational functions are generic over any exact field
//! scalar that satisfies [`Field`]; in practice that is [`Rational`]
//! (`BigRational`) or the bounded `Rational64`. Floating point types are
//! deliberately not supported: every comparison in this crate is exact.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, One, Signed, Zero};

/// Arbitrary precision rationals.
pub type Rational = BigRational;

/// An exact field of characteristic zero usable as a polynomial coefficient.
pub trait Field: Num + Neg<Output = Self> + Clone + Debug + Display + Send + Sync + 'static {
    fn from_i64(value: i64) -> Self;

    /// Exact conversion to an arbitrary precision rational.
    fn to_rational(&self) -> Rational;

    /// Exact conversion from a rational; `None` if it does not fit.
    fn from_rational(q: &Rational) -> Option<Self>;

    fn is_negative(&self) -> bool;
}

impl Field for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn to_rational(&self) -> Rational {
        self.clone()
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Field for Ratio<i64> {
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(value)
    }

    fn to_rational(&self) -> Rational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        let num = i64::try_from(q.numer()).ok()?;
        let den = i64::try_from(q.denom()).ok()?;
        Some(Ratio::new(num, den))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

pub fn rational(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// p-adic valuation of a nonzero integer; `None` for zero.
pub fn valuation_int(value: &BigInt, p: u64) -> Option<i64> {
    if value.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = value.clone();
    let mut k = 0;
    loop {
        let (q, r) = v.div_rem(&p);
        if !r.is_zero() {
            return Some(k);
        }
        v = q;
        k += 1;
    }
}

/// p-adic valuation of a rational; `None` for zero.
pub fn valuation(value: &Rational, p: u64) -> Option<i64> {
    let num = valuation_int(value.numer(), p)?;
    let den = valuation_int(value.denom(), p).unwrap_or(0);
    Some(num - den)
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Smallest prime factor test; the moduli used here are tiny.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuations() {
        assert_eq!(valuation(&integer(4), 2), Some(2));
        assert_eq!(valuation(&rational(3, 8), 2), Some(-3));
        assert_eq!(valuation(&rational(9, 2), 3), Some(2));
        assert_eq!(valuation(&integer(0), 5), None);
        assert_eq!(valuation(&integer(-25), 5), Some(2));
    }

    #[test]
    fn binomials_match_pascal() {
        for n in 0..20u64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
            assert_eq!(binomial(n, 0), BigInt::one());
            assert_eq!(binomial(n, n), BigInt::one());
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
    }

    #[test]
    fn primes() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
