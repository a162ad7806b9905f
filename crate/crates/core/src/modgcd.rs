//! Modular gcd of polynomials with rational coefficients.
//!
//! Both inputs are scaled to primitive integer polynomials, their gcd is
//! computed modulo word-sized primes and lifted by Chinese remaindering
//! until trial division confirms it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::scalar::Rational;

/// Primitive integer polynomial proportional to `coeffs` (ascending, nonzero).
fn primitive_integer(coeffs: &[Rational]) -> Vec<BigInt> {
    let lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    primitive_part(ints)
}

fn primitive_part(mut ints: Vec<BigInt>) -> Vec<BigInt> {
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in &mut ints {
            *c /= &content;
        }
    }
    if ints.last().is_some_and(|c| c.is_negative()) {
        for c in &mut ints {
            *c = -&*c;
        }
    }
    ints
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for `n < 2^32`.
fn is_prime_u32(n: u64) -> bool {
    if n < 2 || n.is_multiple_of(2) {
        return n == 2;
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for a in [2u64, 7, 61] {
        if a % n == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^31`, descending.
fn primes() -> impl Iterator<Item = u64> {
    (1u64 << 20..1u64 << 31).rev().filter(|&n| is_prime_u32(n))
}

fn reduce(ints: &[BigInt], p: u64) -> Vec<u64> {
    let m = BigInt::from(p);
    ints.iter()
        .map(|c| c.mod_floor(&m).to_u64().expect("residue fits"))
        .collect()
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Monic gcd over `𝔽_p`.
fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let db = b.len() - 1;
        let inv = pow_mod(b[db], p - 2, p);
        while a.len() > db {
            let k = a.len() - 1 - db;
            let c = mul_mod(a[a.len() - 1], inv, p);
            for (i, &y) in b.iter().enumerate() {
                a[k + i] = (a[k + i] + p - mul_mod(c, y, p)) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lead) = a.last() {
        let inv = pow_mod(lead, p - 2, p);
        for c in &mut a {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

/// Whether `b` divides `a` exactly over `ℤ`, both integer polynomials.
fn divides(b: &[BigInt], a: &[BigInt]) -> bool {
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.to_vec();
    while rem.len() > db {
        let top = rem.last().expect("nonempty");
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return false;
        }
        let k = rem.len() - 1 - db;
        for (i, y) in b.iter().enumerate() {
            rem[k + i] -= &q * y;
        }
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
    }
    rem.is_empty()
}

/// Gcd up to a scalar, as a primitive integer polynomial. `None` when a
/// degree-0 gcd is detected (the inputs are coprime). Both inputs must be
/// nonzero and non-constant.
pub(crate) fn gcd_rational(a: &[Rational], b: &[Rational]) -> Option<Vec<BigInt>> {
    let a = primitive_integer(a);
    let b = primitive_integer(b);
    let scale = a.last().expect("nonzero").gcd(b.last().expect("nonzero"));
    let mut best_degree = usize::MAX;
    let mut modulus = BigInt::one();
    let mut lifted: Vec<BigInt> = Vec::new();
    let mut candidate: Vec<BigInt> = Vec::new();
    for p in primes() {
        let pb = BigInt::from(p);
        if (a.last().expect("nonzero") % &pb).is_zero() || (b.last().expect("nonzero") % &pb).is_zero() {
            continue;
        }
        let g = gcd_mod(&reduce(&a, p), &reduce(&b, p), p);
        let degree = g.len() - 1;
        if degree == 0 {
            return None;
        }
        if degree > best_degree {
            continue;
        }
        let s = (&scale % &pb).to_u64().expect("residue fits");
        let g: Vec<u64> = g.iter().map(|&c| mul_mod(c, s, p)).collect();
        if degree < best_degree {
            best_degree = degree;
            modulus = pb;
            lifted = g.into_iter().map(BigInt::from).collect();
        } else {
            let m_inv = pow_mod((&modulus % &pb).to_u64().expect("residue fits"), p - 2, p);
            for (c, &r) in lifted.iter_mut().zip(&g) {
                let c_mod = (&*c % &pb).to_u64().expect("residue fits");
                let delta = mul_mod((r + p - c_mod) % p, m_inv, p);
                *c += &modulus * BigInt::from(delta);
            }
            modulus *= pb;
        }
        let half = &modulus >> 1;
        let symmetric: Vec<BigInt> = lifted
            .iter()
            .map(|c| if c > &half { c - &modulus } else { c.clone() })
            .collect();
        let next = primitive_part(symmetric);
        if next == candidate && divides(&next, &a) && divides(&next, &b) {
            return Some(next);
        }
        candidate = next;
    }
    unreachable!("ran out of primes below 2^31")
}
