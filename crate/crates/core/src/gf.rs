//! Finite fields GF(p^e) represented as 𝔽_p[z] modulo a fixed irreducible.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::is_prime;

/// Largest field order accepted by [`GfContext::new`].
pub const MAX_ORDER: u64 = 1 << 16;

/// Element of GF(p^e): coefficients of a polynomial in the generator `z`,
/// ascending, always exactly `e` entries each in `0..p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GfElem(Vec<u64>);

impl GfElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GfContext {
    p: u64,
    e: u32,
    /// Monic irreducible of degree `e`, ascending coefficients.
    modulus: Vec<u64>,
}

impl GfContext {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidRing("field degree must be at least 1".into()));
        }
        let order = p.checked_pow(e).filter(|&q| q <= MAX_ORDER);
        if order.is_none() {
            return Err(Error::InvalidRing(format!("field order {p}^{e} exceeds {MAX_ORDER}")));
        }
        let modulus = first_irreducible(p, e as usize);
        Ok(Self { p, e, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.e)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> GfElem {
        GfElem(vec![0; self.e as usize])
    }

    pub fn one(&self) -> GfElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, value: i64) -> GfElem {
        let mut v = self.zero();
        v.0[0] = value.rem_euclid(self.p as i64) as u64;
        v
    }

    /// The generator `z` (equals a prime-field constant when `e = 1`).
    pub fn generator(&self) -> GfElem {
        if self.e == 1 {
            // z is a root of the linear modulus z + m0
            return self.from_i64(-(self.modulus[0] as i64));
        }
        let mut v = self.zero();
        v.0[1] = 1;
        v
    }

    /// Enumerates all field elements in a fixed order.
    pub fn elements(&self) -> impl Iterator<Item = GfElem> + '_ {
        (0..self.order()).map(move |mut k| {
            let mut v = self.zero();
            for c in v.0.iter_mut() {
                *c = k % self.p;
                k /= self.p;
            }
            v
        })
    }

    pub fn is_zero(&self, a: &GfElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        GfElem(a.0.iter().zip(&b.0).map(|(x, y)| (x + y) % self.p).collect())
    }

    pub fn neg(&self, a: &GfElem) -> GfElem {
        GfElem(a.0.iter().map(|x| (self.p - x) % self.p).collect())
    }

    pub fn sub(&self, a: &GfElem, b: &GfElem) -> GfElem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        let e = self.e as usize;
        let p = self.p;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // reduce by the monic modulus from the top
        for k in (e..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, m) in self.modulus.iter().enumerate() {
                let idx = k - e + i;
                prod[idx] = (prod[idx] + p * p - c * m % p) % p;
            }
        }
        prod.truncate(e);
        GfElem(prod)
    }

    pub fn pow(&self, a: &GfElem, mut exp: u64) -> GfElem {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }

    pub fn inverse(&self, a: &GfElem) -> Option<GfElem> {
        if self.is_zero(a) {
            return None;
        }
        Some(self.pow(a, self.order() - 2))
    }

    /// Prints prime-field elements as `0..p-1`, others as a polynomial in `z`.
    pub fn format(&self, a: &GfElem) -> String {
        let terms: Vec<String> =
            a.0.iter()
                .enumerate()
                .rev()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| crate::poly::format_term(&c.to_string(), c == 1, k, GENERATOR_SYMBOL))
                .collect();
        match terms.len() {
            0 => "0".into(),
            _ => terms.join(" + "),
        }
    }

    pub fn is_prime_field_element(&self, a: &GfElem) -> bool {
        a.0.iter().skip(1).all(|&c| c == 0)
    }
}

/// Symbol used for the generator of GF(p^e) when `e > 1`.
pub const GENERATOR_SYMBOL: &str = "z";

impl fmt::Display for GfContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.p, self.e)
    }
}

fn poly_rem_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    // b monic
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - db;
        if c != 0 {
            for (i, m) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - c * m % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn monic_of_degree(p: u64, degree: usize, index: u64) -> Vec<u64> {
    let mut v = Vec::with_capacity(degree + 1);
    let mut k = index;
    for _ in 0..degree {
        v.push(k % p);
        k /= p;
    }
    v.push(1);
    v
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for idx in 0..p.pow(d as u32) {
            let g = monic_of_degree(p, d, idx);
            if poly_rem_mod_p(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically first monic irreducible of the given degree.
fn first_irreducible(p: u64, degree: usize) -> Vec<u64> {
    if degree == 1 {
        return vec![0, 1];
    }
    (0..p.pow(degree as u32))
        .map(|idx| monic_of_degree(p, degree, idx))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(GfContext::new(4, 1).is_err());
        assert!(GfContext::new(2, 0).is_err());
        assert!(GfContext::new(2, 40).is_err());
    }

    #[test]
    fn every_nonzero_element_is_invertible() {
        for (p, e) in [(2, 1), (3, 1), (2, 3), (3, 2), (5, 2)] {
            let f = GfContext::new(p, e).unwrap();
            let count = f.elements().count() as u64;
            assert_eq!(count, f.order());
            for a in f.elements() {
                match f.inverse(&a) {
                    None => assert!(f.is_zero(&a)),
                    Some(inv) => assert_eq!(f.mul(&a, &inv), f.one()),
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_prime_field_only() {
        let f = GfContext::new(3, 2).unwrap();
        let fixed: Vec<_> = f.elements().filter(|a| &f.pow(a, 3) == a).collect();
        assert_eq!(fixed.len(), 3);
        assert!(fixed.iter().all(|a| f.is_prime_field_element(a)));
    }

    #[test]
    fn characteristic_kills_p() {
        let f = GfContext::new(5, 1).unwrap();
        assert!(f.is_zero(&f.from_i64(10)));
        assert_eq!(f.from_i64(-1), f.from_i64(4));
        assert_eq!(f.format(&f.from_i64(-1)), "4");
        let g = GfContext::new(2, 2).unwrap();
        assert_eq!(g.format(&g.add(&g.generator(), &g.one())), "z + 1");
    }
}
