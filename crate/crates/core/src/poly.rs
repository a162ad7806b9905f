//! Dense univariate polynomials over an exact field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Field, Rational};

/// Dense polynomial with coefficients in ascending degree order.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// is the empty vector and structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn new(coeffs: Vec<K>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    /// The variable itself.
    pub fn x() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn monomial(c: K, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![K::zero(); degree + 1];
        coeffs[degree] = c;
        Self { coeffs }
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = K::one() / self.leading_coeff();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * K::from_i64(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(K::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.clone() / K::from_i64(k as i64 + 1));
        }
        Self::new(coeffs)
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Substitutes `x := other`.
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * other) + &Self::constant(c.clone()))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Euclidean division. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let lead_inv = K::one() / divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        if (self.is_constant() && !self.is_zero()) || (other.is_constant() && !other.is_zero()) {
            return Self::one();
        }
        if self.coeffs.len() > 2 && other.coeffs.len() > 2 {
            if let Some(g) = self.modular_gcd(other) {
                return g;
            }
        }
        self.euclid_gcd(other)
    }

    /// `None` if a coefficient of the result does not fit `K`.
    fn modular_gcd(&self, other: &Self) -> Option<Self> {
        let a: Vec<_> = self.coeffs.iter().map(K::to_rational).collect();
        let b: Vec<_> = other.coeffs.iter().map(K::to_rational).collect();
        match crate::modgcd::gcd_rational(&a, &b) {
            None => Some(Self::one()),
            Some(g) => {
                let coeffs = g
                    .into_iter()
                    .map(|c| K::from_rational(&Rational::from_integer(c)))
                    .collect::<Option<Vec<_>>>()?;
                Some(Self::new(coeffs).monic())
            }
        }
    }

    fn euclid_gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Human readable form in the given variable, e.g. `1/2*x^2 - x + 3`.
    ///
    /// The output is accepted by the element parser.
    pub fn format_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&format_term(&abs.to_string(), abs.is_one(), k, var));
        }
        out
    }
}

/// One monomial `c*var^k` with `c` already positive and printed.
pub(crate) fn format_term(coeff: &str, coeff_is_one: bool, k: usize, var: &str) -> String {
    let power = match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    };
    match (k, coeff_is_one) {
        (0, _) => coeff.to_string(),
        (_, true) => power,
        _ => format!("{coeff}*{power}"),
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.format_with("x"))
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("x"))
    }
}

impl<K: Field> Add for &Poly<K> {
    type Output = Poly<K>;

    fn add(self, rhs: Self) -> Poly<K> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a = a.clone() + b.clone();
        }
        Poly::new(coeffs)
    }
}

impl<K: Field> Sub for &Poly<K> {
    type Output = Poly<K>;

    fn sub(self, rhs: Self) -> Poly<K> {
        self + &(-rhs)
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;

    fn neg(self) -> Poly<K> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<K: Field> Mul for &Poly<K> {
    type Output = Poly<K>;

    fn mul(self, rhs: Self) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<K: Field> $tr for Poly<K> {
            type Output = Poly<K>;
            fn $m(self, rhs: Self) -> Poly<K> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, rational, Rational};
    use num_rational::Ratio;

    fn p(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| integer(c)).collect())
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(Poly::<Rational>::zero().degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let a = p(&[-1, 0, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_zero());
        let g = p(&[2, 2]).gcd(&a);
        assert_eq!(g, p(&[1, 1]));
        assert_eq!(p(&[3]).gcd(&p(&[0, 5])), p(&[1]));
    }

    #[test]
    fn calculus() {
        let a = p(&[1, 2, 3]);
        assert_eq!(a.derivative(), p(&[2, 6]));
        assert_eq!(a.integral().derivative(), a);
        assert_eq!(a.integral().coeff(3), integer(1));
    }

    #[test]
    fn compose_and_eval() {
        let a = p(&[0, 0, 1]);
        let shift = p(&[-2, 1]);
        assert_eq!(a.compose(&shift), p(&[4, -4, 1]));
        assert_eq!(a.eval(&rational(1, 2)), rational(1, 4));
        assert_eq!(shift.pow(3), &(&shift * &shift) * &shift);
    }

    #[test]
    fn formatting() {
        assert_eq!(p(&[-1, 0, 1]).format_with("x"), "x^2 - 1");
        assert_eq!(p(&[0, -1]).format_with("t"), "-t");
        let half = Poly::new(vec![rational(1, 2), integer(0), rational(-3, 4)]);
        assert_eq!(half.format_with("X"), "-3/4*X^2 + 1/2");
        assert_eq!(Poly::<Rational>::zero().format_with("x"), "0");
    }

    #[test]
    fn generic_over_machine_rationals() {
        let a: Poly<Ratio<i64>> = Poly::new(vec![
            Ratio::from_integer(-1),
            Ratio::from_integer(0),
            Ratio::from_integer(1),
        ]);
        let b: Poly<Ratio<i64>> = Poly::new(vec![Ratio::from_integer(1), Ratio::from_integer(1)]);
        assert_eq!(a.gcd(&b), b);
    }
}
