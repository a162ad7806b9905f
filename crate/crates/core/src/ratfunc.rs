//! Rational functions over an exact field in canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::Poly;
use crate::scalar::Field;

/// `num / den` with `den` monic and `gcd(num, den) = 1`.
///
/// Zero is stored as `0 / 1`, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<K> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: Field> RationalFunction<K> {
    /// Builds and reduces `num / den`. Returns `None` if `den` is zero.
    pub fn new(num: Poly<K>, den: Poly<K>) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = num.gcd(&den);
        let num = exact_div(&num, &g);
        let den = exact_div(&den, &g);
        let lead = den.leading_coeff();
        let inv = K::one() / lead;
        Some(Self {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn from_poly(num: Poly<K>) -> Self {
        Self { num, den: Poly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn constant(c: K) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(Poly::x())
    }

    pub fn numer(&self) -> &Poly<K> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Constant rational functions are exactly the constant polynomials
    /// once reduced.
    pub fn is_constant(&self) -> bool {
        self.is_polynomial() && self.num.is_constant()
    }

    pub fn inverse(&self) -> Option<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self * &inv)
    }

    /// d/dx by the quotient rule.
    pub fn derivative(&self) -> Self {
        if self.den.is_one() {
            return Self::from_poly(self.num.derivative());
        }
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn scale(&self, c: &K) -> Self {
        Self {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Substitutes `x := value`; `None` at a pole.
    pub fn eval(&self, value: &K) -> Option<K> {
        let d = self.den.eval(value);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(value) / d)
    }

    pub fn format_with(&self, var: &str) -> String {
        if self.den.is_one() {
            self.num.format_with(var)
        } else {
            format!("({})/({})", self.num.format_with(var), self.den.format_with(var))
        }
    }
}

impl<K: Field> fmt::Debug for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({})", self.format_with("x"))
    }
}

impl<K: Field> fmt::Display for RationalFunction<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with("x"))
    }
}

impl<K: Field> Add for &RationalFunction<K> {
    type Output = RationalFunction<K>;

    fn add(self, rhs: Self) -> RationalFunction<K> {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num + &rhs.num);
        }
        // with g = gcd of the denominators, only gcd(num, g) can cancel
        let g = self.den.gcd(&rhs.den);
        let a = exact_div(&self.den, &g);
        let b = exact_div(&rhs.den, &g);
        let num = &(&self.num * &b) + &(&rhs.num * &a);
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let h = num.gcd(&g);
        RationalFunction {
            num: exact_div(&num, &h),
            den: &a * &exact_div(&rhs.den, &h),
        }
    }
}

impl<K: Field> Sub for &RationalFunction<K> {
    type Output = RationalFunction<K>;

    fn sub(self, rhs: Self) -> RationalFunction<K> {
        self + &(-rhs)
    }
}

impl<K: Field> Neg for &RationalFunction<K> {
    type Output = RationalFunction<K>;

    fn neg(self) -> RationalFunction<K> {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<K: Field> Mul for &RationalFunction<K> {
    type Output = RationalFunction<K>;

    fn mul(self, rhs: Self) -> RationalFunction<K> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction::from_poly(&self.num * &rhs.num);
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        RationalFunction {
            num: &exact_div(&self.num, &g1) * &exact_div(&rhs.num, &g2),
            den: &exact_div(&self.den, &g2) * &exact_div(&rhs.den, &g1),
        }
    }
}

fn exact_div<K: Field>(a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
    if b.is_one() {
        return a.clone();
    }
    a.div_rem(b).0
}
