use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RationalFunction;
use crate::rings::{CommRing, DiffRing, TextRing};
use crate::scalar::{Field, Rational};

/// The field `K(x)` with `d = d/dx` and `t = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctionField<K> {
    variable: String,
    _scalar: std::marker::PhantomData<K>,
}

impl<K: Field> FunctionField<K> {
    pub fn new(variable: impl Into<String>) -> Result<Self> {
        let ring = Self {
            variable: variable.into(),
            _scalar: std::marker::PhantomData,
        };
        crate::rings::check_distinguished_t(&ring)?;
        Ok(ring)
    }

    pub fn from_poly(&self, p: Poly<K>) -> RationalFunction<K> {
        RationalFunction::from_poly(p)
    }
}

pub(crate) fn scalar_from_rational<K: Field>(q: &Rational) -> Result<K> {
    K::from_rational(q).ok_or_else(|| Error::Unsupported(format!("{q} does not fit the scalar type")))
}

impl<K: Field> CommRing for FunctionField<K> {
    type Elem = RationalFunction<K>;

    fn zero(&self) -> Self::Elem {
        RationalFunction::zero()
    }

    fn one(&self) -> Self::Elem {
        RationalFunction::one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a + b
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        -a
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a - b
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a * b
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn from_rational(&self, q: &Rational) -> Result<Self::Elem> {
        scalar_from_rational(q).map(RationalFunction::constant)
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        a.inverse()
    }

    fn common_denominator(&self, items: &[Self::Elem]) -> Option<Self::Elem> {
        let lcm = items.iter().fold(Poly::one(), |acc, a| {
            let g = acc.gcd(a.denom());
            &acc * &a.denom().div_rem(&g).0
        });
        Some(RationalFunction::from_poly(lcm))
    }

    fn is_field(&self) -> bool {
        true
    }

    fn format(&self, a: &Self::Elem) -> String {
        a.format_with(&self.variable)
    }
}

impl<K: Field> DiffRing for FunctionField<K> {
    fn derive(&self, a: &Self::Elem) -> Self::Elem {
        a.derivative()
    }

    fn distinguished_t(&self) -> Option<Self::Elem> {
        Some(RationalFunction::x())
    }

    /// Only polynomial integrands are handled.
    fn antiderivative(&self, a: &Self::Elem) -> Option<Self::Elem> {
        a.is_polynomial()
            .then(|| RationalFunction::from_poly(a.numer().integral()))
    }
}

impl<K: Field> TextRing for FunctionField<K> {
    fn variable_name(&self) -> &str {
        &self.variable
    }

    fn variable(&self) -> Self::Elem {
        RationalFunction::x()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::integer;

    #[test]
    fn power_rule() {
        let f = FunctionField::<Rational>::new("x").unwrap();
        let x = f.variable();
        let x2 = f.mul(&x, &x);
        assert_eq!(f.derive(&x2), f.scale_int(2, &x));
        assert!(f.is_zero(&f.derive(&f.one())));
        assert_eq!(f.derive(&f.distinguished_t().unwrap()), f.one());
    }

    #[test]
    fn constants_embed() {
        let f = FunctionField::<Rational>::new("x").unwrap();
        let c = f.from_rational(&crate::scalar::rational(3, 7)).unwrap();
        assert!(f.is_constant(&c));
        assert_eq!(f.format(&c), "3/7");
        assert_eq!(f.from_int(5), RationalFunction::constant(integer(5)));
    }
}
