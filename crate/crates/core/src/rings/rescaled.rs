use crate::error::{Error, Result};
use crate::norm::NormValue;
use crate::rings::{BanachRing, CommRing, DiffRing, FiniteFieldPolyRing, FunctionField, GaussRing, PolyRing};
use crate::scalar::{Field, Rational};

/// The same ring with derivation `f·d` for a unit `f`.
///
/// The distinguished element is re-derived as an antiderivative of `f⁻¹`
/// when the base ring can produce one, and is absent otherwise.
#[derive(Clone, Debug, PartialEq)]
pub struct Rescaled<R: DiffRing> {
    base: R,
    factor: R::Elem,
    t: Option<R::Elem>,
}

impl<R: DiffRing> Rescaled<R> {
    pub fn new(base: R, factor: R::Elem) -> Result<Self> {
        let inv = base
            .inverse(&factor)
            .ok_or_else(|| Error::NotInvertible(base.format(&factor)))?;
        let t = base.antiderivative(&inv);
        Ok(Self { base, factor, t })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn factor(&self) -> &R::Elem {
        &self.factor
    }
}

impl<R: DiffRing> CommRing for Rescaled<R> {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        self.base.zero()
    }

    fn one(&self) -> R::Elem {
        self.base.one()
    }

    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.base.add(a, b)
    }

    fn neg(&self, a: &R::Elem) -> R::Elem {
        self.base.neg(a)
    }

    fn sub(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.base.sub(a, b)
    }

    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        self.base.mul(a, b)
    }

    fn is_zero(&self, a: &R::Elem) -> bool {
        self.base.is_zero(a)
    }

    fn from_rational(&self, q: &Rational) -> Result<R::Elem> {
        self.base.from_rational(q)
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn inverse(&self, a: &R::Elem) -> Option<R::Elem> {
        self.base.inverse(a)
    }

    fn is_unit(&self, a: &R::Elem) -> bool {
        self.base.is_unit(a)
    }

    fn is_field(&self) -> bool {
        self.base.is_field()
    }

    fn format(&self, a: &R::Elem) -> String {
        self.base.format(a)
    }
}

impl<R: DiffRing> DiffRing for Rescaled<R> {
    fn derive(&self, a: &R::Elem) -> R::Elem {
        self.base.mul(&self.factor, &self.base.derive(a))
    }

    fn distinguished_t(&self) -> Option<R::Elem> {
        self.t.clone()
    }

    fn antiderivative(&self, a: &R::Elem) -> Option<R::Elem> {
        let inv = self.base.inverse(&self.factor)?;
        self.base.antiderivative(&self.base.mul(&inv, a))
    }
}

/// `|f·d| = |f|·|d|`, exact because the implemented norms are multiplicative.
impl<R: BanachRing> BanachRing for Rescaled<R> {
    fn prime(&self) -> u64 {
        self.base.prime()
    }

    fn norm(&self, a: &R::Elem) -> NormValue {
        self.base.norm(a)
    }

    fn derivation_norm(&self) -> NormValue {
        self.base.norm(&self.factor) * self.base.derivation_norm()
    }
}

/// Rings whose derivation can be multiplied by a unit.
///
/// Rescaling an already rescaled ring composes the factors, so
/// rescaling by `f` and then by `f⁻¹` gives back factor one.
pub trait RescaleDerivation: DiffRing {
    type Output: DiffRing<Elem = Self::Elem>;

    fn rescale(&self, factor: &Self::Elem) -> Result<Self::Output>;
}

impl<R: DiffRing> RescaleDerivation for Rescaled<R> {
    type Output = Rescaled<R>;

    fn rescale(&self, factor: &R::Elem) -> Result<Rescaled<R>> {
        Rescaled::new(self.base.clone(), self.base.mul(&self.factor, factor))
    }
}

macro_rules! base_rescale {
    ($ty:ty $(, $gen:ident)?) => {
        impl$(<$gen: Field>)? RescaleDerivation for $ty {
            type Output = Rescaled<$ty>;

            fn rescale(&self, factor: &Self::Elem) -> Result<Rescaled<$ty>> {
                Rescaled::new(self.clone(), factor.clone())
            }
        }
    };
}

base_rescale!(FunctionField<K>, K);
base_rescale!(PolyRing<K>, K);
base_rescale!(GaussRing);
base_rescale!(FiniteFieldPolyRing);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::TextRing;

    #[test]
    fn rescaling_by_x() {
        let f = FunctionField::<Rational>::new("x").unwrap();
        let x = f.variable();
        let r = f.rescale(&x).unwrap();
        // (x d)(x^2) = 2x^2
        let x2 = f.mul(&x, &x);
        assert_eq!(r.derive(&x2), f.scale_int(2, &x2));
        // no rational antiderivative of 1/x
        assert!(r.distinguished_t().is_none());
    }

    #[test]
    fn distinguished_element_is_rederived() {
        let f = FunctionField::<Rational>::new("x").unwrap();
        let x = f.variable();
        let inv_x = f.inverse(&x).unwrap();
        let r = f.rescale(&inv_x).unwrap();
        let t = r.distinguished_t().unwrap();
        assert_eq!(r.derive(&t), f.one());
        let g = GaussRing::new("t", 3, 1).unwrap();
        let r = g.rescale(&g.from_int(3)).unwrap();
        assert_eq!(r.derive(&r.distinguished_t().unwrap()), g.one());
        assert_eq!(r.derivation_norm(), NormValue::Pow(0));
        assert!(g.rescale(&g.variable()).is_err());
    }

    #[test]
    fn composing_factors() {
        let f = FunctionField::<Rational>::new("x").unwrap();
        let x = f.variable();
        let r = f.rescale(&x).unwrap();
        let back = r.rescale(&f.inverse(&x).unwrap()).unwrap();
        assert_eq!(back.factor(), &f.one());
        assert_eq!(back.distinguished_t(), f.distinguished_t());
    }
}
