use crate::error::Result;
use crate::poly::Poly;
use crate::rings::{CommRing, DiffRing, TextRing};
use crate::scalar::{Field, Rational};

/// `K[x]` with `d = d/dx` and no norm. Holds the universal `H_s(X)` tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<K> {
    variable: String,
    _scalar: std::marker::PhantomData<K>,
}

impl<K: Field> PolyRing<K> {
    pub fn new(variable: impl Into<String>) -> Self {
        Self {
            variable: variable.into(),
            _scalar: std::marker::PhantomData,
        }
    }
}

impl<K: Field> CommRing for PolyRing<K> {
    type Elem = Poly<K>;

    fn zero(&self) -> Poly<K> {
        Poly::zero()
    }

    fn one(&self) -> Poly<K> {
        Poly::one()
    }

    fn add(&self, a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
        a + b
    }

    fn neg(&self, a: &Poly<K>) -> Poly<K> {
        -a
    }

    fn mul(&self, a: &Poly<K>, b: &Poly<K>) -> Poly<K> {
        a * b
    }

    fn is_zero(&self, a: &Poly<K>) -> bool {
        a.is_zero()
    }

    fn from_rational(&self, q: &Rational) -> Result<Poly<K>> {
        super::function_field::scalar_from_rational(q).map(Poly::constant)
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn inverse(&self, a: &Poly<K>) -> Option<Poly<K>> {
        (a.degree() == Some(0)).then(|| Poly::constant(K::one() / a.leading_coeff()))
    }

    fn is_field(&self) -> bool {
        false
    }

    fn format(&self, a: &Poly<K>) -> String {
        a.format_with(&self.variable)
    }
}

impl<K: Field> DiffRing for PolyRing<K> {
    fn derive(&self, a: &Poly<K>) -> Poly<K> {
        a.derivative()
    }

    fn distinguished_t(&self) -> Option<Poly<K>> {
        Some(Poly::x())
    }

    fn antiderivative(&self, a: &Poly<K>) -> Option<Poly<K>> {
        Some(a.integral())
    }
}

impl<K: Field> TextRing for PolyRing<K> {
    fn variable_name(&self) -> &str {
        &self.variable
    }

    fn variable(&self) -> Poly<K> {
        Poly::x()
    }
}
