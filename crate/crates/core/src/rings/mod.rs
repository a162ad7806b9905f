//! Coefficient rings with a distinguished derivation.
//!
//! Arithmetic goes through a ring object rather than operator overloading
//! so that rings with runtime parameters (the prime of a finite field, the
//! radius of a Gauss norm) work the same way as parameter-free ones.

mod diffpoly;
mod finite_field;
mod function_field;
mod gauss;
mod poly_ring;
mod rescaled;
mod xpoly;

pub use diffpoly::{DiffPoly, DiffPolyRing, Indeterminate};
pub use finite_field::{FiniteFieldPolyRing, FqPoly};
pub use function_field::FunctionField;
pub use gauss::GaussRing;
pub use poly_ring::PolyRing;
pub use rescaled::{RescaleDerivation, Rescaled};
pub use xpoly::{XPoly, XPolyRing};

use std::fmt::Debug;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::norm::NormValue;
use crate::scalar::{factorial, integer, Rational};

/// A commutative ring with unit and exact, decidable equality.
#[allow(clippy::wrong_self_convention)]
pub trait CommRing: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Image of a rational number; fails if its denominator is not a unit.
    fn from_rational(&self, q: &Rational) -> Result<Self::Elem>;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    /// The inverse when it exists inside this ring's representation.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_field(&self) -> bool;

    /// Canonical text form, accepted back by [`crate::parse::parse_element`].
    fn format(&self, a: &Self::Elem) -> String;

    /// Whether `a` is a unit of the ring being modelled. Defaults to
    /// [`CommRing::inverse`] succeeding.
    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inverse(a).is_some()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn from_int(&self, k: i64) -> Self::Elem {
        self.from_rational(&integer(k)).expect("integers always embed")
    }

    fn from_bigint(&self, k: &BigInt) -> Self::Elem {
        self.from_rational(&Rational::from_integer(k.clone()))
            .expect("integers always embed")
    }

    fn divide(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        self.inverse(b)
            .map(|inv| self.mul(a, &inv))
            .ok_or_else(|| Error::Division(self.format(b)))
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn scale_int(&self, k: i64, a: &Self::Elem) -> Self::Elem {
        self.mul(&self.from_int(k), a)
    }

    /// A unit `m` such that every `m·a` is denominator-free, for rings
    /// where that makes arithmetic cheaper. `None` means no such notion.
    fn common_denominator(&self, _items: &[Self::Elem]) -> Option<Self::Elem> {
        None
    }
}

/// A commutative ring with a derivation `d`.
pub trait DiffRing: CommRing {
    fn derive(&self, a: &Self::Elem) -> Self::Elem;

    /// An element `t` with `d(t) = 1`, when the ring has one.
    fn distinguished_t(&self) -> Option<Self::Elem>;

    /// Some `b` with `d(b) = a`, when one is easy to find.
    fn antiderivative(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn is_constant(&self, a: &Self::Elem) -> bool {
        self.is_zero(&self.derive(a))
    }

    fn derive_n(&self, a: &Self::Elem, k: usize) -> Self::Elem {
        (0..k).fold(a.clone(), |acc, _| self.derive(&acc))
    }
}

/// A differential ring carrying an ultrametric norm with values in `p^ℤ`.
pub trait BanachRing: DiffRing {
    fn prime(&self) -> u64;
    fn norm(&self, a: &Self::Elem) -> NormValue;

    /// Exact operator norm `sup |d(b)| / |b|`.
    fn derivation_norm(&self) -> NormValue;

    /// `|k|` for an integer `k`.
    fn int_norm(&self, k: &BigInt) -> NormValue {
        self.norm(&self.from_bigint(k))
    }

    fn factorial_norm(&self, k: u64) -> NormValue {
        self.int_norm(&factorial(k))
    }
}

/// Text-level access used by the expression parser.
pub trait TextRing: CommRing {
    fn variable_name(&self) -> &str;
    fn variable(&self) -> Self::Elem;

    /// Extra named constants (the GF(p^e) generator).
    fn symbol(&self, _name: &str) -> Option<Self::Elem> {
        None
    }
}

/// Fails unless `k!` is a unit.
pub fn require_factorial_invertible<R: CommRing>(ring: &R, n: usize) -> Result<()> {
    let p = ring.characteristic();
    if p != 0 && (p as usize) < n {
        return Err(Error::FactorialNotInvertible { n, characteristic: p });
    }
    Ok(())
}

/// Verifies `d(t) = 1` for the distinguished element, if any.
pub(crate) fn check_distinguished_t<R: DiffRing>(ring: &R) -> Result<()> {
    if let Some(t) = ring.distinguished_t() {
        let dt = ring.derive(&t);
        if dt != ring.one() {
            return Err(Error::InvalidRing(format!("d(t) = {} instead of 1", ring.format(&dt))));
        }
    }
    Ok(())
}
