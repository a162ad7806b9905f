use crate::error::{Error, Result};
use crate::norm::NormValue;
use crate::poly::Poly;
use crate::rings::{BanachRing, CommRing, DiffRing, TextRing};
use crate::scalar::{is_prime, valuation, Rational};

/// Number of monomials `t^k` sampled when validating `|d|`.
const DERIVATION_NORM_SAMPLE: usize = 24;

/// Polynomials over ℚ with the p-adic Gauss norm of radius `p^{-r}`:
/// `|Σ a_i t^i| = max_i |a_i|_p · p^{-r·i}`.
///
/// This models the Tate algebra of the closed disc of that radius. The
/// norm is multiplicative, `|t| = p^{-r}` and `|d| = p^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRing {
    variable: String,
    prime: u64,
    radius_exp: u32,
}

impl GaussRing {
    pub fn new(variable: impl Into<String>, prime: u64, radius_exp: u32) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::InvalidRing(format!("{prime} is not prime")));
        }
        let ring = Self {
            variable: variable.into(),
            prime,
            radius_exp,
        };
        crate::rings::check_distinguished_t(&ring)?;
        let sampled = ring.sampled_derivation_norm();
        if sampled != ring.derivation_norm() {
            return Err(Error::Internal(format!(
                "sampled |d| = {} disagrees with closed form {}",
                sampled.display(prime),
                ring.derivation_norm().display(prime)
            )));
        }
        Ok(ring)
    }

    pub fn radius_exp(&self) -> u32 {
        self.radius_exp
    }

    /// `max |d(t^k)| / |t^k|` over a deterministic monomial sample.
    pub fn sampled_derivation_norm(&self) -> NormValue {
        (0..DERIVATION_NORM_SAMPLE)
            .map(|k| {
                let b = Poly::monomial(Rational::from_integer(1.into()), k);
                self.norm(&self.derive(&b)) / self.norm(&b)
            })
            .max()
            .unwrap_or(NormValue::Zero)
    }

    /// Exponent of `|a|_p · p^{-r·i}`.
    fn term_norm(&self, a: &Rational, i: usize) -> NormValue {
        match valuation(a, self.prime) {
            None => NormValue::Zero,
            Some(v) => NormValue::Pow(-v - self.radius_exp as i64 * i as i64),
        }
    }
}

impl CommRing for GaussRing {
    type Elem = Poly<Rational>;

    fn zero(&self) -> Self::Elem {
        Poly::zero()
    }

    fn one(&self) -> Self::Elem {
        Poly::one()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a + b
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        -a
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a * b
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }

    fn from_rational(&self, q: &Rational) -> Result<Self::Elem> {
        Ok(Poly::constant(q.clone()))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        (a.degree() == Some(0)).then(|| Poly::constant(a.leading_coeff().recip()))
    }

    /// Units of the Tate algebra: the constant term strictly dominates.
    fn is_unit(&self, a: &Self::Elem) -> bool {
        let head = self.term_norm(&a.coeff(0), 0);
        !head.is_zero()
            && a.coeffs()
                .iter()
                .enumerate()
                .skip(1)
                .all(|(i, c)| self.term_norm(c, i) < head)
    }

    fn is_field(&self) -> bool {
        false
    }

    fn format(&self, a: &Self::Elem) -> String {
        a.format_with(&self.variable)
    }
}

impl DiffRing for GaussRing {
    fn derive(&self, a: &Self::Elem) -> Self::Elem {
        a.derivative()
    }

    fn distinguished_t(&self) -> Option<Self::Elem> {
        Some(Poly::x())
    }

    fn antiderivative(&self, a: &Self::Elem) -> Option<Self::Elem> {
        Some(a.integral())
    }
}

impl BanachRing for GaussRing {
    fn prime(&self) -> u64 {
        self.prime
    }

    fn norm(&self, a: &Self::Elem) -> NormValue {
        a.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| self.term_norm(c, i))
            .max()
            .unwrap_or(NormValue::Zero)
    }

    fn derivation_norm(&self) -> NormValue {
        NormValue::Pow(self.radius_exp as i64)
    }
}

impl TextRing for GaussRing {
    fn variable_name(&self) -> &str {
        &self.variable
    }

    fn variable(&self) -> Self::Elem {
        Poly::x()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::integer;

    fn poly(cs: &[i64]) -> Poly<Rational> {
        Poly::new(cs.iter().map(|&c| integer(c)).collect())
    }

    #[test]
    fn element_norms() {
        let r = GaussRing::new("t", 2, 0).unwrap();
        assert_eq!(r.norm(&poly(&[4])), NormValue::Pow(-2));
        let r = GaussRing::new("t", 3, 0).unwrap();
        assert_eq!(r.norm(&poly(&[1, 3])), NormValue::ONE);
        let r = GaussRing::new("t", 5, 1).unwrap();
        assert_eq!(r.norm(&poly(&[0, 1])), NormValue::Pow(-1));
        assert_eq!(r.norm(&poly(&[])), NormValue::Zero);
    }

    #[test]
    fn derivation_norms() {
        assert_eq!(GaussRing::new("t", 3, 0).unwrap().derivation_norm(), NormValue::ONE);
        let r = GaussRing::new("t", 2, 1).unwrap();
        assert_eq!(r.derivation_norm(), NormValue::Pow(1));
        assert_eq!(r.sampled_derivation_norm(), NormValue::Pow(1));
        for (p, k) in [(2, 0), (3, 2), (5, 1)] {
            let r = GaussRing::new("t", p, k).unwrap();
            let t = r.distinguished_t().unwrap();
            assert!(r.derivation_norm() * r.norm(&t) >= NormValue::ONE);
        }
    }

    #[test]
    fn tate_units() {
        let r = GaussRing::new("t", 3, 0).unwrap();
        assert!(r.is_unit(&poly(&[1, 3])));
        assert!(!r.is_unit(&poly(&[1, 1])));
        assert!(!r.is_unit(&poly(&[3, 1])));
        assert!(!r.is_unit(&poly(&[])));
        // with |t| = 1/3 the linear term no longer competes
        let r = GaussRing::new("t", 3, 1).unwrap();
        assert!(r.is_unit(&poly(&[1, 1])));
        assert!(r.inverse(&poly(&[1, 1])).is_none());
    }

    #[test]
    fn rejects_composite_prime() {
        assert!(GaussRing::new("t", 6, 0).is_err());
    }
}
