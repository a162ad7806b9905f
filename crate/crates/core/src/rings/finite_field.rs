use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::gf::{GfContext, GfElem, GENERATOR_SYMBOL};
use crate::rings::{CommRing, DiffRing, TextRing};
use crate::scalar::Rational;

/// Polynomial over GF(p^e), ascending, trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FqPoly(Vec<GfElem>);

impl FqPoly {
    pub fn coeffs(&self) -> &[GfElem] {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
}

/// `𝔽_q[x]` with `d = d/dx`, `t = x`. Carries no norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteFieldPolyRing {
    variable: String,
    field: GfContext,
}

impl FiniteFieldPolyRing {
    pub fn new(variable: impl Into<String>, p: u64, e: u32) -> Result<Self> {
        let variable = variable.into();
        if e > 1 && variable == GENERATOR_SYMBOL {
            return Err(Error::InvalidRing(format!(
                "variable name '{GENERATOR_SYMBOL}' is reserved for the generator of GF({p}^{e})"
            )));
        }
        let ring = Self {
            variable,
            field: GfContext::new(p, e)?,
        };
        crate::rings::check_distinguished_t(&ring)?;
        Ok(ring)
    }

    pub fn field(&self) -> &GfContext {
        &self.field
    }

    /// Builds a polynomial from coefficients, normalizing.
    pub fn poly(&self, mut coeffs: Vec<GfElem>) -> FqPoly {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        FqPoly(coeffs)
    }

    pub fn monomial(&self, c: GfElem, k: usize) -> FqPoly {
        let mut coeffs = vec![self.field.zero(); k + 1];
        coeffs[k] = c;
        self.poly(coeffs)
    }

    fn coeff(&self, a: &FqPoly, k: usize) -> GfElem {
        a.0.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    fn format_coeff(&self, c: &GfElem, k: usize) -> String {
        let text = self.field.format(c);
        let is_one = *c == self.field.one();
        let wrapped = if text.contains(' ') && k > 0 {
            format!("({text})")
        } else {
            text
        };
        crate::poly::format_term(&wrapped, is_one, k, &self.variable)
    }
}

impl CommRing for FiniteFieldPolyRing {
    type Elem = FqPoly;

    fn zero(&self) -> FqPoly {
        FqPoly(Vec::new())
    }

    fn one(&self) -> FqPoly {
        self.poly(vec![self.field.one()])
    }

    fn add(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        let len = a.0.len().max(b.0.len());
        self.poly(
            (0..len)
                .map(|k| self.field.add(&self.coeff(a, k), &self.coeff(b, k)))
                .collect(),
        )
    }

    fn neg(&self, a: &FqPoly) -> FqPoly {
        FqPoly(a.0.iter().map(|c| self.field.neg(c)).collect())
    }

    fn mul(&self, a: &FqPoly, b: &FqPoly) -> FqPoly {
        if a.0.is_empty() || b.0.is_empty() {
            return self.zero();
        }
        let mut out = vec![self.field.zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] = self.field.add(&out[i + j], &self.field.mul(x, y));
            }
        }
        self.poly(out)
    }

    fn is_zero(&self, a: &FqPoly) -> bool {
        a.0.is_empty()
    }

    fn from_rational(&self, q: &Rational) -> Result<FqPoly> {
        let p = BigInt::from(self.field.characteristic());
        let reduce = |k: &BigInt| k.mod_floor(&p).to_i64().expect("reduced below p");
        let den = self.field.from_i64(reduce(q.denom()));
        let inv = self
            .field
            .inverse(&den)
            .ok_or_else(|| Error::NotInvertible(format!("{} in characteristic {}", q.denom(), p)))?;
        let num = self.field.from_i64(reduce(q.numer()));
        Ok(self.poly(vec![self.field.mul(&num, &inv)]))
    }

    fn characteristic(&self) -> u64 {
        self.field.characteristic()
    }

    fn inverse(&self, a: &FqPoly) -> Option<FqPoly> {
        if a.0.len() != 1 {
            return None;
        }
        self.field.inverse(&a.0[0]).map(|c| self.poly(vec![c]))
    }

    fn is_field(&self) -> bool {
        false
    }

    fn format(&self, a: &FqPoly) -> String {
        if a.0.is_empty() {
            return "0".into();
        }
        a.0.iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !self.field.is_zero(c))
            .map(|(k, c)| self.format_coeff(c, k))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl DiffRing for FiniteFieldPolyRing {
    fn derive(&self, a: &FqPoly) -> FqPoly {
        self.poly(
            a.0.iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| self.field.mul(&self.field.from_i64(k as i64), c))
                .collect(),
        )
    }

    fn distinguished_t(&self) -> Option<FqPoly> {
        Some(self.monomial(self.field.one(), 1))
    }

    /// Termwise integration; fails when some `x^{k}` with `p | k+1` appears.
    fn antiderivative(&self, a: &FqPoly) -> Option<FqPoly> {
        let mut out = vec![self.field.zero()];
        for (k, c) in a.0.iter().enumerate() {
            if self.field.is_zero(c) {
                out.push(self.field.zero());
                continue;
            }
            let inv = self.field.inverse(&self.field.from_i64(k as i64 + 1))?;
            out.push(self.field.mul(c, &inv));
        }
        Some(self.poly(out))
    }
}

impl TextRing for FiniteFieldPolyRing {
    fn variable_name(&self) -> &str {
        &self.variable
    }

    fn variable(&self) -> FqPoly {
        self.monomial(self.field.one(), 1)
    }

    fn symbol(&self, name: &str) -> Option<FqPoly> {
        (self.field.degree() > 1 && name == GENERATOR_SYMBOL).then(|| self.poly(vec![self.field.generator()]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_to_the_p_is_a_constant() {
        for p in [2u64, 3, 5, 7] {
            let r = FiniteFieldPolyRing::new("x", p, 1).unwrap();
            let xp = r.pow(&r.variable(), p as u32);
            assert!(r.is_zero(&r.derive(&xp)));
            let xq = r.pow(&r.variable(), p as u32 + 1);
            assert!(!r.is_zero(&r.derive(&xq)));
        }
    }

    #[test]
    fn literal_reduction() {
        let r = FiniteFieldPolyRing::new("x", 3, 1).unwrap();
        assert!(r.is_zero(&r.from_int(6)));
        assert_eq!(r.from_rational(&crate::scalar::rational(1, 2)).unwrap(), r.from_int(2));
        assert!(r.from_rational(&crate::scalar::rational(1, 3)).is_err());
    }

    #[test]
    fn generator_is_reserved() {
        assert!(FiniteFieldPolyRing::new("z", 2, 2).is_err());
        assert!(FiniteFieldPolyRing::new("z", 2, 1).is_ok());
        let r = FiniteFieldPolyRing::new("x", 2, 2).unwrap();
        let z = r.symbol("z").unwrap();
        assert!(r.is_constant(&z));
        assert_eq!(r.format(&r.mul(&r.add(&z, &r.one()), &r.variable())), "(z + 1)*x");
    }
}
