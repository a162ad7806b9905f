use crate::error::Result;
use crate::poly::Poly;
use crate::rings::{CommRing, DiffRing};
use crate::scalar::Rational;

/// Polynomial in an auxiliary variable `X` with coefficients in a ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct XPoly<E> {
    coeffs: Vec<E>,
}

impl<E> XPoly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
}

/// `R[X]` with the derivation of `R` extended by `d(X) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XPolyRing<R> {
    base: R,
}

impl<R: DiffRing> XPolyRing<R> {
    pub fn new(base: R) -> Self {
        Self { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> XPoly<R::Elem> {
        while coeffs.last().is_some_and(|c| self.base.is_zero(c)) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn constant(&self, c: R::Elem) -> XPoly<R::Elem> {
        self.from_coeffs(vec![c])
    }

    pub fn x(&self) -> XPoly<R::Elem> {
        self.from_coeffs(vec![self.base.zero(), self.base.one()])
    }

    pub fn coeff(&self, a: &XPoly<R::Elem>, k: usize) -> R::Elem {
        a.coeffs.get(k).cloned().unwrap_or_else(|| self.base.zero())
    }

    /// Maps a polynomial with rational coefficients into `R[X]`.
    pub fn embed(&self, p: &Poly<Rational>) -> Result<XPoly<R::Elem>> {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| self.base.from_rational(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.from_coeffs(coeffs))
    }

    /// Substitutes `X := value` (Horner).
    pub fn evaluate(&self, a: &XPoly<R::Elem>, value: &R::Elem) -> R::Elem {
        a.coeffs
            .iter()
            .rev()
            .fold(self.base.zero(), |acc, c| self.base.add(&self.base.mul(&acc, value), c))
    }
}

impl<R: DiffRing> CommRing for XPolyRing<R> {
    type Elem = XPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        XPoly { coeffs: Vec::new() }
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let len = a.coeffs.len().max(b.coeffs.len());
        self.from_coeffs(
            (0..len)
                .map(|k| match (a.coeffs.get(k), b.coeffs.get(k)) {
                    (Some(x), Some(y)) => self.base.add(x, y),
                    (Some(x), None) | (None, Some(x)) => x.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        XPoly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            return self.zero();
        }
        let mut out = vec![self.base.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if self.base.is_zero(y) {
                    continue;
                }
                out[i + j] = self.base.add(&out[i + j], &self.base.mul(x, y));
            }
        }
        self.from_coeffs(out)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }

    fn from_rational(&self, q: &Rational) -> Result<Self::Elem> {
        Ok(self.constant(self.base.from_rational(q)?))
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem> {
        match a.coeffs.as_slice() {
            [c] => self.base.inverse(c).map(|inv| self.constant(inv)),
            _ => None,
        }
    }

    fn common_denominator(&self, items: &[Self::Elem]) -> Option<Self::Elem> {
        let coeffs: Vec<R::Elem> = items.iter().flat_map(|a| a.coeffs.iter().cloned()).collect();
        self.base.common_denominator(&coeffs).map(|m| self.constant(m))
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        matches!(a.coeffs.as_slice(), [c] if self.base.is_unit(c))
    }

    fn is_field(&self) -> bool {
        false
    }

    fn format(&self, a: &Self::Elem) -> String {
        if a.coeffs.is_empty() {
            return "0".into();
        }
        a.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(k, c)| {
                let text = self.base.format(c);
                let power = match k {
                    0 => return text,
                    1 => "X".to_string(),
                    _ => format!("X^{k}"),
                };
                if *c == self.base.one() {
                    power
                } else {
                    format!("({text})*{power}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<R: DiffRing> DiffRing for XPolyRing<R> {
    fn derive(&self, a: &Self::Elem) -> Self::Elem {
        let len = a.coeffs.len();
        self.from_coeffs(
            (0..len)
                .map(|k| {
                    let own = self.base.derive(&a.coeffs[k]);
                    match a.coeffs.get(k + 1) {
                        Some(next) => self.base.add(&own, &self.base.scale_int(k as i64 + 1, next)),
                        None => own,
                    }
                })
                .collect(),
        )
    }

    fn distinguished_t(&self) -> Option<Self::Elem> {
        Some(self.x())
    }
}
