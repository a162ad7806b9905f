use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::matrix::Matrix;
use crate::rings::{CommRing, DiffRing};
use crate::scalar::Rational;

/// The indeterminate `g_{ij}^{(k)}`, the `k`-th derivative of `g_{ij}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Indeterminate {
    pub row: u16,
    pub col: u16,
    pub order: u16,
}

type Monomial = Vec<(Indeterminate, u32)>;

/// Element of [`DiffPolyRing`]: a finite ℚ-combination of monomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DiffPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl DiffPoly {
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

fn mono_mul(a: &[(Indeterminate, u32)], b: &[(Indeterminate, u32)]) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `ℚ[g_{ij}^{(k)}]` with `d(g_{ij}^{(k)}) = g_{ij}^{(k+1)}`: the
/// coefficient ring of a module whose connection entries are independent
/// differential indeterminates. It has no element with `d(t) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiffPolyRing;

impl DiffPolyRing {
    pub fn new() -> Self {
        DiffPolyRing
    }

    pub fn indeterminate(&self, row: usize, col: usize, order: usize) -> DiffPoly {
        let var = Indeterminate {
            row: row as u16,
            col: col as u16,
            order: order as u16,
        };
        let mut p = DiffPoly::default();
        p.insert(vec![(var, 1)], Rational::one());
        p
    }

    /// The `n×n` matrix `(g_{ij})`.
    pub fn generic_connection(&self, n: usize) -> Matrix<DiffPoly> {
        Matrix::from_fn(n, n, |i, j| self.indeterminate(i, j, 0))
    }
}

impl CommRing for DiffPolyRing {
    type Elem = DiffPoly;

    fn zero(&self) -> DiffPoly {
        DiffPoly::default()
    }

    fn one(&self) -> DiffPoly {
        let mut p = DiffPoly::default();
        p.insert(Vec::new(), Rational::one());
        p
    }

    fn add(&self, a: &DiffPoly, b: &DiffPoly) -> DiffPoly {
        let mut out = a.clone();
        for (m, c) in &b.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    fn neg(&self, a: &DiffPoly) -> DiffPoly {
        DiffPoly {
            terms: a.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    fn mul(&self, a: &DiffPoly, b: &DiffPoly) -> DiffPoly {
        let mut out = DiffPoly::default();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                out.insert(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }

    fn is_zero(&self, a: &DiffPoly) -> bool {
        a.terms.is_empty()
    }

    fn from_rational(&self, q: &Rational) -> Result<DiffPoly> {
        let mut p = DiffPoly::default();
        p.insert(Vec::new(), q.clone());
        Ok(p)
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn inverse(&self, a: &DiffPoly) -> Option<DiffPoly> {
        match a.terms.iter().next() {
            Some((m, c)) if a.terms.len() == 1 && m.is_empty() => self.from_rational(&c.recip()).ok(),
            _ => None,
        }
    }

    fn is_field(&self) -> bool {
        false
    }

    fn format(&self, a: &DiffPoly) -> String {
        if a.terms.is_empty() {
            return "0".into();
        }
        a.terms
            .iter()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .iter()
                    .map(|(v, e)| {
                        let base = format!("g{}{}{}", v.row, v.col, "'".repeat(v.order as usize));
                        if *e == 1 {
                            base
                        } else {
                            format!("{base}^{e}")
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else if c.is_one() {
                    vars.join("*")
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl DiffRing for DiffPolyRing {
    fn derive(&self, a: &DiffPoly) -> DiffPoly {
        let mut out = DiffPoly::default();
        for (m, c) in &a.terms {
            for (idx, (v, e)) in m.iter().enumerate() {
                let mut rest = m.clone();
                if *e == 1 {
                    rest.remove(idx);
                } else {
                    rest[idx].1 -= 1;
                }
                let next = Indeterminate {
                    order: v.order + 1,
                    ..*v
                };
                let mono = mono_mul(&rest, &[(next, 1)]);
                out.insert(mono, c * Rational::from_integer((*e).into()));
            }
        }
        out
    }

    fn distinguished_t(&self) -> Option<DiffPoly> {
        None
    }
}
