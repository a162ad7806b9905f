//! Differential modules given by a connection matrix.
//!
//! Coordinates are row vectors. Row `i` of `G_s` holds the coordinates of
//! `∇ˢ(e_i)`, and for a vector with coordinates `f`,
//! `∇(f) = d(f) + f·G₁`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::rings::{
    require_factorial_invertible, CommRing, DiffRing, FiniteFieldPolyRing, FqPoly, RescaleDerivation, XPolyRing,
};

/// Coordinates `(f₀, …, f_{n−1})` of a module element in the basis `e`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModuleElement<E> {
    coords: Vec<E>,
}

impl<E: Clone> ModuleElement<E> {
    pub fn new(coords: Vec<E>) -> Self {
        Self { coords }
    }

    pub fn coords(&self) -> &[E] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<E> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DifferentialModule<R: DiffRing> {
    ring: R,
    connection: Matrix<R::Elem>,
}

/// Result of [`DifferentialModule::is_basis`].
#[derive(Clone, Debug, PartialEq)]
pub struct BasisCheck<E> {
    pub determinant: E,
    /// Whether the determinant is a unit of the ring. For field kinds this
    /// is "nonzero"; for the Gauss kind it is the Tate-algebra unit test.
    pub invertible: bool,
}

impl<R: DiffRing> DifferentialModule<R> {
    pub fn new(ring: R, connection: Matrix<R::Elem>) -> Result<Self> {
        if !connection.is_square() || connection.rows() == 0 {
            return Err(Error::Dimension(format!(
                "connection matrix must be square of size >= 1, got {}x{}",
                connection.rows(),
                connection.cols()
            )));
        }
        Ok(Self { ring, connection })
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        let m = Matrix::from_rows(rows)?;
        Self::new(ring, m)
    }

    /// The module with zero connection, `∇ = d` coordinatewise.
    pub fn trivial(ring: R, n: usize) -> Result<Self> {
        let g = matrix::zero(&ring, n, n);
        Self::new(ring, g)
    }

    pub fn rank(&self) -> usize {
        self.connection.rows()
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// `G₁`.
    pub fn connection(&self) -> &Matrix<R::Elem> {
        &self.connection
    }

    /// Fails unless `(n−1)!` is invertible, as the candidate vector needs.
    pub fn require_katz_hypotheses(&self) -> Result<()> {
        require_factorial_invertible(&self.ring, self.rank())
    }

    pub fn basis_vector(&self, i: usize) -> ModuleElement<R::Elem> {
        ModuleElement::new(
            (0..self.rank())
                .map(|j| if i == j { self.ring.one() } else { self.ring.zero() })
                .collect(),
        )
    }

    pub fn zero_vector(&self) -> ModuleElement<R::Elem> {
        ModuleElement::new(vec![self.ring.zero(); self.rank()])
    }

    /// `G₀ = Id, …, G_{s_max}` via `G_{s+1} = d(G_s) + G_s·G₁`.
    pub fn iterated_matrices(&self, s_max: usize) -> Vec<Matrix<R::Elem>> {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(s_max + 1);
        out.push(matrix::identity(ring, self.rank()));
        for s in 0..s_max {
            let g = &out[s];
            let next = matrix::add(ring, &matrix::derive(ring, g), &matrix::mul(ring, g, &self.connection));
            out.push(next);
        }
        out
    }

    fn check_len(&self, v: &ModuleElement<R::Elem>) -> Result<()> {
        if v.len() != self.rank() {
            return Err(Error::Dimension(format!(
                "vector of length {} in a module of rank {}",
                v.len(),
                self.rank()
            )));
        }
        Ok(())
    }

    fn nabla_once(&self, v: &ModuleElement<R::Elem>) -> ModuleElement<R::Elem> {
        let ring = &self.ring;
        let moved = matrix::vec_mul(ring, &v.coords, &self.connection);
        ModuleElement::new(
            v.coords
                .iter()
                .zip(moved)
                .map(|(f, g)| ring.add(&ring.derive(f), &g))
                .collect(),
        )
    }

    /// Coordinates of `∇ᵏ(v)`.
    pub fn apply_nabla(&self, v: &ModuleElement<R::Elem>, k: usize) -> Result<ModuleElement<R::Elem>> {
        self.check_len(v)?;
        Ok((0..k).fold(v.clone(), |acc, _| self.nabla_once(&acc)))
    }

    /// `[v, ∇v, …, ∇^{count−1}v]`.
    pub fn nabla_family(&self, v: &ModuleElement<R::Elem>, count: usize) -> Result<Vec<ModuleElement<R::Elem>>> {
        self.check_len(v)?;
        let mut out: Vec<ModuleElement<R::Elem>> = Vec::with_capacity(count);
        for k in 0..count {
            let next = if k == 0 {
                v.clone()
            } else {
                self.nabla_once(&out[k - 1])
            };
            out.push(next);
        }
        Ok(out)
    }

    /// The coordinate matrix whose rows are the given vectors.
    pub fn coordinate_matrix(&self, vectors: &[ModuleElement<R::Elem>]) -> Result<Matrix<R::Elem>> {
        for v in vectors {
            self.check_len(v)?;
        }
        Matrix::from_rows(vectors.iter().map(|v| v.coords.clone()).collect())
    }

    /// Determinant of the coordinate matrix of exactly `n` vectors.
    pub fn is_basis(&self, vectors: &[ModuleElement<R::Elem>]) -> Result<BasisCheck<R::Elem>> {
        if vectors.len() != self.rank() {
            return Err(Error::Dimension(format!(
                "{} vectors given for a module of rank {}",
                vectors.len(),
                self.rank()
            )));
        }
        let m = self.coordinate_matrix(vectors)?;
        let determinant = matrix::det_expansion(&self.ring, &m)?;
        let invertible = self.ring.is_unit(&determinant);
        Ok(BasisCheck {
            determinant,
            invertible,
        })
    }

    /// Whether `{v, ∇v, …, ∇^{n−1}v}` is a basis.
    pub fn is_cyclic_vector(&self, v: &ModuleElement<R::Elem>) -> Result<BasisCheck<R::Elem>> {
        let family = self.nabla_family(v, self.rank())?;
        self.is_basis(&family)
    }

    /// The module `(M, f·∇)` over `(B, f·d)`, connection `f·G₁`.
    pub fn rescale_derivation(&self, f: &R::Elem) -> Result<DifferentialModule<R::Output>>
    where
        R: RescaleDerivation,
    {
        let ring = self.ring.rescale(f)?;
        let connection = matrix::scale(&self.ring, f, &self.connection);
        DifferentialModule::new(ring, connection)
    }

    /// The same connection over `R[X]` with `d(X) = 1`.
    pub fn extend_by_x(&self) -> DifferentialModule<XPolyRing<R>> {
        let xr = XPolyRing::new(self.ring.clone());
        let connection = self.connection.map(|g| xr.constant(g.clone()));
        DifferentialModule { ring: xr, connection }
    }

    /// Module-wide Leibniz action: `a·v`.
    pub fn scale_vector(&self, a: &R::Elem, v: &ModuleElement<R::Elem>) -> ModuleElement<R::Elem> {
        ModuleElement::new(v.coords.iter().map(|x| self.ring.mul(a, x)).collect())
    }

    pub fn add_vectors(&self, a: &ModuleElement<R::Elem>, b: &ModuleElement<R::Elem>) -> ModuleElement<R::Elem> {
        ModuleElement::new(
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| self.ring.add(x, y))
                .collect(),
        )
    }

    pub fn format_vector(&self, v: &ModuleElement<R::Elem>) -> Vec<String> {
        v.coords.iter().map(|x| self.ring.format(x)).collect()
    }
}

/// Outcome of the characteristic-p nonexistence harness.
#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleReport {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    pub n: usize,
    /// Monomials `x^k`, `k ≤ max_degree`, on which `d^q` was checked.
    pub max_degree: usize,
    pub monomials_checked: usize,
    pub polynomials_checked: usize,
    pub derivation_power_vanishes: bool,
    pub vectors: Vec<WitnessVector>,
    pub all_determinants_zero: bool,
    pub conclusion: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct WitnessVector {
    pub coords: Vec<String>,
    /// Smallest `k` with `∇ᵏ(v) = 0`.
    pub vanishing_power: Option<usize>,
    pub determinant: String,
}

/// Random witnesses drawn per run; the seed is fixed.
const COUNTEREXAMPLE_SAMPLES: usize = 12;
const COUNTEREXAMPLE_SEED: u64 = 0x6b61747a;
/// Largest rank accepted by the harness (expansion determinants).
pub const COUNTEREXAMPLE_MAX_RANK: usize = 16;

fn random_fq_poly(ring: &FiniteFieldPolyRing, rng: &mut ChaCha8Rng, degree: usize) -> FqPoly {
    let field = ring.field();
    let elements: Vec<_> = field.elements().collect();
    ring.poly(
        (0..=degree)
            .map(|_| elements[rng.gen_range(0..elements.len())].clone())
            .collect(),
    )
}

/// Trivial connection on `𝔽_q[x]ⁿ` with `n > q = p^e`: checks that
/// `d^q` kills every monomial up to a degree bound and a sample of
/// polynomials, and that sampled vectors `v` have `∇^k v = 0` for some
/// `k ≤ q < n`, so `det(v, ∇v, …, ∇^{n−1}v) = 0`.
pub fn charp_counterexample(p: u64, e: u32, n: usize) -> Result<CounterexampleReport> {
    let ring = FiniteFieldPolyRing::new("x", p, e)?;
    let q = ring.field().order();
    if n as u64 <= q {
        return Err(Error::Precondition(format!("need n > q, got n = {n}, q = {q}")));
    }
    if n > COUNTEREXAMPLE_MAX_RANK {
        return Err(Error::Unsupported(format!(
            "rank {n} exceeds the harness limit {COUNTEREXAMPLE_MAX_RANK}"
        )));
    }
    let qn = q as usize;
    let max_degree = 12.max(3 * qn);
    let mut rng = ChaCha8Rng::seed_from_u64(COUNTEREXAMPLE_SEED);

    let one = ring.field().one();
    let mut vanishes = true;
    for k in 0..=max_degree {
        let f = ring.monomial(one.clone(), k);
        vanishes &= ring.is_zero(&ring.derive_n(&f, qn));
    }
    for _ in 0..COUNTEREXAMPLE_SAMPLES {
        let f = random_fq_poly(&ring, &mut rng, max_degree);
        vanishes &= ring.is_zero(&ring.derive_n(&f, qn));
    }

    let module = DifferentialModule::trivial(ring.clone(), n)?;
    let mut vectors = Vec::with_capacity(COUNTEREXAMPLE_SAMPLES);
    let mut all_zero = true;
    for _ in 0..COUNTEREXAMPLE_SAMPLES {
        let v = ModuleElement::new((0..n).map(|_| random_fq_poly(&ring, &mut rng, 2 * qn)).collect());
        let family = module.nabla_family(&v, n)?;
        let vanishing_power = family.iter().position(|w| w.coords.iter().all(|c| ring.is_zero(c)));
        let check = module.is_basis(&family)?;
        all_zero &= ring.is_zero(&check.determinant);
        vectors.push(WitnessVector {
            coords: module.format_vector(&v),
            vanishing_power,
            determinant: ring.format(&check.determinant),
        });
    }

    let conclusion = if vanishes && all_zero {
        format!(
            "d^{q} = 0 on F_{q}[x], so nabla^{q} = 0 on F_{q}[x]^{n}; no cyclic vector possible for these witnesses"
        )
    } else {
        "witness check failed".to_string()
    };
    Ok(CounterexampleReport {
        p,
        e,
        q,
        n,
        max_degree,
        monomials_checked: max_degree + 1,
        polynomials_checked: COUNTEREXAMPLE_SAMPLES,
        derivation_power_vanishes: vanishes,
        vectors,
        all_determinants_zero: all_zero,
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_element;
    use crate::rings::{FunctionField, TextRing};
    use crate::scalar::Rational;

    fn qx() -> FunctionField<Rational> {
        FunctionField::new("x").unwrap()
    }

    fn module(rows: &[&[&str]]) -> DifferentialModule<FunctionField<Rational>> {
        let f = qx();
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_element(s, &f).unwrap()).collect())
            .collect();
        DifferentialModule::from_rows(f, rows).unwrap()
    }

    fn vector(m: &DifferentialModule<FunctionField<Rational>>, xs: &[&str]) -> ModuleElement<crate::QRationalFunction> {
        ModuleElement::new(xs.iter().map(|s| parse_element(s, m.ring()).unwrap()).collect())
    }

    #[test]
    fn trivial_connection_iterates_to_zero() {
        let m = DifferentialModule::trivial(qx(), 3).unwrap();
        let gs = m.iterated_matrices(4);
        assert_eq!(gs[0], matrix::identity(m.ring(), 3));
        assert!(gs[1..].iter().all(|g| matrix::is_zero(m.ring(), g)));
    }

    #[test]
    fn constant_connection_iterates_to_powers() {
        let m = module(&[&["1", "2"], &["0", "3"]]);
        let gs = m.iterated_matrices(3);
        let g = m.connection();
        assert_eq!(gs[3], matrix::mul(m.ring(), &matrix::mul(m.ring(), g, g), g));
    }

    #[test]
    fn second_iterate_by_hand() {
        let m = module(&[&["0", "1"], &["x", "0"]]);
        let gs = m.iterated_matrices(2);
        let expected = module(&[&["x", "0"], &["1", "x"]]);
        assert_eq!(gs[2], *expected.connection());
    }

    #[test]
    fn nabla_examples() {
        let m = module(&[&["0", "1"], &["x", "0"]]);
        let e0 = m.basis_vector(0);
        assert_eq!(m.apply_nabla(&e0, 0).unwrap(), e0);
        assert_eq!(m.apply_nabla(&e0, 1).unwrap(), vector(&m, &["0", "1"]));
        assert_eq!(m.apply_nabla(&e0, 2).unwrap(), vector(&m, &["x", "0"]));
        let t = DifferentialModule::trivial(qx(), 2).unwrap();
        let v = vector(&t, &["x", "1"]);
        assert_eq!(t.apply_nabla(&v, 1).unwrap(), vector(&t, &["1", "0"]));
    }

    #[test]
    fn basis_examples() {
        let m = module(&[&["0", "0"], &["1", "0"]]);
        let std: Vec<_> = (0..2).map(|i| m.basis_vector(i)).collect();
        let check = m.is_basis(&std).unwrap();
        assert_eq!(check.determinant, m.ring().one());
        assert!(check.invertible);
        let rep = vec![m.basis_vector(0), m.basis_vector(0)];
        assert!(!m.is_basis(&rep).unwrap().invertible);
        // c = e0 + x e1: c, ∇c = (0, 1) + (x, 0)
        let c = vector(&m, &["1", "x"]);
        let check = m.is_cyclic_vector(&c).unwrap();
        assert_eq!(check.determinant, parse_element("1 - x^2", m.ring()).unwrap());
        assert!(check.invertible);
        assert!(m.is_basis(&std[..1]).is_err());
    }

    #[test]
    fn row_k_of_iterates_is_nabla_of_basis() {
        let m = module(&[&["x", "1", "0"], &["0", "1/x", "x^2"], &["2", "0", "x - 1"]]);
        let gs = m.iterated_matrices(4);
        for (s, g) in gs.iter().enumerate() {
            for k in 0..3 {
                assert_eq!(m.apply_nabla(&m.basis_vector(k), s).unwrap().coords(), g.row(k));
            }
        }
    }

    #[test]
    fn factorial_hypothesis() {
        let f = FiniteFieldPolyRing::new("x", 2, 1).unwrap();
        assert!(DifferentialModule::trivial(f.clone(), 2)
            .unwrap()
            .require_katz_hypotheses()
            .is_ok());
        let err = DifferentialModule::trivial(f, 3)
            .unwrap()
            .require_katz_hypotheses()
            .unwrap_err();
        assert_eq!(
            err,
            Error::FactorialNotInvertible {
                n: 3,
                characteristic: 2
            }
        );
        assert!(DifferentialModule::trivial(qx(), 9)
            .unwrap()
            .require_katz_hypotheses()
            .is_ok());
    }

    #[test]
    fn rescaling_round_trip() {
        let m = module(&[&["0", "x"], &["1", "1/x"]]);
        let x = m.ring().variable();
        let inv = m.ring().inverse(&x).unwrap();
        let once = m.rescale_derivation(&x).unwrap();
        let back = once.rescale_derivation(&inv).unwrap();
        assert_eq!(back.connection(), m.connection());
        assert_eq!(back.ring().factor(), &m.ring().one());
        let same = m.rescale_derivation(&m.ring().one()).unwrap();
        assert_eq!(same.connection(), m.connection());
        assert!(m.rescale_derivation(&m.ring().zero()).is_err());
    }

    #[test]
    fn counterexample_p2() {
        let r = FiniteFieldPolyRing::new("x", 2, 1).unwrap();
        let x3 = r.pow(&r.variable(), 3);
        assert!(r.is_zero(&r.derive_n(&x3, 2)));
        let report = charp_counterexample(2, 1, 3).unwrap();
        assert!(report.derivation_power_vanishes);
        assert!(report.all_determinants_zero);
        assert!(report.vectors.iter().all(|v| v.vanishing_power.is_some_and(|k| k <= 2)));
    }

    #[test]
    fn counterexample_preconditions() {
        assert!(matches!(charp_counterexample(2, 1, 2), Err(Error::Precondition(_))));
        assert!(matches!(charp_counterexample(4, 1, 5), Err(Error::InvalidRing(_))));
        let report = charp_counterexample(2, 2, 5).unwrap();
        assert_eq!(report.q, 4);
        assert!(report.all_determinants_zero && report.derivation_power_vanishes);
    }
}
