//! The explicit cyclic vector candidate and the universal decomposition of its base change.
//!
//! For a module with basis `e` the vector
//! `c(e, X) = Σ_j (Xʲ/j!) Σ_k (−1)ᵏ C(j,k) ∇ᵏ(e_{j−k})` lives in `M[X]`
//! with `d(X) = 1`. The matrix `H(X)` whose row `i` holds the coordinates
//! of `∇ⁱ(c)` splits as `Σ_s H_s(X)·G_s`, where the `H_s` depend only on
//! `n`: `h_{s;i,j} = α(s;i,j)·X^{s+j−i}/(s+j−i)!`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diffmod::{BasisCheck, DifferentialModule, ModuleElement};
use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::poly::Poly;
use crate::rings::{require_factorial_invertible, CommRing, DiffRing, XPoly, XPolyRing};
use crate::scalar::{binomial, factorial, Rational};
use crate::QPolyRing;

fn check_indices(s: usize, i: usize, j: usize, n: usize) -> Result<()> {
    if n == 0 || i >= n || j >= n || s > 2 * n - 2 {
        return Err(Error::IndexOutOfRange(format!(
            "(s, i, j) = ({s}, {i}, {j}) for n = {n}"
        )));
    }
    Ok(())
}

/// Support indicator: `s ∈ [0, n−1+i]` and
/// `j ∈ [max(0, i−s), min(n−1, n−1+i−s)]`.
pub fn epsilon(s: usize, i: usize, j: usize, n: usize) -> Result<bool> {
    check_indices(s, i, j, n)?;
    let (s, i, j, n) = (s as i64, i as i64, j as i64, n as i64);
    Ok(s <= n - 1 + i && j >= (i - s).max(0) && j <= (n - 1).min(n - 1 + i - s))
}

/// `α(s;i,j) = ε·Σ_{k=max(0, s+j−(n−1))}^{min(i,s)} (−1)^{s+k} C(s−k+j, j) C(i, k)`.
pub fn alpha(s: usize, i: usize, j: usize, n: usize) -> Result<BigInt> {
    if !epsilon(s, i, j, n)? {
        return Ok(BigInt::zero());
    }
    let lo = (s + j).saturating_sub(n - 1);
    let hi = i.min(s);
    let mut total = BigInt::zero();
    for k in lo..=hi {
        let term = binomial((s - k + j) as u64, j as u64) * binomial(i as u64, k as u64);
        if (s + k).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// The entry `h_{s;i,j}(X) = α(s;i,j)·X^{s+j−i}/(s+j−i)!` of `H_s`.
pub fn h_entry(s: usize, i: usize, j: usize, n: usize) -> Result<Poly<Rational>> {
    let a = alpha(s, i, j, n)?;
    if a.is_zero() {
        return Ok(Poly::zero());
    }
    // ε = 1 forces s + j ≥ i
    let m = s + j - i;
    Ok(Poly::monomial(Rational::new(a, factorial(m as u64)), m))
}

/// `H_s(X)` as a matrix over `ℚ[X]`.
pub fn h_matrix(s: usize, n: usize) -> Result<Matrix<Poly<Rational>>> {
    if n == 0 || s > 2 * n - 2 {
        return Err(Error::IndexOutOfRange(format!("s = {s} for n = {n}")));
    }
    let rows = (0..n)
        .map(|i| (0..n).map(|j| h_entry(s, i, j, n)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(rows)
}

/// `H₀, …, H_{2n−2}`.
pub fn h_matrices(n: usize) -> Result<Vec<Matrix<Poly<Rational>>>> {
    if n == 0 {
        return Err(Error::IndexOutOfRange("n must be at least 1".into()));
    }
    (0..=2 * n - 2).map(|s| h_matrix(s, n)).collect()
}

/// `H_s(X)` with `X` replaced by `value` (a polynomial in the ring variable).
pub fn h_matrix_at<R: DiffRing>(ring: &R, h: &Matrix<Poly<Rational>>, value: &R::Elem) -> Result<Matrix<R::Elem>> {
    let xr = XPolyRing::new(ring.clone());
    h.try_map(|p| Ok(xr.evaluate(&xr.embed(p)?, value)))
}

/// `1/k!` in the ring.
fn inverse_factorial<R: CommRing>(ring: &R, k: usize) -> Result<R::Elem> {
    ring.from_rational(&Rational::new(BigInt::one(), factorial(k as u64)))
}

fn combine<R: CommRing>(ring: &R, acc: &mut [R::Elem], c: &R::Elem, v: &[R::Elem]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a = ring.add(a, &ring.mul(c, x));
    }
}

/// `c(e, X)` stored by its `X`-coefficients `c_{0,0}, …, c_{0,n−1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct KatzVector<E> {
    coeffs: Vec<ModuleElement<E>>,
}

impl<E: Clone> KatzVector<E> {
    pub fn from_coeffs(coeffs: Vec<ModuleElement<E>>) -> Self {
        Self { coeffs }
    }

    /// `X`-coefficients, lowest first.
    pub fn coeffs(&self) -> &[ModuleElement<E>] {
        &self.coeffs
    }

    /// The vector as an element of `M[X]`, coordinates in `R[X]`.
    pub fn to_x_vector<R: DiffRing<Elem = E>>(&self, xr: &XPolyRing<R>) -> ModuleElement<XPoly<E>> {
        let n = self.coeffs.first().map_or(0, ModuleElement::len);
        ModuleElement::new(
            (0..n)
                .map(|k| xr.from_coeffs(self.coeffs.iter().map(|c| c.coords()[k].clone()).collect()))
                .collect(),
        )
    }

    /// `c(e, t − a)`.
    pub fn specialize<R: DiffRing<Elem = E>>(&self, ring: &R, a: &E) -> Result<ModuleElement<E>> {
        let xr = XPolyRing::new(ring.clone());
        specialize_vector(ring, &self.to_x_vector(&xr), a)
    }
}

/// The candidate `c(e, X)` for `m`; needs `(n−1)!` invertible.
pub fn katz_vector<R: DiffRing>(m: &DifferentialModule<R>) -> Result<KatzVector<R::Elem>> {
    m.require_katz_hypotheses()?;
    let ring = m.ring();
    let n = m.rank();
    let gs = m.iterated_matrices(n - 1);
    let mut coeffs = Vec::with_capacity(n);
    for j in 0..n {
        let mut acc = vec![ring.zero(); n];
        for (k, g) in gs.iter().enumerate().take(j + 1) {
            let mut c = ring.from_bigint(&binomial(j as u64, k as u64));
            if k % 2 == 1 {
                c = ring.neg(&c);
            }
            combine(ring, &mut acc, &c, g.row(j - k));
        }
        let inv = inverse_factorial(ring, j)?;
        coeffs.push(ModuleElement::new(acc.iter().map(|x| ring.mul(&inv, x)).collect()));
    }
    Ok(KatzVector { coeffs })
}

/// `c_{i,j}`, the `Xʲ` coefficient of `∇ⁱ(c₀)` where `c₀ = Σ_m Xᵐ c_{0,m}`:
/// `c_{i,j} = Σ_{k=0}^{i} k!·C(j+k, j)·C(i, k)·∇^{i−k}(c_{0,j+k})`.
pub fn derivative_coefficients<R: DiffRing>(
    m: &DifferentialModule<R>,
    c0: &[ModuleElement<R::Elem>],
    i: usize,
    j: usize,
) -> Result<ModuleElement<R::Elem>> {
    let ring = m.ring();
    let mut acc = vec![ring.zero(); m.rank()];
    for k in 0..=i {
        let Some(c) = c0.get(j + k) else { break };
        let weight = factorial(k as u64) * binomial((j + k) as u64, j as u64) * binomial(i as u64, k as u64);
        let v = m.apply_nabla(c, i - k)?;
        combine(ring, &mut acc, &ring.from_bigint(&weight), v.coords());
    }
    Ok(ModuleElement::new(acc))
}

/// Rebuilds `c_{0,0}, …, c_{0,n−1}` from the constant terms `c_{k,0}` of
/// `∇ᵏ(c₀)`: `c_{0,j} = (1/j!) Σ_k (−1)^{j−k} C(j,k) ∇^{j−k}(c_{k,0})`.
pub fn invert_coefficients<R: DiffRing>(
    m: &DifferentialModule<R>,
    constant_terms: &[ModuleElement<R::Elem>],
) -> Result<Vec<ModuleElement<R::Elem>>> {
    require_factorial_invertible(m.ring(), constant_terms.len())?;
    let ring = m.ring();
    (0..constant_terms.len())
        .map(|j| {
            let mut acc = vec![ring.zero(); m.rank()];
            for (k, ck) in constant_terms.iter().enumerate().take(j + 1) {
                let mut c = ring.from_bigint(&binomial(j as u64, k as u64));
                if (j - k) % 2 == 1 {
                    c = ring.neg(&c);
                }
                let v = m.apply_nabla(ck, j - k)?;
                combine(ring, &mut acc, &c, v.coords());
            }
            let inv = inverse_factorial(ring, j)?;
            Ok(ModuleElement::new(acc.iter().map(|x| ring.mul(&inv, x)).collect()))
        })
        .collect()
}

/// `H(X) = Σ_s H_s(X)·G_s` with its determinant `P(X)`.
#[derive(Clone, Debug)]
pub struct BaseChangeDecomposition<R: DiffRing> {
    ring: XPolyRing<R>,
    h: Vec<Matrix<Poly<Rational>>>,
    g: Vec<Matrix<R::Elem>>,
    assembled: Matrix<XPoly<R::Elem>>,
    determinant: XPoly<R::Elem>,
}

impl<R: DiffRing> BaseChangeDecomposition<R> {
    pub fn rank(&self) -> usize {
        self.assembled.rows()
    }

    /// `R[X]`, where `H(X)` and `P(X)` live.
    pub fn x_ring(&self) -> &XPolyRing<R> {
        &self.ring
    }

    /// `H₀, …, H_{2n−2}`.
    pub fn h_matrices(&self) -> &[Matrix<Poly<Rational>>] {
        &self.h
    }

    /// `G₀, …, G_{2n−2}`.
    pub fn g_matrices(&self) -> &[Matrix<R::Elem>] {
        &self.g
    }

    /// `H(X)`.
    pub fn assembled(&self) -> &Matrix<XPoly<R::Elem>> {
        &self.assembled
    }

    /// `P(X) = det H(X)`.
    pub fn determinant(&self) -> &XPoly<R::Elem> {
        &self.determinant
    }

    /// `r₀, …, r_{n(n−1)}`, zero-padded.
    pub fn determinant_coeffs(&self) -> Vec<R::Elem> {
        let n = self.rank();
        (0..=n * (n - 1))
            .map(|k| self.ring.coeff(&self.determinant, k))
            .collect()
    }

    /// `P(t − a)`.
    pub fn determinant_at(&self, a: &R::Elem) -> Result<R::Elem> {
        specialize(self.ring.base(), &self.determinant, a)
    }

    /// `H(t − a)`.
    pub fn assembled_at(&self, a: &R::Elem) -> Result<Matrix<R::Elem>> {
        let base = self.ring.base();
        self.assembled.try_map(|p| specialize(base, p, a))
    }
}

type Assembly<R> = (
    XPolyRing<R>,
    Vec<Matrix<Poly<Rational>>>,
    Vec<Matrix<<R as CommRing>::Elem>>,
    Matrix<XPoly<<R as CommRing>::Elem>>,
);

fn assemble<R: DiffRing>(m: &DifferentialModule<R>) -> Result<Assembly<R>> {
    m.require_katz_hypotheses()?;
    let n = m.rank();
    let h = h_matrices(n)?;
    let g = m.iterated_matrices(2 * n - 2);
    let xr = XPolyRing::new(m.ring().clone());
    let mut assembled = matrix::zero(&xr, n, n);
    for (hs, gs) in h.iter().zip(&g) {
        let hx = hs.try_map(|p| xr.embed(p))?;
        let gx = gs.map(|e| xr.constant(e.clone()));
        assembled = matrix::add(&xr, &assembled, &matrix::mul(&xr, &hx, &gx));
    }
    Ok((xr, h, g, assembled))
}

/// `H(X) = Σ_s H_s(X)·G_s` alone, without its determinant.
pub fn assemble_h<R: DiffRing>(m: &DifferentialModule<R>) -> Result<Matrix<XPoly<R::Elem>>> {
    Ok(assemble(m)?.3)
}

/// Assembles `H(X)` and `P(X)` for `m`.
pub fn base_change<R: DiffRing>(m: &DifferentialModule<R>) -> Result<BaseChangeDecomposition<R>> {
    let (ring, h, g, assembled) = assemble(m)?;
    let determinant = matrix::det_expansion(&ring, &assembled)?;
    Ok(BaseChangeDecomposition {
        ring,
        h,
        g,
        assembled,
        determinant,
    })
}

/// `t − a` after checking `d(a) = 0`.
fn shifted_t<R: DiffRing>(ring: &R, a: &R::Elem) -> Result<R::Elem> {
    if !ring.is_constant(a) {
        return Err(Error::NotConstant(ring.format(a)));
    }
    let t = ring
        .distinguished_t()
        .ok_or_else(|| Error::Unsupported("ring has no element t with d(t) = 1".into()))?;
    Ok(ring.sub(&t, a))
}

/// Substitutes `X := t − a`.
pub fn specialize<R: DiffRing>(ring: &R, p: &XPoly<R::Elem>, a: &R::Elem) -> Result<R::Elem> {
    let value = shifted_t(ring, a)?;
    Ok(XPolyRing::new(ring.clone()).evaluate(p, &value))
}

/// Substitutes `X := t − a` in every coordinate.
pub fn specialize_vector<R: DiffRing>(
    ring: &R,
    v: &ModuleElement<XPoly<R::Elem>>,
    a: &R::Elem,
) -> Result<ModuleElement<R::Elem>> {
    let value = shifted_t(ring, a)?;
    let xr = XPolyRing::new(ring.clone());
    Ok(ModuleElement::new(
        v.coords().iter().map(|p| xr.evaluate(p, &value)).collect(),
    ))
}

/// Outcome of [`find_cyclic`].
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicSearch<E> {
    /// Position of the winning constant in the candidate list.
    pub index: usize,
    pub constant: E,
    /// `c(e, t − a)`.
    pub vector: ModuleElement<E>,
    /// `P(t − a)`.
    pub determinant: E,
}

/// `0, 1, …, n(n−1)` in the ring.
pub fn default_candidates<R: CommRing>(ring: &R, n: usize) -> Vec<R::Elem> {
    (0..=n * (n - 1)).map(|k| ring.from_int(k as i64)).collect()
}

/// Returns the first candidate `a` for which `P(t − a)` is a unit, with
/// the specialized candidate vector.
///
/// Without explicit candidates the ring must be a field of characteristic
/// zero and `0, 1, …, n(n−1)` are used.
pub fn find_cyclic<R: DiffRing>(
    m: &DifferentialModule<R>,
    candidates: Option<&[R::Elem]>,
) -> Result<CyclicSearch<R::Elem>> {
    let ring = m.ring();
    let n = m.rank();
    let owned;
    let candidates = match candidates {
        Some(c) => c,
        None => {
            if !ring.is_field() || ring.characteristic() != 0 {
                return Err(Error::Precondition(
                    "default candidates need a field of characteristic 0; pass constants explicitly".into(),
                ));
            }
            owned = default_candidates(ring, n);
            &owned[..]
        }
    };
    for (i, a) in candidates.iter().enumerate() {
        if !ring.is_constant(a) {
            return Err(Error::NotConstant(ring.format(a)));
        }
        if let Some(j) = candidates[..i].iter().position(|b| b == a) {
            return Err(Error::DuplicateCandidates(j, i));
        }
    }
    let bc = base_change(m)?;
    let kv = katz_vector(m)?;
    for (index, a) in candidates.iter().enumerate() {
        let determinant = bc.determinant_at(a)?;
        if ring.is_unit(&determinant) {
            return Ok(CyclicSearch {
                index,
                constant: a.clone(),
                vector: kv.specialize(ring, a)?,
                determinant,
            });
        }
    }
    let enough = candidates.len() > n * (n - 1);
    if enough && ring.is_field() {
        Err(Error::Internal(format!(
            "all {} distinct candidates give P(t - a) = 0",
            candidates.len()
        )))
    } else {
        Err(Error::Precondition(format!(
            "none of the {} candidates gives an invertible P(t - a)",
            candidates.len()
        )))
    }
}

/// `∏_{i<j} (a_j − a_i)`.
pub fn vandermonde_det<R: CommRing>(ring: &R, constants: &[R::Elem]) -> R::Elem {
    let mut acc = ring.one();
    for j in 0..constants.len() {
        for i in 0..j {
            acc = ring.mul(&acc, &ring.sub(&constants[j], &constants[i]));
        }
    }
    acc
}

/// The matrix `(v_iʲ)`.
pub fn vandermonde_matrix<R: CommRing>(ring: &R, values: &[R::Elem]) -> Matrix<R::Elem> {
    let k = values.len();
    Matrix::from_fn(k, k, |i, j| ring.pow(&values[i], j as u32))
}

/// `b₀, …, b_{n−1}` with `∇ⁿ(c) = Σ b_k ∇ᵏ(c)`.
pub fn companion_form<R: DiffRing>(m: &DifferentialModule<R>, c: &ModuleElement<R::Elem>) -> Result<Vec<R::Elem>> {
    let n = m.rank();
    let family = m.nabla_family(c, n + 1)?;
    let basis = m.coordinate_matrix(&family[..n])?;
    let check: BasisCheck<R::Elem> = m.is_basis(&family[..n])?;
    if !check.invertible {
        return Err(Error::NotABasis);
    }
    matrix::solve_left(m.ring(), &basis, family[n].coords())
}

/// `∇ⁿ(c) − Σ b_k ∇ᵏ(c)`; zero exactly when `b` is the companion form.
pub fn companion_residual<R: DiffRing>(
    m: &DifferentialModule<R>,
    c: &ModuleElement<R::Elem>,
    b: &[R::Elem],
) -> Result<ModuleElement<R::Elem>> {
    let ring = m.ring();
    let n = m.rank();
    let family = m.nabla_family(c, n + 1)?;
    let mut acc = family[n].coords().to_vec();
    for (bk, v) in b.iter().zip(&family) {
        combine(ring, &mut acc, &ring.neg(bk), v.coords());
    }
    Ok(ModuleElement::new(acc))
}

/// Canonical text of an `H_s` entry, e.g. `-3*X`, `1/2*X^2`.
pub fn format_h_entry(p: &Poly<Rational>) -> String {
    p.format_with("X")
}

/// LaTeX for `H₀, …, H_{2n−2}`, one `pmatrix` per `s`, entries written as
/// `α\frac{X^{m}}{m!}`.
pub fn latex_tables(n: usize) -> Result<String> {
    let mut out = String::new();
    out.push_str(&format!("% H_s(X) for n = {n}\n"));
    for s in 0..=2 * n.max(1) - 2 {
        out.push_str(&format!("H_{{{s}}}(X) = \\begin{{pmatrix}}\n"));
        for i in 0..n {
            let row = (0..n).map(|j| latex_entry(s, i, j, n)).collect::<Result<Vec<_>>>()?;
            out.push_str("  ");
            out.push_str(&row.join(" & "));
            out.push_str(if i + 1 < n { " \\\\\n" } else { "\n" });
        }
        out.push_str("\\end{pmatrix}\n");
    }
    Ok(out)
}

fn latex_entry(s: usize, i: usize, j: usize, n: usize) -> Result<String> {
    let a = alpha(s, i, j, n)?;
    if a.is_zero() {
        return Ok("0".into());
    }
    let m = s + j - i;
    let coeff = if a == BigInt::one() {
        String::new()
    } else if a == -BigInt::one() {
        "-".into()
    } else {
        a.to_string()
    };
    Ok(match m {
        0 => a.to_string(),
        1 => format!("{coeff}X"),
        _ => format!("{coeff}\\frac{{X^{{{m}}}}}{{{m}!}}"),
    })
}

/// The ring of `H_s` entries.
pub fn table_ring() -> QPolyRing {
    QPolyRing::new("X")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_element;
    use crate::rings::{FunctionField, TextRing};
    use crate::scalar::integer;

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

    fn table(s: usize, n: usize) -> Vec<Vec<String>> {
        h_matrix(s, n)
            .unwrap()
            .to_rows()
            .iter()
            .map(|r| r.iter().map(format_h_entry).collect())
            .collect()
    }

    #[test]
    fn epsilon_examples() {
        for n in 1..6 {
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(epsilon(0, i, j, n).unwrap(), j >= i);
                }
            }
        }
        assert!(!epsilon(4, 1, 0, 3).unwrap());
        assert!(epsilon(2, 2, 1, 3).unwrap());
        assert!(epsilon(5, 0, 0, 3).is_err());
        assert!(epsilon(0, 3, 0, 3).is_err());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha(1, 0, 1, 3).unwrap(), BigInt::from(-2));
        assert_eq!(alpha(2, 2, 1, 3).unwrap(), BigInt::from(-3));
        assert_eq!(alpha(3, 3, 1, 4).unwrap(), BigInt::from(4));
        assert_eq!(alpha(4, 4, 2, 5).unwrap(), BigInt::from(25));
        for n in 1..7 {
            for i in 0..n {
                for j in i..n {
                    assert_eq!(alpha(0, i, j, n).unwrap(), BigInt::one());
                }
            }
        }
    }

    #[test]
    fn n2_table() {
        assert_eq!(table(0, 2), [["1", "X"], ["0", "1"]]);
        assert_eq!(table(1, 2), [["-X", "0"], ["0", "X"]]);
        assert_eq!(table(2, 2), [["0", "0"], ["-X", "0"]]);
    }

    #[test]
    fn n3_third_table() {
        assert_eq!(
            table(3, 3),
            [["0", "0", "0"], ["1/2*X^2", "0", "0"], ["X", "-X^2", "0"]]
        );
    }

    #[test]
    fn katz_vector_examples() {
        let triv = DifferentialModule::trivial(qx(), 3).unwrap();
        let kv = katz_vector(&triv).unwrap();
        for (j, c) in kv.coeffs().iter().enumerate() {
            let expected = triv.scale_vector(&inverse_factorial(triv.ring(), j).unwrap(), &triv.basis_vector(j));
            assert_eq!(*c, expected);
        }
        let up = module(&[&["0", "1"], &["0", "0"]]);
        let kv = katz_vector(&up).unwrap();
        assert_eq!(kv.coeffs()[0], up.basis_vector(0));
        assert_eq!(kv.coeffs()[1], up.zero_vector());
        let down = module(&[&["0", "0"], &["1", "0"]]);
        let kv = katz_vector(&down).unwrap();
        assert_eq!(kv.coeffs()[1], down.basis_vector(1));
    }

    #[test]
    fn base_change_examples() {
        let down = module(&[&["0", "0"], &["1", "0"]]);
        let bc = base_change(&down).unwrap();
        let xr = bc.x_ring();
        let f = down.ring();
        let one = xr.one();
        let x = xr.x();
        assert_eq!(
            bc.assembled().to_rows(),
            vec![vec![one.clone(), x.clone()], vec![x.clone(), one]]
        );
        let p = xr.from_coeffs(vec![f.one(), f.zero(), f.from_int(-1)]);
        assert_eq!(*bc.determinant(), p);
        assert_eq!(bc.determinant_coeffs().len(), 3);
        let triv = DifferentialModule::trivial(qx(), 3).unwrap();
        let bc = base_change(&triv).unwrap();
        assert_eq!(*bc.determinant(), bc.x_ring().one());
    }

    #[test]
    fn specialization() {
        let f = qx();
        let xr = XPolyRing::new(f.clone());
        assert_eq!(specialize(&f, &xr.x(), &f.zero()).unwrap(), f.variable());
        let p = xr.from_coeffs(vec![f.one(), f.zero(), f.from_int(-1)]);
        let a = f.from_int(3);
        let expected = parse_element("1 - (x - 3)^2", &f).unwrap();
        assert_eq!(specialize(&f, &p, &a).unwrap(), expected);
        assert!(matches!(specialize(&f, &p, &f.variable()), Err(Error::NotConstant(_))));
    }

    #[test]
    fn find_cyclic_examples() {
        let down = module(&[&["0", "0"], &["1", "0"]]);
        let found = find_cyclic(&down, None).unwrap();
        assert_eq!(found.index, 0);
        assert_eq!(found.determinant, parse_element("1 - x^2", down.ring()).unwrap());
        assert!(down.is_cyclic_vector(&found.vector).unwrap().invertible);
        let f = down.ring();
        let dup = [f.from_int(1), f.from_int(2), f.from_int(1)];
        assert_eq!(find_cyclic(&down, Some(&dup)), Err(Error::DuplicateCandidates(0, 2)));
        let bad = [f.variable()];
        assert!(matches!(find_cyclic(&down, Some(&bad)), Err(Error::NotConstant(_))));
    }

    #[test]
    fn vandermonde() {
        let f = qx();
        let c = |v: &[i64]| v.iter().map(|k| f.from_int(*k)).collect::<Vec<_>>();
        assert_eq!(vandermonde_det(&f, &c(&[0, 1])), f.one());
        assert_eq!(vandermonde_det(&f, &c(&[0, 1, 2])), f.from_int(2));
        assert!(f.is_zero(&vandermonde_det(&f, &c(&[0, 1, 0]))));
        let seven = c(&[0, 1, 2, 3, 4, 5, 6]);
        let brute = matrix::det_expansion(&f, &vandermonde_matrix(&f, &seven)).unwrap();
        assert_eq!(vandermonde_det(&f, &seven), brute);
    }

    #[test]
    fn companion_examples() {
        let one = module(&[&["x^2 + 1"]]);
        let b = companion_form(&one, &one.basis_vector(0)).unwrap();
        assert_eq!(b, vec![parse_element("x^2 + 1", one.ring()).unwrap()]);
        let down = module(&[&["0", "0"], &["1", "0"]]);
        let c = katz_vector(&down)
            .unwrap()
            .specialize(down.ring(), &down.ring().zero())
            .unwrap();
        let b = companion_form(&down, &c).unwrap();
        let r = companion_residual(&down, &c, &b).unwrap();
        assert!(r.coords().iter().all(|x| down.ring().is_zero(x)));
        assert_eq!(companion_form(&down, &down.zero_vector()), Err(Error::NotABasis));
    }

    #[test]
    fn latex_layout() {
        let tex = latex_tables(3).unwrap();
        assert!(tex.contains("H_{1}(X) = \\begin{pmatrix}\n  -X & -2\\frac{X^{2}}{2!} & 0 \\\\"));
        assert!(tex.contains("H_{0}(X) = \\begin{pmatrix}\n  1 & X & \\frac{X^{2}}{2!} \\\\"));
    }

    #[test]
    fn rational_coefficients_of_tables() {
        let r = table_ring();
        let h = h_matrix(2, 3).unwrap();
        assert_eq!(*h.get(0, 0), Poly::monomial(Rational::new(1.into(), 2.into()), 2));
        assert_eq!(r.format(h.get(2, 1)), "-3*X");
        assert_eq!(integer(-3), h.get(2, 1).coeff(1));
    }
}
