//! Matrix norms over ultrametric rings and smallness criteria for cyclicity.
//!
//! Every check compares exact [`NormValue`]s with a strict `<`. A module
//! passes the product test (`lemma2.1`) when `‖H₀(−t)·H_s(t)·G_s‖ < 1` for
//! `s = 1, …, 2n−2`; then `H₀(−t)·H(t) = Id + (small)` is invertible and
//! the candidate `c(e, t)` is cyclic. The `prop*` checks bound `|G₁|` alone
//! and imply the product test.

use serde::Serialize;

use crate::diffmod::{DifferentialModule, ModuleElement};
use crate::error::{Error, Result};
use crate::katz::{base_change, h_matrix_at, katz_vector};
use crate::matrix::{self, Matrix};
use crate::norm::NormValue;
use crate::rings::BanachRing;

/// `sup |a_ij|` or `sup |a_ij|·ρ^{j−i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MatrixNormKind {
    Sup,
    Rho(NormValue),
}

impl MatrixNormKind {
    /// `ρ`; `1` for the sup-norm.
    pub fn rho(self) -> NormValue {
        match self {
            MatrixNormKind::Sup => NormValue::ONE,
            MatrixNormKind::Rho(r) => r,
        }
    }
}

/// Named norm choices resolved against a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormChoice {
    Sup,
    /// `ρ = |t|⁻¹`.
    RhoT,
    /// `ρ = |d|`.
    RhoD,
}

impl NormChoice {
    pub fn resolve<R: BanachRing>(self, ring: &R) -> Result<MatrixNormKind> {
        Ok(match self {
            NormChoice::Sup => MatrixNormKind::Sup,
            NormChoice::RhoT => MatrixNormKind::Rho(t_norm(ring)?.recip()),
            NormChoice::RhoD => MatrixNormKind::Rho(ring.derivation_norm()),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            NormChoice::Sup => "sup",
            NormChoice::RhoT => "rho-t",
            NormChoice::RhoD => "rho-d",
        }
    }
}

fn distinguished_t<R: BanachRing>(ring: &R) -> Result<R::Elem> {
    ring.distinguished_t()
        .ok_or_else(|| Error::Unsupported("ring has no element t with d(t) = 1".into()))
}

fn t_norm<R: BanachRing>(ring: &R) -> Result<NormValue> {
    let t = distinguished_t(ring)?;
    let norm = ring.norm(&t);
    if norm.is_zero() {
        return Err(Error::Internal("|t| = 0".into()));
    }
    Ok(norm)
}

/// `max_{i,j} |a_ij|·ρ^{j−i}`; `0` for the zero matrix.
pub fn matrix_norm<R: BanachRing>(ring: &R, a: &Matrix<R::Elem>, kind: MatrixNormKind) -> NormValue {
    let rho = kind.rho();
    a.entries()
        .map(|(i, j, x)| ring.norm(x) * rho.powi(j as i64 - i as i64))
        .max()
        .unwrap_or(NormValue::Zero)
}

/// Which test produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Criterion {
    #[serde(rename = "prop2.3")]
    Prop23,
    #[serde(rename = "prop2.5")]
    Prop25,
    #[serde(rename = "prop2.8")]
    Prop28,
    #[serde(rename = "lemma2.1")]
    Lemma21,
    #[serde(rename = "field-determinant")]
    FieldDeterminant,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::Prop23 => "prop2.3",
            Criterion::Prop25 => "prop2.5",
            Criterion::Prop28 => "prop2.8",
            Criterion::Lemma21 => "lemma2.1",
            Criterion::FieldDeterminant => "field-determinant",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        [
            Criterion::Prop23,
            Criterion::Prop25,
            Criterion::Prop28,
            Criterion::Lemma21,
            Criterion::FieldDeterminant,
        ]
        .into_iter()
        .find(|c| c.name() == text)
    }

    /// The matrix norm a `prop*` check is stated in; `None` for the tests
    /// that accept any norm.
    pub fn fixed_norm(self) -> Option<NormChoice> {
        match self {
            Criterion::Prop23 => Some(NormChoice::Sup),
            Criterion::Prop25 => Some(NormChoice::RhoT),
            Criterion::Prop28 => Some(NormChoice::RhoD),
            Criterion::Lemma21 | Criterion::FieldDeterminant => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Certified,
    NotCertified,
}

/// Exact inputs of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateNorms {
    /// `|G₁|` in the criterion's norm.
    pub g1: NormValue,
    pub t: NormValue,
    pub d: NormValue,
    /// `|(n−1)!|`.
    pub factorial: NormValue,
    /// Left-hand side of the strict inequality: `|G₁|` for the
    /// `prop*` checks, `max_s ‖H₀(−t)H_s(t)G_s‖` for `lemma2.1`.
    pub lhs: NormValue,
    /// Right-hand side.
    pub bound: NormValue,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CyclicityCertificate<E> {
    pub criterion: Criterion,
    pub prime: u64,
    pub rank: usize,
    pub norm: NormChoice,
    pub norms: CertificateNorms,
    /// `‖H₀(−t)·H_s(t)·G_s‖` for `s = 1, …, 2n−2` (`lemma2.1` only).
    pub terms: Vec<NormValue>,
    pub verdict: Verdict,
    /// `lhs = bound`: the strict inequality fails at the edge.
    pub boundary: bool,
    /// `c(e, t)` when certified.
    pub witness: Option<ModuleElement<E>>,
}

impl<E> CyclicityCertificate<E> {
    pub fn is_certified(&self) -> bool {
        self.verdict == Verdict::Certified
    }

    /// Re-evaluates the recorded inequality from the stored values.
    pub fn recheck(&self) -> bool {
        let holds = self.norms.lhs < self.norms.bound && self.terms.iter().all(|&x| x < NormValue::ONE);
        holds == self.is_certified() && holds == self.witness.is_some()
    }

    pub fn diagnostic(&self) -> Option<String> {
        if self.boundary {
            Some("equality at the bound; the criterion is strict".into())
        } else {
            None
        }
    }
}

/// `|t|, |d|, |(n−1)!|` and the ring checks common to every criterion.
struct RingData {
    t_norm: NormValue,
    d_norm: NormValue,
    factorial: NormValue,
}

fn ring_data<R: BanachRing>(m: &DifferentialModule<R>) -> Result<RingData> {
    m.require_katz_hypotheses()?;
    let ring = m.ring();
    let t_norm = t_norm(ring)?;
    let d_norm = ring.derivation_norm();
    let factorial = ring.factorial_norm(m.rank() as u64 - 1);
    Ok(RingData {
        t_norm,
        d_norm,
        factorial,
    })
}

fn finish<R: BanachRing>(
    m: &DifferentialModule<R>,
    criterion: Criterion,
    norm: NormChoice,
    norms: CertificateNorms,
    terms: Vec<NormValue>,
) -> Result<CyclicityCertificate<R::Elem>> {
    let holds = norms.lhs < norms.bound && terms.iter().all(|&x| x < NormValue::ONE);
    let boundary = norms.lhs == norms.bound;
    let witness = if holds {
        let ring = m.ring();
        Some(katz_vector(m)?.specialize(ring, &ring.zero())?)
    } else {
        None
    };
    Ok(CyclicityCertificate {
        criterion,
        prime: m.ring().prime(),
        rank: m.rank(),
        norm,
        norms,
        terms,
        verdict: if holds {
            Verdict::Certified
        } else {
            Verdict::NotCertified
        },
        boundary,
        witness,
    })
}

/// `min_{i<n} (|i!|/|tⁱ|)² · min(1, |d|^{−(2n−3)})`, with `|tⁱ|` taken
/// from the element `tⁱ` itself.
pub fn prop_2_3_bound<R: BanachRing>(ring: &R, n: usize) -> Result<NormValue> {
    let t = distinguished_t(ring)?;
    let inner = (0..n)
        .map(|i| ring.factorial_norm(i as u64) / ring.norm(&ring.pow(&t, i as u32)))
        .min()
        .unwrap_or(NormValue::ONE);
    let d_part = NormValue::ONE.min(ring.derivation_norm().powi(-(2 * n as i64 - 3)));
    Ok(inner.powi(2) * d_part)
}

/// `|(n−1)!|²·|d| / (|d||t|)^{2n−2}`.
pub fn prop_2_5_bound(factorial: NormValue, t_norm: NormValue, d_norm: NormValue, n: usize) -> NormValue {
    factorial.powi(2) * d_norm / (d_norm * t_norm).powi(2 * n as i64 - 2)
}

/// Sup-norm test `|G₁| < prop_2_3_bound`.
pub fn check_prop_2_3<R: BanachRing>(m: &DifferentialModule<R>) -> Result<CyclicityCertificate<R::Elem>> {
    let data = ring_data(m)?;
    let g1 = matrix_norm(m.ring(), m.connection(), MatrixNormKind::Sup);
    let bound = prop_2_3_bound(m.ring(), m.rank())?;
    let norms = CertificateNorms {
        g1,
        t: data.t_norm,
        d: data.d_norm,
        factorial: data.factorial,
        lhs: g1,
        bound,
    };
    finish(m, Criterion::Prop23, NormChoice::Sup, norms, Vec::new())
}

fn check_rho<R: BanachRing>(
    m: &DifferentialModule<R>,
    criterion: Criterion,
    choice: NormChoice,
) -> Result<CyclicityCertificate<R::Elem>> {
    let data = ring_data(m)?;
    let kind = choice.resolve(m.ring())?;
    let g1 = matrix_norm(m.ring(), m.connection(), kind);
    let bound = prop_2_5_bound(data.factorial, data.t_norm, data.d_norm, m.rank());
    let norms = CertificateNorms {
        g1,
        t: data.t_norm,
        d: data.d_norm,
        factorial: data.factorial,
        lhs: g1,
        bound,
    };
    finish(m, criterion, choice, norms, Vec::new())
}

/// `|G₁|^{(|t|⁻¹)} < |(n−1)!|²·|d| / (|d||t|)^{2n−2}`.
pub fn check_prop_2_5<R: BanachRing>(m: &DifferentialModule<R>) -> Result<CyclicityCertificate<R::Elem>> {
    check_rho(m, Criterion::Prop25, NormChoice::RhoT)
}

/// `|G₁|^{(|d|)} < |(n−1)!|²·|d| / (|d||t|)^{2n−2}`.
pub fn check_prop_2_8<R: BanachRing>(m: &DifferentialModule<R>) -> Result<CyclicityCertificate<R::Elem>> {
    check_rho(m, Criterion::Prop28, NormChoice::RhoD)
}

/// `H₀(−t)·H_s(t)·G_s` for `s = 1, …, 2n−2`.
pub fn lemma_2_1_products<R: BanachRing>(m: &DifferentialModule<R>) -> Result<Vec<Matrix<R::Elem>>> {
    let ring = m.ring();
    let t = distinguished_t(ring)?;
    let bc = base_change(m)?;
    let h = bc.h_matrices();
    let h0_neg = h_matrix_at(ring, &h[0], &ring.neg(&t))?;
    (1..h.len())
        .map(|s| {
            let hs = h_matrix_at(ring, &h[s], &t)?;
            Ok(matrix::mul(ring, &matrix::mul(ring, &h0_neg, &hs), &bc.g_matrices()[s]))
        })
        .collect()
}

/// `‖H₀(−t)·H(t) − Id‖`; below `1` means `H(t)` is invertible.
pub fn inverse_defect<R: BanachRing>(m: &DifferentialModule<R>, kind: MatrixNormKind) -> Result<NormValue> {
    let ring = m.ring();
    let t = distinguished_t(ring)?;
    let bc = base_change(m)?;
    let h0_neg = h_matrix_at(ring, &bc.h_matrices()[0], &ring.neg(&t))?;
    let ht = bc.assembled_at(&ring.zero())?;
    let defect = matrix::sub(
        ring,
        &matrix::mul(ring, &h0_neg, &ht),
        &matrix::identity(ring, m.rank()),
    );
    Ok(matrix_norm(ring, &defect, kind))
}

/// Checks `‖H₀(−t)·H_s(t)·G_s‖ < 1` for every `s ≥ 1` in the chosen norm.
pub fn certify_lemma_2_1<R: BanachRing>(
    m: &DifferentialModule<R>,
    choice: NormChoice,
) -> Result<CyclicityCertificate<R::Elem>> {
    let data = ring_data(m)?;
    let kind = choice.resolve(m.ring())?;
    let terms: Vec<_> = lemma_2_1_products(m)?
        .iter()
        .map(|p| matrix_norm(m.ring(), p, kind))
        .collect();
    let lhs = terms.iter().copied().max().unwrap_or(NormValue::Zero);
    let norms = CertificateNorms {
        g1: matrix_norm(m.ring(), m.connection(), kind),
        t: data.t_norm,
        d: data.d_norm,
        factorial: data.factorial,
        lhs,
        bound: NormValue::ONE,
    };
    finish(m, Criterion::Lemma21, choice, norms, terms)
}

/// Dispatches on the criterion. The `prop*` checks only accept their own
/// norm; `lemma2.1` defaults to the sup-norm.
pub fn certify<R: BanachRing>(
    m: &DifferentialModule<R>,
    criterion: Criterion,
    norm: Option<NormChoice>,
) -> Result<CyclicityCertificate<R::Elem>> {
    if let (Some(fixed), Some(asked)) = (criterion.fixed_norm(), norm) {
        if fixed != asked {
            return Err(Error::Precondition(format!(
                "{} is stated for the {} norm, not {}",
                criterion.name(),
                fixed.name(),
                asked.name()
            )));
        }
    }
    match criterion {
        Criterion::Prop23 => check_prop_2_3(m),
        Criterion::Prop25 => check_prop_2_5(m),
        Criterion::Prop28 => check_prop_2_8(m),
        Criterion::Lemma21 => certify_lemma_2_1(m, norm.unwrap_or(NormChoice::Sup)),
        Criterion::FieldDeterminant => Err(Error::Unsupported(
            "field-determinant certificates come from the cyclic search, not from norms".into(),
        )),
    }
}

/// `‖G₁‖·max(‖G₁‖, |d|)^{s−1}`.
pub fn lemma_2_2_bound(g1_norm: NormValue, d_norm: NormValue, s: usize) -> Result<NormValue> {
    if s < 1 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    Ok(g1_norm * g1_norm.max(d_norm).powi(s as i64 - 1))
}

/// Closed-form upper bounds on `|H₀(±t)|` and `|H_s(t)|`; index `s` of
/// each vector is the bound for `H_s`, `s = 0, …, 2n−2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HNormBounds {
    /// `sup_i |t|ⁱ/|i!|`, valid for every `H_s` in the sup-norm.
    pub sup: Vec<NormValue>,
    /// `ρ = |t|⁻¹`: `1/|(n−1)!|` at `s = 0`, `|t|ˢ/|(n−1)!|` after.
    pub rho_t: Vec<NormValue>,
    /// `ρ = |d|`: `(|d||t|)^{n−1}/|(n−1)!|` at `s = 0`,
    /// `|t|ˢ·(|d||t|)^{n−1−s}/|(n−1)!|` after.
    pub rho_d: Vec<NormValue>,
}

/// `factorial_norms[k] = |k!|` for `k = 0, …, n−1`.
pub fn h_norm_bounds(
    n: usize,
    t_norm: NormValue,
    d_norm: NormValue,
    factorial_norms: &[NormValue],
) -> Result<HNormBounds> {
    if n == 0 || factorial_norms.len() < n {
        return Err(Error::Dimension(format!(
            "need |k!| for k < {n}, got {} values",
            factorial_norms.len()
        )));
    }
    let top = factorial_norms[n - 1];
    let sup_h0 = (0..n)
        .map(|i| t_norm.powi(i as i64) / factorial_norms[i])
        .max()
        .unwrap_or(NormValue::ONE);
    let dt = d_norm * t_norm;
    let count = 2 * n - 1;
    let sup = vec![sup_h0; count];
    let rho_t = (0..count)
        .map(|s| {
            if s == 0 {
                top.recip()
            } else {
                t_norm.powi(s as i64) / top
            }
        })
        .collect();
    let rho_d = (0..count)
        .map(|s| {
            if s == 0 {
                dt.powi(n as i64 - 1) / top
            } else {
                t_norm.powi(s as i64) * dt.powi(n as i64 - 1 - s as i64) / top
            }
        })
        .collect();
    Ok(HNormBounds { sup, rho_t, rho_d })
}

/// [`h_norm_bounds`] with the data read off a ring.
pub fn ring_h_norm_bounds<R: BanachRing>(ring: &R, n: usize) -> Result<HNormBounds> {
    let facts: Vec<_> = (0..n).map(|k| ring.factorial_norm(k as u64)).collect();
    h_norm_bounds(n, t_norm(ring)?, ring.derivation_norm(), &facts)
}
