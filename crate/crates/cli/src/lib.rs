//! Command implementations for the `katzvec` binary.
//!
//! Each `cmd_*` function returns a [`RunReport`]; the binary only parses
//! arguments, renders the report, and sets the exit status.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use serde::Serialize;

use katzvec::diffmod::{charp_counterexample, CounterexampleReport};
use katzvec::katz::{self, companion_form, find_cyclic};
use katzvec::parse::parse_element;
use katzvec::ring_spec::{AnyModule, ModuleSpec};
use katzvec::rings::{CommRing, DiffRing, GaussRing, TextRing};
use katzvec::ultranorm::{certify, Criterion, CyclicityCertificate, NormChoice};
use katzvec::{DifferentialModule, Error, NormValue};

/// Largest `n` accepted by `tables` unless overridden.
pub const DEFAULT_MAX_TABLE_RANK: usize = 8;

/// Exit status for a certificate query that did not certify.
pub const EXIT_NOT_CERTIFIED: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Json,
    Latex,
}

/// Everything a command prints.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<ModuleSpec>,
    pub result: Payload,
    pub exit_status: i32,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Tables(TablesPayload),
    Latex(String),
    Cyclic(CyclicPayload),
    Certificate(CertificatePayload),
    Counterexample(CounterexampleReport),
}

impl RunReport {
    /// JSON with a trailing newline; LaTeX tables are printed raw.
    pub fn render(&self) -> String {
        match &self.result {
            Payload::Latex(text) => text.clone(),
            _ => {
                let mut out = serde_json::to_string_pretty(self).expect("reports serialize");
                out.push('\n');
                out
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TablesPayload {
    pub n: usize,
    /// `H[s][i][j]`, canonical polynomials in `X`.
    #[serde(rename = "H")]
    pub h: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CyclicPayload {
    /// The constant `a` used in `X := t − a`.
    pub a: String,
    pub candidate_index: usize,
    pub vector: Vec<String>,
    /// `P(t − a)`.
    pub determinant: String,
    pub is_basis: bool,
    /// `b_k` with `∇ⁿc = Σ b_k ∇ᵏc`, when the base change can be inverted
    /// inside the ring.
    pub companion: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificateNormStrings {
    #[serde(rename = "G1")]
    pub g1: String,
    pub t: String,
    pub d: String,
    pub factorial: String,
    pub lhs: String,
    pub bound: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificatePayload {
    pub criterion: Criterion,
    pub norm: NormChoice,
    pub norms: CertificateNormStrings,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub terms: Vec<String>,
    pub verdict: katzvec::ultranorm::Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
    pub witness: Option<Vec<String>>,
}

impl CertificatePayload {
    fn from_certificate(cert: &CyclicityCertificate<katzvec::QPoly>, ring: &GaussRing) -> Self {
        let p = cert.prime;
        let show = |v: NormValue| v.display(p);
        CertificatePayload {
            criterion: cert.criterion,
            norm: cert.norm,
            norms: CertificateNormStrings {
                g1: show(cert.norms.g1),
                t: show(cert.norms.t),
                d: show(cert.norms.d),
                factorial: show(cert.norms.factorial),
                lhs: show(cert.norms.lhs),
                bound: show(cert.norms.bound),
            },
            terms: cert.terms.iter().map(|&v| show(v)).collect(),
            verdict: cert.verdict,
            diagnostic: cert.diagnostic(),
            witness: cert
                .witness
                .as_ref()
                .map(|w| w.coords().iter().map(|x| ring.format(x)).collect()),
        }
    }
}

pub fn load_module(path: &Path) -> anyhow::Result<ModuleSpec> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

pub fn cmd_tables(n: usize, format: TableFormat, max_n: usize) -> anyhow::Result<RunReport> {
    if n < 1 || n > max_n {
        bail!("n must lie in 1..={max_n}, got {n}");
    }
    let result = match format {
        TableFormat::Latex => Payload::Latex(katz::latex_tables(n)?),
        TableFormat::Json => {
            let h = katz::h_matrices(n)?
                .iter()
                .map(|m| {
                    m.to_rows()
                        .iter()
                        .map(|r| r.iter().map(katz::format_h_entry).collect())
                        .collect()
                })
                .collect();
            Payload::Tables(TablesPayload { n, h })
        }
    };
    Ok(RunReport {
        command: "tables".into(),
        input: None,
        result,
        exit_status: 0,
    })
}

fn run_cyclic<R: DiffRing + TextRing>(
    m: &DifferentialModule<R>,
    constants: Option<&[String]>,
) -> anyhow::Result<CyclicPayload> {
    let ring = m.ring();
    let parsed = constants
        .map(|cs| {
            cs.iter()
                .map(|c| parse_element(c.trim(), ring).with_context(|| format!("constant {c:?}")))
                .collect::<anyhow::Result<Vec<_>>>()
        })
        .transpose()?;
    let found = find_cyclic(m, parsed.as_deref())?;
    let check = m.is_cyclic_vector(&found.vector)?;
    let (companion, note) = match companion_form(m, &found.vector) {
        Ok(b) => (Some(b.iter().map(|x| ring.format(x)).collect()), None),
        Err(Error::NotABasis | Error::NotInvertible(_)) => (
            None,
            Some("P(t - a) is not invertible inside the ring; companion form omitted".to_string()),
        ),
        Err(e) => return Err(e.into()),
    };
    Ok(CyclicPayload {
        a: ring.format(&found.constant),
        candidate_index: found.index,
        vector: m.format_vector(&found.vector),
        determinant: ring.format(&found.determinant),
        is_basis: check.invertible,
        companion,
        note,
    })
}

/// Searches the constants `a` for a cyclic vector `c(e, t − a)`, plus its companion form.
pub fn cmd_cyclic(spec: &ModuleSpec, constants: Option<&[String]>) -> anyhow::Result<RunReport> {
    let payload = match spec.build()? {
        AnyModule::Rational(m) => run_cyclic(&m, constants)?,
        AnyModule::Gauss(m) => run_cyclic(&m, constants)?,
        AnyModule::FiniteField(m) => run_cyclic(&m, constants)?,
    };
    Ok(RunReport {
        command: "cyclic".into(),
        input: Some(spec.clone()),
        result: Payload::Cyclic(payload),
        exit_status: 0,
    })
}

/// Like [`cmd_cyclic`] but fails when the companion form cannot be built.
pub fn cmd_companion(spec: &ModuleSpec) -> anyhow::Result<RunReport> {
    let mut report = cmd_cyclic(spec, None)?;
    report.command = "companion".into();
    if let Payload::Cyclic(p) = &report.result {
        if p.companion.is_none() {
            bail!("the cyclic basis is not invertible inside the ring");
        }
    }
    Ok(report)
}

pub fn cmd_certify(spec: &ModuleSpec, criterion: Criterion, norm: Option<NormChoice>) -> anyhow::Result<RunReport> {
    let m = match spec.build()? {
        AnyModule::Gauss(m) => m,
        _ => bail!(Error::Unsupported(
            "certification needs a normed ring (kind gauss_padic)".into()
        )),
    };
    let cert = certify(&m, criterion, norm)?;
    if !cert.recheck() {
        bail!(Error::Internal("certificate does not re-check".into()));
    }
    let exit_status = if cert.is_certified() { 0 } else { EXIT_NOT_CERTIFIED };
    Ok(RunReport {
        command: "certify".into(),
        input: Some(spec.clone()),
        result: Payload::Certificate(CertificatePayload::from_certificate(&cert, m.ring())),
        exit_status,
    })
}

pub fn cmd_counterexample(p: u64, e: u32, n: usize) -> anyhow::Result<RunReport> {
    let report = charp_counterexample(p, e, n)?;
    Ok(RunReport {
        command: "counterexample".into(),
        input: None,
        result: Payload::Counterexample(report),
        exit_status: 0,
    })
}

pub fn parse_criterion(text: &str) -> anyhow::Result<Criterion> {
    match Criterion::parse(text) {
        Some(Criterion::FieldDeterminant) | None => {
            bail!("unknown criterion {text:?}; expected prop2.3, prop2.5, prop2.8 or lemma2.1")
        }
        Some(c) => Ok(c),
    }
}

pub fn parse_norm(text: &str) -> anyhow::Result<NormChoice> {
    Ok(match text {
        "sup" => NormChoice::Sup,
        "rho-t" => NormChoice::RhoT,
        "rho-d" => NormChoice::RhoD,
        _ => bail!("unknown norm {text:?}; expected sup, rho-t or rho-d"),
    })
}
