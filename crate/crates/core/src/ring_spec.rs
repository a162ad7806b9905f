//! Serializable ring and module descriptions, and runtime dispatch over the
//! concrete ring kinds.

use serde::{Deserialize, Serialize};

use crate::diffmod::DifferentialModule;
use crate::error::{Error, Result};
use crate::parse::parse_element;
use crate::rings::{DiffRing, FiniteFieldPolyRing, GaussRing, TextRing};
use crate::QFunctionField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingKind {
    /// `ℚ(x)`.
    RationalFunction,
    /// `ℚ[t]` with the `p`-adic Gauss norm of radius `p^{−r}`.
    GaussPadic,
    /// `𝔽_q[x]`, `q = p^e`.
    FiniteFieldPoly,
}

/// `{"kind": ..., "variable": "x", "p": 3, "radius_exp": 0, "q_exp": 1}`.
///
/// `p` is required for the Gauss and finite-field kinds, `radius_exp`
/// (default 0) only applies to the Gauss kind and `q_exp` (default 1)
/// only to the finite-field kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDescriptor {
    pub kind: RingKind,
    #[serde(default = "default_variable")]
    pub variable: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius_exp: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_exp: Option<u32>,
}

fn default_variable() -> String {
    "x".into()
}

impl RingDescriptor {
    pub fn rational_function(variable: &str) -> Self {
        Self {
            kind: RingKind::RationalFunction,
            variable: variable.into(),
            p: None,
            radius_exp: None,
            q_exp: None,
        }
    }

    pub fn gauss(variable: &str, p: u64, radius_exp: u32) -> Self {
        Self {
            kind: RingKind::GaussPadic,
            variable: variable.into(),
            p: Some(p),
            radius_exp: Some(radius_exp),
            q_exp: None,
        }
    }

    pub fn finite_field(variable: &str, p: u64, q_exp: u32) -> Self {
        Self {
            kind: RingKind::FiniteFieldPoly,
            variable: variable.into(),
            p: Some(p),
            radius_exp: None,
            q_exp: Some(q_exp),
        }
    }

    /// `ℚ` or `𝔽_q`.
    pub fn constant_field(&self) -> String {
        match (self.kind, self.p) {
            (RingKind::FiniteFieldPoly, Some(p)) => match self.q_exp.unwrap_or(1) {
                1 => format!("F_{p}"),
                e => format!("F_{p}^{e}"),
            },
            _ => "Q".into(),
        }
    }

    fn reject(&self, field: &str, present: bool) -> Result<()> {
        if present {
            return Err(Error::InvalidRing(format!(
                "field \"{field}\" does not apply to kind {:?}",
                self.kind
            )));
        }
        Ok(())
    }

    fn prime(&self) -> Result<u64> {
        self.p
            .ok_or_else(|| Error::InvalidRing(format!("kind {:?} needs \"p\"", self.kind)))
    }

    pub fn build(&self) -> Result<AnyRing> {
        match self.kind {
            RingKind::RationalFunction => {
                self.reject("p", self.p.is_some())?;
                self.reject("radius_exp", self.radius_exp.is_some())?;
                self.reject("q_exp", self.q_exp.is_some())?;
                Ok(AnyRing::Rational(QFunctionField::new(self.variable.clone())?))
            }
            RingKind::GaussPadic => {
                self.reject("q_exp", self.q_exp.is_some())?;
                Ok(AnyRing::Gauss(GaussRing::new(
                    self.variable.clone(),
                    self.prime()?,
                    self.radius_exp.unwrap_or(0),
                )?))
            }
            RingKind::FiniteFieldPoly => {
                self.reject("radius_exp", self.radius_exp.is_some())?;
                Ok(AnyRing::FiniteField(FiniteFieldPolyRing::new(
                    self.variable.clone(),
                    self.prime()?,
                    self.q_exp.unwrap_or(1),
                )?))
            }
        }
    }
}

/// A constructed ring of one of the supported kinds.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyRing {
    Rational(QFunctionField),
    Gauss(GaussRing),
    FiniteField(FiniteFieldPolyRing),
}

/// `{"ring": <descriptor>, "n": 2, "G1": [["0", "1"], ["x", "0"]]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub ring: RingDescriptor,
    pub n: usize,
    #[serde(rename = "G1")]
    pub g1: Vec<Vec<String>>,
}

/// A parsed module over one of the supported ring kinds.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyModule {
    Rational(DifferentialModule<QFunctionField>),
    Gauss(DifferentialModule<GaussRing>),
    FiniteField(DifferentialModule<FiniteFieldPolyRing>),
}

fn parse_module<R: TextRing + DiffRing>(ring: R, rows: &[Vec<String>]) -> Result<DifferentialModule<R>> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, text)| {
                    parse_element(text, &ring).map_err(|e| match e {
                        Error::Syntax { position, message } => Error::Syntax {
                            position,
                            message: format!("G1[{i}][{j}]: {message}"),
                        },
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    DifferentialModule::from_rows(ring, parsed)
}

impl ModuleSpec {
    pub fn build(&self) -> Result<AnyModule> {
        if self.n == 0 || self.g1.len() != self.n || self.g1.iter().any(|r| r.len() != self.n) {
            return Err(Error::Dimension(format!(
                "n = {} but G1 has shape {}x{}",
                self.n,
                self.g1.len(),
                self.g1.first().map_or(0, Vec::len)
            )));
        }
        Ok(match self.ring.build()? {
            AnyRing::Rational(r) => AnyModule::Rational(parse_module(r, &self.g1)?),
            AnyRing::Gauss(r) => AnyModule::Gauss(parse_module(r, &self.g1)?),
            AnyRing::FiniteField(r) => AnyModule::FiniteField(parse_module(r, &self.g1)?),
        })
    }
}
