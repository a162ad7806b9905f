//! Exact cyclic vectors for differential modules.
//!
//! A differential module is given by the matrix `G₁` of its connection in a
//! basis `e` over a ring with a derivation `d` and an element `t` with
//! `d(t) = 1`. This crate computes the explicit candidate vector
//! `c(e, X)`, the universal decomposition `H(X) = Σ H_s(X)·G_s` of the base
//! change it induces, its determinant `P(X)`, and searches the constants
//! `a` for which `c(e, t − a)` is cyclic. Over rings with an ultrametric
//! norm it certifies cyclicity when the connection is small enough.
//!
//! All arithmetic is exact: rationals are arbitrary precision and norm
//! values are integer exponents of `p`.

pub mod diffmod;
pub mod error;
pub mod gf;
pub mod katz;
pub mod matrix;
mod modgcd;
pub mod norm;
pub mod parse;
pub mod poly;
pub mod ratfunc;
pub mod ring_spec;
pub mod rings;
pub mod scalar;
pub mod ultranorm;

pub use diffmod::{DifferentialModule, ModuleElement};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use norm::NormValue;
pub use poly::Poly;
pub use ratfunc::RationalFunction;
pub use rings::{BanachRing, CommRing, DiffRing, TextRing};
pub use scalar::{Field, Rational};

/// `ℚ[x]`, the coefficient polynomials of the Gauss rings and `H_s(X)` tables.
pub type QPoly = Poly<Rational>;
/// Elements of `ℚ(x)`.
pub type QRationalFunction = RationalFunction<Rational>;
/// The rational function field `ℚ(x)`.
pub type QFunctionField = rings::FunctionField<Rational>;
/// `ℚ[X]` as a differential ring.
pub type QPolyRing = rings::PolyRing<Rational>;
