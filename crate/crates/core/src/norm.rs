//! Exact ultrametric norm values `p^k`.

use std::fmt;
use std::ops::{Div, Mul};

use serde::{Serialize, Serializer};

/// A norm value `p^k` with `k ∈ ℤ ∪ {−∞}`; the prime is implied by the ring.
///
/// `Zero` is `p^−∞` and sorts below every power, so the derived order is
/// the order of real values.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum NormValue {
    Zero,
    Pow(i64),
}

impl NormValue {
    pub const ONE: NormValue = NormValue::Pow(0);

    pub fn from_exponent(k: i64) -> Self {
        NormValue::Pow(k)
    }

    /// The exponent `k`, `None` for the zero value.
    pub fn exponent(self) -> Option<i64> {
        match self {
            NormValue::Zero => None,
            NormValue::Pow(k) => Some(k),
        }
    }

    pub fn is_zero(self) -> bool {
        self == NormValue::Zero
    }

    /// Integer powers; `0^0 = 1`, negative powers of zero panic.
    pub fn powi(self, e: i64) -> Self {
        match self {
            NormValue::Pow(k) => NormValue::Pow(k * e),
            NormValue::Zero if e == 0 => NormValue::ONE,
            NormValue::Zero if e > 0 => NormValue::Zero,
            NormValue::Zero => panic!("negative power of the zero norm"),
        }
    }

    /// Reciprocal of a nonzero value.
    pub fn recip(self) -> Self {
        self.powi(-1)
    }

    /// Formats as `p^k`, or `0` for the zero value.
    pub fn display(self, p: u64) -> String {
        match self {
            NormValue::Zero => "0".to_string(),
            NormValue::Pow(k) => format!("{p}^{k}"),
        }
    }

    /// Parses the `p^k` / `0` form produced by [`NormValue::display`].
    pub fn parse(text: &str, p: u64) -> Option<Self> {
        if text.trim() == "0" {
            return Some(NormValue::Zero);
        }
        let (base, exp) = text.trim().split_once('^')?;
        if base.parse::<u64>().ok()? != p {
            return None;
        }
        exp.parse().ok().map(NormValue::Pow)
    }
}

// Values are exponents of `p`, so products add them.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for NormValue {
    type Output = NormValue;

    fn mul(self, rhs: Self) -> Self {
        match (self, rhs) {
            (NormValue::Pow(a), NormValue::Pow(b)) => NormValue::Pow(a + b),
            _ => NormValue::Zero,
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for NormValue {
    type Output = NormValue;

    /// Panics when dividing by the zero value.
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl fmt::Display for NormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormValue::Zero => f.write_str("0"),
            NormValue::Pow(k) => write!(f, "p^{k}"),
        }
    }
}

/// Serializes as the bare exponent (or `null` for zero); certificates use
/// [`NormValue::display`] for the `p^k` form.
impl Serialize for NormValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.exponent().serialize(s)
    }
}
