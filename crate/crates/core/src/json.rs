//! JSON helpers for reports: numbers are written with 17 significant digits
//! in scientific notation so that reports diff cleanly and round-trip exactly.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

pub const UNITS_LENGTH: &str = "model-units";
pub const UNITS_ANGLE: &str = "radians";

/// An `f64` serialized as `d.dddddddddddddddde±x`; non-finite values become `null`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Real(pub f64);

impl From<f64> for Real {
    fn from(v: f64) -> Self {
        Real(v)
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw =
            RawValue::from_string(format!("{:.16e}", self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

pub fn reals<const N: usize>(v: [f64; N]) -> [Real; N] {
    v.map(Real)
}

/// Pretty-printed JSON followed by a newline.
pub fn to_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
