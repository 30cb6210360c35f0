//! Fixed float formatting shared by the JSON and CSV writers.

use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// 17 significant digits in scientific notation, which round-trips every
/// `f64` and never depends on the platform formatter.
pub fn fmt_f64(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_owned()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_owned()
    } else {
        format!("{x:.16e}")
    }
}

/// A float that serializes through [`fmt_f64`]; non-finite values become `null`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(fmt_f64(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

impl From<f64> for Num {
    fn from(x: f64) -> Self {
        Num(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for x in [0.1, -std::f64::consts::PI, 1e-300, 6.02214076e23, 0.0, -0.0] {
            let s = fmt_f64(x);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), x.to_bits(), "{s}");
        }
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e0");
    }

    #[test]
    fn json_output() {
        let v = vec![Num(0.5), Num(f64::NAN)];
        assert_eq!(serde_json::to_string(&v).unwrap(), "[5.0000000000000000e-1,null]");
    }
}
