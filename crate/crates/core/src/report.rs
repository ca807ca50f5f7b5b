//! Pass/fail records comparing measured quantities against the expected
//! constants of the exterior-energy estimates.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One named check: measured values, the constant it is compared against, the
/// measured/expected ratio, and the verdict at the stated tolerance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    /// Digest of the generating configuration (dimension, radius, seed).
    pub inputs: String,
    /// Labelled measured quantities, ordered for stable serialization.
    pub measured: BTreeMap<String, f64>,
    pub paper_constant: f64,
    pub ratio: f64,
    pub pass: bool,
    pub tolerance: f64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn from_json(s: &str) -> crate::error::Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::error::Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip_keeps_keys() {
        let mut measured = BTreeMap::new();
        measured.insert("lhs".to_string(), 1.0);
        measured.insert("rhs".to_string(), 2.0);
        let r = VerificationReport {
            check: "radiative-identity".into(),
            inputs: "d=3;R=0;seed=7".into(),
            measured,
            paper_constant: 1.0,
            ratio: 0.5,
            pass: false,
            tolerance: 1e-3,
        };
        let s = r.to_json();
        for key in ["check", "measured", "paper_constant", "ratio", "pass", "tolerance"] {
            assert!(s.contains(key), "missing key {key} in {s}");
        }
        let back = VerificationReport::from_json(&s).unwrap();
        assert_eq!(back.check, r.check);
        assert_eq!(back.measured["rhs"], 2.0);
        assert!(!back.pass);
    }
}
