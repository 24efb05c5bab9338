//! Identity reports: the uniform record every verification produces.
//!
//! A report names the identity, the parameter cell it was checked at, both
//! sides as rendered strings (rationals as `p/q`, floats with 17 significant
//! digits), whether it passed, and the tolerance that applied (`"exact"` for
//! rational comparisons). Suites aggregate reports and serialize to JSON.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Display;

/// Render a float with 17 significant digits, enough to round-trip f64.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IdentityReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub passed: bool,
    pub tolerance: String,
}

impl IdentityReport {
    /// Exact comparison of two rationals.
    pub fn exact(
        identity: &str,
        params: &[(&str, String)],
        lhs: &BigRational,
        rhs: &BigRational,
    ) -> Self {
        Self::exact_rendered(identity, params, lhs.to_string(), rhs.to_string(), lhs == rhs)
    }

    /// Exact comparison with caller-rendered sides (series, tables, ...).
    pub fn exact_rendered(
        identity: &str,
        params: &[(&str, String)],
        lhs: String,
        rhs: String,
        passed: bool,
    ) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            lhs,
            rhs,
            passed,
            tolerance: "exact".to_string(),
        }
    }

    /// Absolute-difference comparison of two floats at the given tolerance.
    pub fn float(identity: &str, params: &[(&str, String)], lhs: f64, rhs: f64, tol: f64) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), v.clone()))
                .collect(),
            lhs: fmt_f64(lhs),
            rhs: fmt_f64(rhs),
            passed: (lhs - rhs).abs() <= tol,
            tolerance: fmt_f64(tol),
        }
    }

    /// One-line human rendering.
    pub fn line(&self) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(", ");
        let status = if self.passed { "ok" } else { "FAIL" };
        if params.is_empty() {
            format!("[{status}] {}: lhs={} rhs={}", self.identity, self.lhs, self.rhs)
        } else {
            format!(
                "[{status}] {} ({params}): lhs={} rhs={}",
                self.identity, self.lhs, self.rhs
            )
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub results: Vec<IdentityReport>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn new(suite: &str, results: Vec<IdentityReport>) -> Self {
        let passed = results.iter().all(|r| r.passed);
        SuiteReport {
            suite: suite.to_string(),
            results,
            passed,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite report serializes")
    }
}

/// Helper for building `params` slices tersely.
pub fn p<T: Display>(v: T) -> String {
    v.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn float_rendering_has_17_significant_digits() {
        let s = fmt_f64(std::f64::consts::PI);
        assert_eq!(s, "3.1415926535897931e0");
        assert_eq!(s.parse::<f64>().unwrap(), std::f64::consts::PI);
    }

    #[test]
    fn exact_report_compares_rationals() {
        let r = IdentityReport::exact("demo", &[("n", p(3))], &rat(1, 2), &rat(2, 4));
        assert!(r.passed);
        assert_eq!(r.lhs, "1/2");
        assert_eq!(r.tolerance, "exact");
    }

    #[test]
    fn suite_json_round_trips() {
        let r = IdentityReport::float("demo-float", &[], 1.0, 1.0 + 1e-12, 1e-10);
        let suite = SuiteReport::new("demo", vec![r]);
        assert!(suite.passed);
        let parsed: SuiteReport = serde_json::from_str(&suite.to_json()).unwrap();
        assert_eq!(parsed, suite);
    }

    #[test]
    fn suite_fails_when_any_report_fails() {
        let good = IdentityReport::float("a", &[], 1.0, 1.0, 1e-10);
        let bad = IdentityReport::float("b", &[], 1.0, 2.0, 1e-10);
        assert!(!SuiteReport::new("demo", vec![good, bad]).passed);
    }
}
