//! Verification report: one entry per check, serialized as JSON.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Informational; never fails a run.
    Reported,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub residual: f64,
    pub details: String,
}

fn finite(r: f64) -> f64 {
    if r.is_nan() {
        f64::MAX
    } else {
        r.clamp(-f64::MAX, f64::MAX)
    }
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, residual: f64, details: impl Into<String>) -> Self {
        Check { name: name.into(), status, residual: finite(residual), details: details.into() }
    }

    /// Pass iff `ok`.
    pub fn expect(name: impl Into<String>, ok: bool, residual: f64, details: impl Into<String>) -> Self {
        Self::new(name, if ok { Status::Pass } else { Status::Fail }, residual, details)
    }

    /// Pass iff `residual <= tol`.
    pub fn within(name: impl Into<String>, residual: f64, tol: f64, details: impl Into<String>) -> Self {
        let details = details.into();
        let details = if details.is_empty() { format!("tol {tol:e}") } else { format!("{details}; tol {tol:e}") };
        Self::expect(name, residual <= tol, residual, details)
    }

    /// Pass iff the residual is exactly zero.
    pub fn exact(name: impl Into<String>, residual: f64, details: impl Into<String>) -> Self {
        Self::expect(name, residual == 0.0, residual, details)
    }

    pub fn reported(name: impl Into<String>, residual: f64, details: impl Into<String>) -> Self {
        Self::new(name, Status::Reported, residual, details)
    }

    pub fn failed(name: impl Into<String>, details: impl Into<String>) -> Self {
        Self::new(name, Status::Fail, f64::MAX, details)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub reported: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub summary: Summary,
}

impl Report {
    pub fn new(suite: impl Into<String>, seed: u64, checks: Vec<Check>) -> Self {
        let mut summary = Summary { total: checks.len(), ..Summary::default() };
        for c in &checks {
            match c.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Reported => summary.reported += 1,
            }
        }
        Report { suite: suite.into(), seed, checks, summary }
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let r = Report::new(
            "core",
            42,
            vec![
                Check::within("a", 1.234e-15, 1e-12, ""),
                Check::exact("b", 0.5, "off by half"),
                Check::reported("c", 0.1 + 0.2, "note"),
                Check::failed("d", "boom"),
            ],
        );
        assert_eq!(r.summary, Summary { total: 4, pass: 1, fail: 2, reported: 1 });
        assert!(!r.passed());
        assert_eq!(Report::from_json(&r.to_json()).unwrap(), r);
        assert!(r.to_json().contains("\"status\": \"reported\""));
    }
}
