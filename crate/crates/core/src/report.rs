//! Check outcomes and the machine-readable report emitted by the command line tool.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// A failed axiom instance: the axiom name and the basis indices where it fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub indices: Vec<usize>,
}

/// Result of validating structure constants. Passes iff no violations were found.
/// Only the first failing instance of each axiom is recorded.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn push(&mut self, axiom: &str, indices: Vec<usize>) {
        if !self.violations.iter().any(|v| v.axiom == axiom) {
            self.violations.push(Violation {
                axiom: axiom.to_string(),
                indices,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn extend(&mut self, other: ValidationReport, prefix: &str) {
        for v in other.violations {
            self.push(&format!("{prefix}{}", v.axiom), v.indices);
        }
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            "all axioms hold".to_string()
        } else {
            self.violations
                .iter()
                .map(|v| format!("{} at {:?}", v.axiom, v.indices))
                .collect::<Vec<_>>()
                .join("; ")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
    Degenerate,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Inconclusive => "INCONCLUSIVE",
            Status::Degenerate => "DEGENERATE",
        }
    }
}

/// Where an identity failed: basis indices plus both sides in coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub lhs: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub rhs: Vec<String>,
}

impl Witness {
    pub fn at(indices: Vec<usize>) -> Witness {
        Witness {
            indices,
            lhs: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Witness for `lhs != rhs`: the first differing entry and both columns there.
    pub fn from_matrices(lhs: &Matrix, rhs: &Matrix) -> Option<Witness> {
        let (i, j) = lhs.first_difference(rhs)?;
        Some(Witness {
            indices: vec![i, j],
            lhs: lhs.col(j).iter().map(Scalar::to_string).collect(),
            rhs: rhs.col(j).iter().map(Scalar::to_string).collect(),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, detail: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            status,
            detail: detail.into(),
            witness: None,
        }
    }

    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check::new(name, Status::Pass, detail)
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Check {
        Check::new(name, Status::Fail, detail)
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Check {
        Check::new(name, Status::from_bool(ok), detail)
    }

    /// Compares two matrices exactly, attaching a witness on mismatch.
    pub fn equal(name: impl Into<String>, lhs: &Matrix, rhs: &Matrix) -> Check {
        if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
            return Check::fail(
                name,
                format!(
                    "shape mismatch: {}x{} vs {}x{}",
                    lhs.rows(),
                    lhs.cols(),
                    rhs.rows(),
                    rhs.cols()
                ),
            );
        }
        match Witness::from_matrices(lhs, rhs) {
            None => Check::pass(name, "holds exactly"),
            Some(w) => {
                let detail = format!("differs at entry ({}, {})", w.indices[0], w.indices[1]);
                Check::fail(name, detail).with_witness(w)
            }
        }
    }

    pub fn with_witness(mut self, w: Witness) -> Check {
        self.witness = Some(w);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A named value reported alongside the checks (dimensions, verdicts, coordinates).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub fixtures: Vec<String>,
    pub seed: u64,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub values: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: impl Into<String>, fixtures: Vec<String>, seed: u64) -> Report {
        Report {
            command: command.into(),
            fixtures,
            seed,
            checks: Vec::new(),
            values: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn value(&mut self, name: impl Into<String>, value: impl ToString) {
        self.values.push(Entry {
            name: name.into(),
            value: value.to_string(),
        });
    }

    pub fn has_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn is_inconclusive(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Inconclusive)
    }

    /// 0 when nothing failed, 1 on a failed check, 3 when a search was inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.has_failure() {
            1
        } else if self.is_inconclusive() {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} [{}] seed={}", self.command, self.fixtures.join(", "), self.seed);
        for v in &self.values {
            let _ = writeln!(out, "  {} = {}", v.name, v.value);
        }
        for c in &self.checks {
            let _ = writeln!(out, "{:<12} {}: {}", c.status.label(), c.name, c.detail);
            if let Some(w) = &c.witness {
                let _ = writeln!(out, "{:<12}   witness at {:?}", "", w.indices);
                if !w.lhs.is_empty() {
                    let _ = writeln!(out, "{:<12}   lhs [{}]", "", w.lhs.join(", "));
                    let _ = writeln!(out, "{:<12}   rhs [{}]", "", w.rhs.join(", "));
                }
            }
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(out, "elapsed {t} ms");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn exit_codes() {
        let mut r = Report::new("validate", vec![], 0);
        r.push(Check::pass("a", "ok"));
        assert_eq!(r.exit_code(), 0);
        r.push(Check::new("b", Status::Inconclusive, "not found"));
        assert_eq!(r.exit_code(), 3);
        r.push(Check::fail("c", "bad"));
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn json_round_trip() {
        let f = Field::Rationals;
        let mut r = Report::new("galois", vec!["m2".into()], 7);
        r.value("dim", 8);
        r.push(Check::equal("id", &Matrix::identity(f, 2), &Matrix::zeros(f, 2, 2)));
        let back: Report = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.checks[0].witness.as_ref().unwrap().indices, vec![0, 0]);
    }
}
