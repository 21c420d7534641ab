//! Structured pass/fail records for verification runs.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::exact::Lfd;
use crate::mould::Mould;

/// Conventions in force for a run; carried by every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Conventions {
    pub b1: String,
    pub mu: String,
    pub odot: String,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            b1: "-1/2".into(),
            mu: "standard: mu(A,B)(w) = sum_{w=ab} A(a)B(b)".into(),
            odot: "f.g = fg - D_g(f)".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Informational only; always counts as passed.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub note: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub conventions: Conventions,
    pub bounds: BTreeMap<String, String>,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            conventions: Conventions::default(),
            bounds: BTreeMap::new(),
            checks: Vec::new(),
        }
    }

    pub fn with_conventions(mut self, c: Conventions) -> Self {
        self.conventions = c;
        self
    }

    pub fn bound(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.bounds.insert(key.into(), value.to_string());
        self
    }

    pub fn check(&mut self, label: impl Into<String>, passed: bool, detail: Option<String>) -> bool {
        self.checks.push(Check {
            label: label.into(),
            passed,
            detail,
            note: false,
        });
        passed
    }

    pub fn pass(&mut self, label: impl Into<String>) {
        self.check(label, true, None);
    }

    pub fn fail(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.check(label, false, Some(detail.into()));
    }

    /// Records an informational line that never fails the report.
    pub fn note(&mut self, label: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            label: label.into(),
            passed: true,
            detail: Some(detail.into()),
            note: true,
        });
    }

    /// Exact mould equality up to the common truncation depth.
    pub fn check_moulds(&mut self, label: impl Into<String>, lhs: &Mould, rhs: &Mould) -> bool {
        match lhs.first_difference(rhs) {
            Ok(None) => {
                self.pass(label);
                true
            }
            Ok(Some((r, diff))) => {
                self.fail(label, format!("depth {r}: lhs - rhs = {diff}"));
                false
            }
            Err(e) => {
                self.fail(label, e.to_string());
                false
            }
        }
    }

    pub fn check_zero(&mut self, label: impl Into<String>, value: &Lfd) -> bool {
        if value.is_zero() {
            self.pass(label);
            true
        } else {
            self.fail(label, format!("value = {value}"));
            false
        }
    }

    /// Appends the checks of `other` with its name as a label prefix.
    pub fn absorb(&mut self, other: VerificationReport) {
        for c in other.checks {
            self.checks.push(Check {
                label: format!("{}: {}", other.name, c.label),
                ..c
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "report {}", self.name);
        let _ = writeln!(s, "convention b1 {}", self.conventions.b1);
        let _ = writeln!(s, "convention mu {}", self.conventions.mu);
        let _ = writeln!(s, "convention odot {}", self.conventions.odot);
        for (k, v) in &self.bounds {
            let _ = writeln!(s, "bound {k} {v}");
        }
        for c in &self.checks {
            let status = match (c.note, c.passed) {
                (true, _) => "NOTE",
                (false, true) => "PASS",
                (false, false) => "FAIL",
            };
            match &c.detail {
                Some(d) => {
                    let _ = writeln!(s, "{status} {} :: {d}", c.label);
                }
                None => {
                    let _ = writeln!(s, "{status} {}", c.label);
                }
            }
        }
        let total = self.checks.iter().filter(|c| !c.note).count();
        let failed = self.failures().count();
        let _ = writeln!(
            s,
            "result {} ({} checks, {} failed)",
            if failed == 0 { "pass" } else { "fail" },
            total,
            failed
        );
        s
    }

    pub fn to_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["passed"] = serde_json::Value::Bool(self.passed());
        serde_json::to_string_pretty(&v).expect("report serializes")
    }
}
