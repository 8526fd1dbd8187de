//! Pass/fail records for law checks, shared by every verifier.

use std::fmt;

use serde::Serialize;

/// A concrete instance where a law fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub location: String,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(
        location: impl Into<String>,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
    ) -> Self {
        Witness {
            location: location.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }
}

/// Outcome of one law. Passing means no witness was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Short code, e.g. `"a"` or `"iv"` for the G-Frobenius axioms.
    pub code: String,
    pub name: String,
    pub passed: bool,
    pub instances: u64,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn new(code: &str, name: &str, instances: u64, witness: Option<Witness>) -> Self {
        Check {
            code: code.to_string(),
            name: name.to_string(),
            passed: witness.is_none(),
            instances,
            witness,
        }
    }
}

/// An ordered list of checks.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub subject: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(subject: impl Into<String>) -> Self {
        Report {
            subject: subject.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, code: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.code == code)
    }

    pub fn failed_codes(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.code.as_str())
            .collect()
    }

    /// One JSON object per check, newline separated.
    pub fn to_json_lines(&self) -> String {
        self.checks
            .iter()
            .map(|c| serde_json::to_string(c).expect("report serializes"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.subject)?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "  [{status}] {:>4}  {} ({} instances)",
                c.code, c.name, c.instances
            )?;
            if let Some(w) = &c.witness {
                writeln!(f, "         at {}: {} != {}", w.location, w.lhs, w.rhs)?;
            }
        }
        Ok(())
    }
}
