//! Pass/fail reports of verification runs.

use serde::Serialize;

/// One named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Group the check belongs to, such as `gk-moves`.
    pub group: String,
    /// What was checked.
    pub name: String,
    /// Whether it held.
    pub passed: bool,
    /// Values or a counterexample.
    pub detail: String,
}

/// A list of checks.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    /// The checks in the order they ran.
    pub checks: Vec<Check>,
}

impl Report {
    /// An empty report.
    pub fn new() -> Self {
        Report::default()
    }

    /// Records a check.
    pub fn push(&mut self, group: &str, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { group: group.to_string(), name: name.into(), passed, detail: detail.into() });
    }

    /// Records an equality check between two printable values.
    pub fn expect_eq<T: PartialEq + std::fmt::Display>(&mut self, group: &str, name: impl Into<String>, lhs: &T, rhs: &T) {
        let passed = lhs == rhs;
        let detail = if passed { format!("{lhs}") } else { format!("{lhs} != {rhs}") };
        self.push(group, name, passed, detail);
    }

    /// Records the outcome of a fallible check; an error counts as a failure.
    pub fn record(&mut self, group: &str, name: impl Into<String>, outcome: Result<String, String>) {
        match outcome {
            Ok(detail) => self.push(group, name, true, detail),
            Err(detail) => self.push(group, name, false, detail),
        }
    }

    /// Appends every check of another report.
    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    /// True when every check passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The failed checks.
    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// The checks of one group.
    pub fn group(&self, group: &str) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.group == group).collect()
    }

    /// Whether every check of one group passed; false if the group is empty.
    pub fn group_passed(&self, group: &str) -> bool {
        let checks = self.group(group);
        !checks.is_empty() && checks.iter().all(|c| c.passed)
    }

    /// One line per check followed by a summary line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let verdict = if c.passed { "ok  " } else { "FAIL" };
            out.push_str(&format!("{verdict} [{}] {}: {}\n", c.group, c.name, c.detail));
        }
        let failed = self.failures().len();
        out.push_str(&format!("{} checks, {} failed\n", self.checks.len(), failed));
        out
    }
}
