//! Pass/fail reports shared by the identity suites and golden-data checks.

use std::fmt;

use crate::exactmath::GridOutcome;
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    /// Short stable label, e.g. `"b"` or `"theta1-fixed"`.
    pub item: String,
    pub description: String,
    pub passed: bool,
    /// Witness or summary; empty on a plain pass.
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentityReport {
    pub title: String,
    pub checks: Vec<CheckResult>,
}

impl IdentityReport {
    pub fn new(title: impl Into<String>) -> Self {
        IdentityReport { title: title.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, item: &str, description: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult {
            item: item.to_string(),
            description: description.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    /// Record a grid check; an exhausted grid is recorded as a failure.
    pub fn push_grid(&mut self, item: &str, description: &str, outcome: Result<GridOutcome>) {
        match outcome {
            Ok(GridOutcome::Identical { points, .. }) => {
                self.push(item, description, true, format!("{points} grid points"))
            }
            Ok(o @ GridOutcome::Differs { .. }) => {
                self.push(item, description, false, o.witness_string().unwrap_or_default())
            }
            Err(e) => self.push(item, description, false, e.to_string()),
        }
    }

    pub fn extend(&mut self, other: IdentityReport) {
        self.checks.extend(other.checks);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, item: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.item == item)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.title)?;
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} [{}] {}", c.item, c.description)?;
            if !c.detail.is_empty() {
                write!(f, " ({})", c.detail)?;
            }
            writeln!(f)?;
        }
        let passed = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{passed}/{} passed", self.checks.len())
    }
}
