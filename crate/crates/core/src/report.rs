//! Pass/fail records produced by the verification routines.

use std::fmt;

use serde_json::{json, Value};

use crate::qseries::{QPoly, TruncatedSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub summary: String,
    /// Details of the first failure, when there is one.
    pub first_failure: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, summary: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            summary: summary.into(),
            first_failure: None,
        }
    }

    pub fn fail(
        name: impl Into<String>,
        summary: impl Into<String>,
        failure: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            passed: false,
            summary: summary.into(),
            first_failure: Some(failure.into()),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, summary: impl Into<String>) -> Self {
        let summary = summary.into();
        if ok {
            Check::pass(name, summary)
        } else {
            let failure = summary.clone();
            Check::fail(name, summary, failure)
        }
    }

    pub fn compare_poly(
        name: impl Into<String>,
        left_label: &str,
        left: &QPoly,
        right_label: &str,
        right: &QPoly,
    ) -> Self {
        if left == right {
            Check::pass(name, format!("{left_label} = {right_label} = {left}"))
        } else {
            Check::fail(
                name,
                format!("{left_label} ≠ {right_label}"),
                format!("{left_label} = {left}; {right_label} = {right}"),
            )
        }
    }

    /// Compares two truncated series through the smaller truncation degree.
    pub fn compare_series(
        name: impl Into<String>,
        left_label: &str,
        left: &TruncatedSeries,
        right_label: &str,
        right: &TruncatedSeries,
    ) -> Self {
        let through = left.trunc().min(right.trunc());
        match left.first_mismatch(right) {
            None => Check::pass(
                name,
                format!("{left_label} = {right_label} through t^{through}"),
            ),
            Some(d) => Check::fail(
                name,
                format!("{left_label} ≠ {right_label}"),
                format!(
                    "first mismatch at t^{d}: {} vs {}",
                    left.coeff(d),
                    right.coeff(d)
                ),
            ),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.passed,
            "summary": self.summary,
            "first_failure": self.first_failure,
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {}", self.name, self.summary)?;
        if let Some(why) = &self.first_failure {
            write!(f, " ({why})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.checks.len() - failed,
            failed
        )
    }
}
