use std::fmt;

use serde::Serialize;

/// Outcome of one named check.
///
/// `offending` lists the index tuples that exceeded the tolerance; it is empty
/// exactly when the check passed.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub max_residual: f64,
    pub tolerance: f64,
    pub offending: Vec<Vec<usize>>,
}

impl CheckResult {
    /// Builds a result from residual samples `(indices, residual)`.
    pub fn from_residuals<I>(name: impl Into<String>, tol: f64, samples: I) -> Self
    where
        I: IntoIterator<Item = (Vec<usize>, f64)>,
    {
        let mut max_residual = 0.0_f64;
        let mut offending = Vec::new();
        for (idx, r) in samples {
            if r.is_nan() || r > tol {
                offending.push(idx);
            }
            if r.is_nan() || r > max_residual {
                max_residual = r;
            }
        }
        CheckResult {
            name: name.into(),
            passed: offending.is_empty(),
            max_residual,
            tolerance: tol,
            offending,
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<34} {}  max residual {:.5e}",
            self.name,
            if self.passed { "pass" } else { "FAIL" },
            self.max_residual
        )?;
        if !self.offending.is_empty() {
            let shown: Vec<String> = self
                .offending
                .iter()
                .take(4)
                .map(|v| format!("{v:?}"))
                .collect();
            write!(f, "  at {}", shown.join(" "))?;
            if self.offending.len() > 4 {
                write!(f, " (+{} more)", self.offending.len() - 4)?;
            }
        }
        Ok(())
    }
}

/// An ordered collection of checks.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_residual(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.max_residual)
            .fold(0.0, |a, b| if b.is_nan() || b > a { b } else { a })
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}
