//! Named pass/fail checks with the size of the violating difference.

use std::fmt;

use serde::Serialize;

use crate::exactalg::ExactMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Max-norm of the difference matrix, `"0"` when the identity holds.
    pub residue: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub title: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Report { title: title.into(), checks: Vec::new() }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Records `lhs = rhs`; on failure both sides go into the detail.
    pub fn check_equal(&mut self, name: impl Into<String>, lhs: &ExactMatrix, rhs: &ExactMatrix) -> bool {
        let name = name.into();
        if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
            return self.fail(
                name,
                format!("shape {}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()),
            );
        }
        let diff = lhs.sub(rhs);
        let passed = diff.is_zero();
        let detail = (!passed).then(|| format!("lhs = {lhs:?}, rhs = {rhs:?}"));
        self.checks.push(Check { name, passed, residue: diff.max_norm().to_string(), detail });
        passed
    }

    /// Records that `m` vanishes.
    pub fn check_zero(&mut self, name: impl Into<String>, m: &ExactMatrix) -> bool {
        let passed = m.is_zero();
        self.checks.push(Check { name: name.into(), passed, residue: m.max_norm().to_string(), detail: None });
        passed
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) -> bool {
        let residue = if passed { "0" } else { "1" }.to_string();
        self.checks.push(Check { name: name.into(), passed, residue, detail });
        passed
    }

    pub fn pass(&mut self, name: impl Into<String>) -> bool {
        self.check(name, true, None)
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) -> bool {
        self.check(name, false, Some(detail.into()))
    }

    /// Appends the checks of `other`, prefixing their names with its title.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.checks {
            if !other.title.is_empty() {
                c.name = format!("{}: {}", other.title, c.name);
            }
            self.checks.push(c);
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.title.is_empty() {
            writeln!(f, "== {} ==", self.title)?;
        }
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            write!(f, "[{tag}] {}", c.name)?;
            if !c.passed {
                write!(f, " (residue {})", c.residue)?;
                if let Some(d) = &c.detail {
                    write!(f, ": {d}")?;
                }
            }
            writeln!(f)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}
