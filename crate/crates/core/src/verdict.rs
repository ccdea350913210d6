//! Membership verdicts with per-condition results and witnesses.

use std::fmt;

/// Outcome of one named condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// For a failure: the first offending basis element, its degree and the
    /// mismatch, in readable form.
    pub witness: Option<String>,
}

/// Conjunction of named conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub property: String,
    pub checks: Vec<Check>,
}

impl Verdict {
    pub fn new(property: impl Into<String>) -> Self {
        Verdict { property: property.into(), checks: Vec::new() }
    }

    pub fn pass(&mut self, name: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, witness: None });
    }

    pub fn fail(&mut self, name: impl Into<String>, witness: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: false, witness: Some(witness.into()) });
    }

    /// Records `ok` under `name`, with a lazily built witness on failure.
    pub fn record(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, witness());
        }
    }

    pub fn is_member(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "property: {}", self.property)?;
        writeln!(f, "member: {}", self.is_member())?;
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "  [pass] {}", c.name)?,
                Some(w) => writeln!(f, "  [FAIL] {}: {}", c.name, w)?,
            }
        }
        Ok(())
    }
}
