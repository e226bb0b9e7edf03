//! Witness-reporting validation results.

use std::fmt;

/// Witnesses kept per check; the violation count is always exact.
pub const MAX_WITNESSES: usize = 10;

/// Outcome of one named identity, checked over every index tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub violations: usize,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            violations: 0,
            witnesses: Vec::new(),
        }
    }

    /// Records one violation; the witness text is only built while there is room.
    pub fn fail(&mut self, witness: impl FnOnce() -> String) {
        self.violations += 1;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness());
        }
    }

    /// Records a violation when `ok` is false.
    pub fn expect(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.fail(witness);
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// An ordered list of checks. Empty or all-passing means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Appends checks from `other`, prefixing their names with `scope`.
    pub fn absorb(&mut self, scope: &str, other: ValidationReport) {
        for mut c in other.checks {
            if !scope.is_empty() {
                c.name = format!("{scope}: {}", c.name);
            }
            self.checks.push(c);
        }
    }

    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn violations(&self) -> usize {
        self.checks.iter().map(|c| c.violations).sum()
    }

    pub fn failed(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name || c.name.ends_with(&format!(": {name}")))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.passed() {
                writeln!(f, "PASS {}", c.name)?;
            } else {
                writeln!(f, "FAIL {} ({} violations)", c.name, c.violations)?;
                for w in &c.witnesses {
                    writeln!(f, "    witness: {w}")?;
                }
            }
        }
        Ok(())
    }
}
