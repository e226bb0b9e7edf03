//! Command reports: per-check status with witnesses plus computed outputs,
//! rendered as plain text or JSON. Rendering depends only on the report.

use serde::Serialize;
use sha2::{Digest, Sha256};
use xmod_hopf::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckStatus {
    pub name: String,
    pub status: Status,
    pub violations: usize,
    pub witnesses: Vec<String>,
}

/// A titled block of output lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Section {
    pub title: String,
    pub lines: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub input_digest: String,
    pub checks: Vec<CheckStatus>,
    pub outputs: Vec<Section>,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{:x}", Sha256::digest(bytes))
}

impl Report {
    pub fn new(command: impl Into<String>, input: &[u8]) -> Self {
        Report {
            command: command.into(),
            input_digest: digest(input),
            checks: Vec::new(),
            outputs: Vec::new(),
        }
    }

    /// Adds every check of `r`, prefixed by `scope`.
    pub fn absorb(&mut self, scope: &str, r: &ValidationReport) {
        for c in &r.checks {
            let name = if scope.is_empty() {
                c.name.clone()
            } else {
                format!("{scope}: {}", c.name)
            };
            let status = if c.passed() { Status::Pass } else { Status::Fail };
            self.checks.push(CheckStatus {
                name,
                status,
                violations: c.violations,
                witnesses: c.witnesses.clone(),
            });
        }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        let (status, violations, witnesses) = if ok {
            (Status::Pass, 0, vec![])
        } else {
            (Status::Fail, 1, vec![witness()])
        };
        self.checks.push(CheckStatus {
            name: name.into(),
            status,
            violations,
            witnesses,
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(CheckStatus {
            name: name.into(),
            status: Status::Skipped,
            violations: 0,
            witnesses: vec![reason.into()],
        });
    }

    pub fn section(&mut self, title: impl Into<String>, lines: Vec<String>) {
        self.outputs.push(Section { title: title.into(), lines });
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// All witnesses of failing checks.
    pub fn witnesses(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .flat_map(|c| c.witnesses.iter().map(String::as_str))
            .collect()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("command: {}\ninput: {}\n", self.command, self.input_digest);
        for c in &self.checks {
            match c.status {
                Status::Pass => out.push_str(&format!("PASS {}\n", c.name)),
                Status::Fail => {
                    out.push_str(&format!("FAIL {} ({} violations)\n", c.name, c.violations));
                    for w in &c.witnesses {
                        out.push_str(&format!("    witness: {w}\n"));
                    }
                }
                Status::Skipped => {
                    out.push_str(&format!("SKIP {}", c.name));
                    if let Some(reason) = c.witnesses.first() {
                        out.push_str(&format!(" ({reason})"));
                    }
                    out.push('\n');
                }
            }
        }
        for s in &self.outputs {
            out.push_str(&format!("{}:\n", s.title));
            for l in &s.lines {
                out.push_str(&format!("  {l}\n"));
            }
        }
        let total = self.checks.iter().filter(|c| c.status != Status::Skipped).count();
        if self.passed() {
            out.push_str(&format!("result: pass ({total} checks)\n"));
        } else {
            out.push_str(&format!("result: fail ({} of {total} checks failed)\n", self.failures()));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}
