//! Structured pass/fail records for each verification suite.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

/// A printed formula that computation shows to be wrong or incomplete, with
/// what the computation settled on instead.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TypoEntry {
    pub location: String,
    pub printed: String,
    pub resolution: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub typo_ledger: Vec<TypoEntry>,
    /// Derived matrices as row-major entry strings.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            typo_ledger: Vec::new(),
            matrices: BTreeMap::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn push(&mut self, name: &str, status: Status, detail: String, cx: Option<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status,
            detail,
            counterexample: cx,
        });
    }

    pub fn pass(&mut self, name: &str, detail: impl Into<String>) {
        self.push(name, Status::Pass, detail.into(), None);
    }

    pub fn fail(&mut self, name: &str, detail: impl Into<String>, counterexample: Option<String>) {
        self.push(name, Status::Fail, detail.into(), counterexample);
    }

    pub fn info(&mut self, name: &str, detail: impl Into<String>) {
        self.push(name, Status::Info, detail.into(), None);
    }

    /// Records `pass` when `ok`, otherwise `fail` with the counterexample.
    pub fn check(
        &mut self,
        name: &str,
        ok: bool,
        detail: impl Into<String>,
        counterexample: impl FnOnce() -> Option<String>,
    ) -> bool {
        if ok {
            self.pass(name, detail);
        } else {
            let cx = counterexample();
            self.fail(name, detail, cx);
        }
        ok
    }

    pub fn matrix(&mut self, name: &str, rows: Vec<Vec<String>>) {
        self.matrices.insert(name.to_string(), rows);
    }

    pub fn typo(&mut self, entry: TypoEntry) {
        if !self.typo_ledger.contains(&entry) {
            self.typo_ledger.push(entry);
        }
    }

    /// Appends another report's checks (prefixed) and ledger entries.
    pub fn absorb(&mut self, other: VerificationReport) {
        for mut c in other.checks {
            c.name = format!("{}/{}", other.suite, c.name);
            self.checks.push(c);
        }
        for t in other.typo_ledger {
            self.typo(t);
        }
        for (k, m) in other.matrices {
            self.matrices.insert(format!("{}/{}", other.suite, k), m);
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let _ = writeln!(out, "== {} [{}]", self.suite, params.join(", "));
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            let _ = writeln!(out, "  {tag} {}: {}", c.name, c.detail);
            if let Some(cx) = &c.counterexample {
                for line in cx.lines() {
                    let _ = writeln!(out, "       {line}");
                }
            }
        }
        for t in &self.typo_ledger {
            let _ = writeln!(
                out,
                "  TYPO {}: printed {} -> {}",
                t.location, t.printed, t.resolution
            );
        }
        out
    }
}
