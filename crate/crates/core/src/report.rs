//! Machine-readable pass/fail reports.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            detail: Some(detail.into()),
            counterexample: None,
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>, counterexample: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            detail: Some(detail.into()),
            counterexample: Some(counterexample.into()),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        let detail = detail.into();
        if ok {
            Check::pass(name, detail)
        } else {
            Check::fail(name, detail.clone(), detail)
        }
    }

    /// Passes iff `expected == actual`.
    pub fn equal<T: PartialEq + fmt::Debug>(name: impl Into<String>, expected: T, actual: T) -> Self {
        if expected == actual {
            Check::pass(name, format!("{actual:?}"))
        } else {
            Check::fail(name, format!("expected {expected:?}"), format!("got {actual:?}"))
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Accumulates many cases of one property, keeping the first failure.
#[derive(Debug)]
pub struct Tally {
    name: String,
    cases: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    pub fn new(name: impl Into<String>) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            failures: 0,
            first: None,
        }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(describe());
            }
        }
    }

    pub fn finish(self) -> Check {
        match self.first {
            None => Check::pass(self.name, format!("{} cases", self.cases)),
            Some(c) => Check::fail(
                self.name,
                format!("{} of {} cases failed", self.failures, self.cases),
                c,
            ),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: String,
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub bound: usize,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(suite: impl Into<String>, cartan_type: impl fmt::Display, rank: usize, bound: usize) -> Self {
        Report {
            suite: suite.into(),
            cartan_type: cartan_type.to_string(),
            rank,
            bound,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} on {} (bound {})", self.suite, self.cartan_type, self.bound)?;
        for c in &self.checks {
            let status = if c.passed() { "pass" } else { "FAIL" };
            write!(f, "  [{status}] {}", c.name)?;
            if let Some(d) = &c.detail {
                write!(f, ": {d}")?;
            }
            if let Some(x) = &c.counterexample {
                write!(f, " (counterexample: {x})")?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        let total = self.checks.len();
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        write!(f, "{passed}/{total} checks passed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_keeps_first_failure() {
        let mut t = Tally::new("x");
        t.record(true, || "a".into());
        t.record(false, || "b".into());
        t.record(false, || "c".into());
        let c = t.finish();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.counterexample.as_deref(), Some("b"));
        assert_eq!(c.detail.as_deref(), Some("2 of 3 cases failed"));
    }

    #[test]
    fn report_json_shape() {
        let mut r = Report::new("automaton", "A2", 2, 10);
        r.push(Check::equal("states", 16, 16));
        r.push(Check::equal("words", 1, 2));
        let v = r.to_json();
        assert_eq!(v["type"], "A2");
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["checks"][1]["status"], "fail");
        assert!(v["checks"][0].get("counterexample").is_none());
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().name, "words");
    }
}
