//! Pass/fail reports for named verification checks.

use std::fmt;

/// One asserted fact inside a verification run.
#[derive(Clone, Debug)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    /// Counterexample or context, recorded on failure (and occasionally as
    /// an informational note on success).
    pub detail: Option<String>,
}

/// Outcome of a named verification check.
#[derive(Clone, Debug)]
pub struct Report {
    pub id: String,
    pub seed: Option<u64>,
    pub items: Vec<CheckItem>,
    /// Informational notes surfaced in the rendered report regardless of
    /// pass/fail (e.g. which of two conflicting printed forms holds).
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(id: impl Into<String>) -> Self {
        Report {
            id: id.into(),
            seed: None,
            items: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn with_seed(id: impl Into<String>, seed: u64) -> Self {
        Report {
            id: id.into(),
            seed: Some(seed),
            items: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.items.push(CheckItem {
            name: name.into(),
            passed,
            detail: None,
        });
    }

    pub fn check_eq<T: PartialEq + fmt::Debug>(&mut self, name: impl Into<String>, lhs: &T, rhs: &T) {
        let passed = lhs == rhs;
        let detail = if passed {
            None
        } else {
            Some(format!(
                "{} != {}",
                clip(&format!("{lhs:?}")),
                clip(&format!("{rhs:?}"))
            ))
        };
        self.items.push(CheckItem {
            name: name.into(),
            passed,
            detail,
        });
    }

    pub fn fail(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.items.push(CheckItem {
            name: name.into(),
            passed: false,
            detail: Some(detail.into()),
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn merge(&mut self, other: Report) {
        let prefix = other.id;
        for mut item in other.items {
            item.name = format!("{prefix}: {}", item.name);
            self.items.push(item);
        }
        self.notes.extend(other.notes);
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.items.iter().find(|i| !i.passed)
    }

    /// Multi-line rendering: header, notes, and the verdict with the first
    /// counterexample on failure.
    pub fn render(&self) -> String {
        let mut out = String::new();
        match self.seed {
            Some(seed) => out.push_str(&format!("check {} (seed {seed})\n", self.id)),
            None => out.push_str(&format!("check {}\n", self.id)),
        }
        for note in &self.notes {
            out.push_str(&format!("  note: {note}\n"));
        }
        if self.passed() {
            out.push_str(&format!("  PASS ({} checks)\n", self.items.len()));
        } else {
            let failed = self.items.iter().filter(|i| !i.passed).count();
            let first = self.first_failure().unwrap();
            out.push_str(&format!(
                "  FAIL ({failed}/{} checks failed); first counterexample: {}{}\n",
                self.items.len(),
                first.name,
                first
                    .detail
                    .as_ref()
                    .map(|d| format!(" [{d}]"))
                    .unwrap_or_default()
            ));
        }
        out
    }
}

fn clip(s: &str) -> String {
    const LIMIT: usize = 160;
    if s.len() <= LIMIT {
        s.to_string()
    } else {
        format!("{}…", &s[..LIMIT])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_reporting() {
        let mut r = Report::new("demo");
        r.check("a", true);
        r.check_eq("b", &1, &2);
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().name, "b");
        assert!(r.render().contains("first counterexample: b"));
    }
}
