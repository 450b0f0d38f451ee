use std::fmt;

use serde::{Deserialize, Serialize};

/// Outcome of a verification suite.
///
/// Every check increments `checked`; a failed check increments
/// `violation_count` and the first few messages are kept in `violations`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: serde_json::Value,
    pub checked: u64,
    pub violation_count: u64,
    pub violations: Vec<String>,
    pub notes: Vec<String>,
}

const KEPT_MESSAGES: usize = 50;

impl Report {
    pub fn new(suite: impl Into<String>, params: serde_json::Value) -> Self {
        Report {
            suite: suite.into(),
            params,
            checked: 0,
            violation_count: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < KEPT_MESSAGES {
                self.violations.push(describe());
            }
        }
        ok
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }

    /// Folds another report's counts and messages into this one.
    pub fn absorb(&mut self, other: Report) {
        self.checked += other.checked;
        self.violation_count += other.violation_count;
        let room = KEPT_MESSAGES.saturating_sub(self.violations.len());
        self.violations
            .extend(other.violations.into_iter().take(room));
        self.notes.extend(other.notes);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} checked, {} violations",
            self.suite, self.checked, self.violation_count
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting() {
        let mut r = Report::new("x", serde_json::json!({}));
        r.check(true, || unreachable!());
        r.check(false, || "bad".into());
        assert_eq!((r.checked, r.violation_count), (2, 1));
        assert!(!r.passed());
        let mut s = Report::new("y", serde_json::json!({}));
        s.absorb(r);
        assert_eq!(s.violations, vec!["bad".to_string()]);
    }
}
