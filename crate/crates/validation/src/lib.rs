//! Reporting helpers for the acceptance checks in `tests/acceptance.rs`.

use std::fmt;
use std::time::{Duration, Instant};

/// Result of one acceptance criterion.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl Outcome {
    pub fn within_limit(&self) -> bool {
        self.limit.is_none_or(|l| self.elapsed < l)
    }

    pub fn ok(&self) -> bool {
        self.passed && self.within_limit()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.ok() { "PASS" } else { "FAIL" };
        let limit = match self.limit {
            Some(l) if !self.within_limit() => format!(", over the {:.0?} limit", l),
            Some(l) => format!(", limit {:.0?}", l),
            None => String::new(),
        };
        write!(
            f,
            "criterion {:>2} {verdict}  {} ({:.2?}{limit}): {}",
            self.id, self.title, self.elapsed, self.detail
        )
    }
}

/// Runs `check`, timing it. `check` returns whether it passed and a one-line
/// explanation.
pub fn run(
    id: u32,
    title: &'static str,
    limit: Option<Duration>,
    check: impl FnOnce() -> (bool, String),
) -> Outcome {
    let start = Instant::now();
    let (passed, detail) = check();
    Outcome { id, title, passed, detail, elapsed: start.elapsed(), limit }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slow_checks_fail() {
        let o = run(1, "t", Some(Duration::ZERO), || (true, "fine".into()));
        assert!(o.passed && !o.ok());
        assert!(o.to_string().contains("FAIL"));
        let o = run(2, "t", None, || (true, "fine".into()));
        assert!(o.to_string().starts_with("criterion  2 PASS"));
    }
}
