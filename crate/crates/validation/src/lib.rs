//! Timed pass/fail reporting for the `acceptance` test target.

use std::fmt::Display;
use std::time::{Duration, Instant};

/// What one criterion found.
#[derive(Debug, Default)]
pub struct Findings {
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Findings {
    /// Records a failure unless `ok`.
    pub fn check(&mut self, ok: bool, what: impl Display) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    /// Compares two values, recording both on a mismatch.
    pub fn expect_eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, got: T, want: T) {
        if got != want {
            self.failures.push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }

    pub fn note(&mut self, line: impl Display) {
        self.notes.push(line.to_string());
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs one criterion, prints its verdict line and any details, and returns
/// whether it passed. Exceeding `limit` is a failure.
pub fn judge(number: u8, title: &str, limit: Duration, check: impl FnOnce(&mut Findings)) -> bool {
    let mut findings = Findings::default();
    let start = Instant::now();
    check(&mut findings);
    let elapsed = start.elapsed();
    if elapsed > limit {
        findings.failures.push(format!("took {elapsed:.2?}, limit {limit:?}"));
    }
    let verdict = if findings.passed() { "PASS" } else { "FAIL" };
    println!("criterion {number:>2}: {verdict}  {title} ({} ms, limit {} ms)", elapsed.as_millis(), limit.as_millis());
    for line in &findings.failures {
        println!("    failed: {line}");
    }
    for line in &findings.notes {
        println!("    note: {line}");
    }
    findings.passed()
}
