//! Pass/fail reports produced by the verification routines.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub params: String,
    pub expected: String,
    pub actual: String,
    pub routes: String,
}

/// Outcome of one verification suite. `failures` is empty exactly when the
/// suite passed; failures are kept sorted so the serialized form does not
/// depend on evaluation order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerifyReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerifyReport { suite: suite.into(), cases: 0, failures: Vec::new(), elapsed_ms: 0 }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one case; compares `expected` with `actual` by equality.
    pub fn check<T: PartialEq + std::fmt::Display>(
        &mut self,
        params: impl Into<String>,
        routes: impl Into<String>,
        expected: &T,
        actual: &T,
    ) -> bool {
        self.cases += 1;
        let ok = expected == actual;
        if !ok {
            self.failures.push(Failure {
                params: params.into(),
                expected: expected.to_string(),
                actual: actual.to_string(),
                routes: routes.into(),
            });
        }
        ok
    }

    /// Records one case that failed before a comparison could be made.
    pub fn error(&mut self, params: impl Into<String>, routes: impl Into<String>, err: impl std::fmt::Display) {
        self.cases += 1;
        self.failures.push(Failure {
            params: params.into(),
            expected: "a value".into(),
            actual: format!("error: {err}"),
            routes: routes.into(),
        });
    }

    pub fn absorb(&mut self, other: VerifyReport) {
        self.cases += other.cases;
        self.failures.extend(other.failures);
    }

    pub fn finish(mut self, elapsed_ms: u64) -> Self {
        self.failures.sort();
        self.elapsed_ms = elapsed_ms;
        self
    }

    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        format!("{status} {}: {} cases, {} failures", self.suite, self.cases, self.failures.len())
    }
}
