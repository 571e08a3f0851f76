use std::fmt;
use std::time::{Duration, Instant};

/// First place where a check disagreed with its expectation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    /// The term (or index) at which the mismatch was found.
    pub term: u64,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    pub fn new(term: u64, expected: impl fmt::Display, actual: impl fmt::Display) -> Self {
        Counterexample {
            term,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub name: String,
    pub n: u32,
    pub passed: bool,
    /// Present exactly when `passed` is false.
    pub detail: Option<Counterexample>,
    /// Free-form remark, e.g. the first compared index of an OEIS b-file.
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl VerificationOutcome {
    pub fn pass(name: &str, n: u32) -> Self {
        VerificationOutcome {
            name: name.to_string(),
            n,
            passed: true,
            detail: None,
            note: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn fail(name: &str, n: u32, detail: Counterexample) -> Self {
        VerificationOutcome {
            name: name.to_string(),
            n,
            passed: false,
            detail: Some(detail),
            note: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn from_result(name: &str, n: u32, result: Result<(), Counterexample>) -> Self {
        match result {
            Ok(()) => Self::pass(name, n),
            Err(detail) => Self::fail(name, n, detail),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Runs `check` and stamps the elapsed wall time on its outcome.
    pub fn timed(check: impl FnOnce() -> VerificationOutcome) -> Self {
        let start = Instant::now();
        let mut outcome = check();
        outcome.elapsed = start.elapsed();
        outcome
    }
}

impl fmt::Display for VerificationOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}", self.name)?;
        // n = 0 marks checks that are not tied to a level.
        if self.n != 0 {
            write!(f, " n={}", self.n)?;
        }
        if let Some(d) = &self.detail {
            write!(
                f,
                " at {}: expected {}, got {}",
                d.term, d.expected, d.actual
            )?;
        }
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Element-wise comparison of two ascending term lists; the counterexample
/// names the first term present in one list but not at the same position
/// in the other.
pub fn compare_terms(expected: &[u64], actual: &[u64]) -> Result<(), Counterexample> {
    for (i, (e, a)) in expected.iter().zip(actual).enumerate() {
        if e != a {
            return Err(Counterexample::new(i as u64, e, a));
        }
    }
    match expected.len().cmp(&actual.len()) {
        std::cmp::Ordering::Equal => Ok(()),
        std::cmp::Ordering::Greater => {
            let i = actual.len();
            Err(Counterexample::new(i as u64, expected[i], "end of terms"))
        }
        std::cmp::Ordering::Less => {
            let i = expected.len();
            Err(Counterexample::new(i as u64, "end of terms", actual[i]))
        }
    }
}
