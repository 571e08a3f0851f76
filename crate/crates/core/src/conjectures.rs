//! Exhaustive checks of the triplet-generation, core-copy and
//! top-subsegment statements over desk-scale levels.

use crate::cores::{core, core_size, core_top, rejected_terms, subsegments, Core};
use crate::dyck::is_dyck_number;
use crate::error::Result;
use crate::levels::{level_size, level_structural, mersenne};
use crate::oeis::{a001405, a002054, catalan};
use crate::patterns::{copy_at, make_pattern, power, verify_eq1, verify_eq2};
use crate::report::{compare_terms, Counterexample, VerificationOutcome};

pub use crate::report::VerificationOutcome as Outcome;

fn even_at_least(name: &str, n: u32, min: u32) -> Option<VerificationOutcome> {
    (n < min || n % 2 == 1).then(|| {
        VerificationOutcome::fail(
            name,
            n,
            Counterexample::new(u64::from(n), format!("even n >= {min}"), n),
        )
    })
}

fn construction_failed(name: &str, n: u32, err: impl std::fmt::Display) -> VerificationOutcome {
    VerificationOutcome::fail(
        name,
        n,
        Counterexample::new(u64::from(n), "construction succeeds", err),
    )
}

/// Quarter of `(M_{n-1}, M_n]` containing `t`, numbered 1..=4.
pub fn quarter(t: u64, n: u32) -> u64 {
    ((t - mersenne(n - 1) - 1) >> (n - 3)) + 1
}

/// Every term `t` of even level `n` generates the triplet
/// `(4t - 1, 4t + 1, 4t + 3)` in the same quarter of level `n + 2`.
pub fn check_prop12(n: u32) -> VerificationOutcome {
    const NAME: &str = "prop12";
    VerificationOutcome::timed(|| {
        if let Some(bad) = even_at_least(NAME, n, 6) {
            return bad;
        }
        let (level, upper) = match (level_structural(n), level_structural(n + 2)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return construction_failed(NAME, n, e),
        };
        for &t in &level.terms {
            for member in [4 * t - 1, 4 * t + 1, 4 * t + 3] {
                if !upper.contains(member) {
                    return VerificationOutcome::fail(
                        NAME,
                        n,
                        Counterexample::new(t, format!("{member} in level {}", n + 2), "absent"),
                    );
                }
            }
            let (before, after) = (quarter(t, n), quarter(4 * t + 3, n + 2));
            if before != after {
                return VerificationOutcome::fail(
                    NAME,
                    n,
                    Counterexample::new(t, format!("quarter {before}"), format!("quarter {after}")),
                );
            }
        }
        VerificationOutcome::pass(NAME, n)
    })
}

/// The two middle subsegments of `μ_{n+2}` are `μ_n` shifted by
/// `13 * 2^(n-3)` and `7 * 2^(n-2)`.
pub fn check_conj16(n: u32) -> VerificationOutcome {
    const NAME: &str = "conj16";
    VerificationOutcome::timed(|| {
        if let Some(bad) = even_at_least(NAME, n, 8) {
            return bad;
        }
        let (small, large) = match (core(n), core(n + 2)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => return construction_failed(NAME, n, e),
        };
        let parts = match subsegments(&large) {
            Ok(p) => p,
            Err(e) => return construction_failed(NAME, n, e),
        };
        let expected_size = core_size(n).unwrap_or_default() as usize;
        for (part, offset) in [
            (&parts[1], conj16_offsets(n).0),
            (&parts[2], conj16_offsets(n).1),
        ] {
            if part.len() != expected_size {
                return VerificationOutcome::fail(
                    NAME,
                    n,
                    Counterexample::new(offset, format!("{expected_size} terms"), part.len()),
                );
            }
            let shifted: Vec<u64> = small.terms.iter().map(|t| t + offset).collect();
            if let Err(detail) = compare_terms(&shifted, part) {
                return VerificationOutcome::fail(NAME, n, detail);
            }
        }
        VerificationOutcome::pass(NAME, n)
    })
}

/// Offsets carrying `μ_n` onto the second and third subsegments of
/// `μ_{n+2}`: `(13 * 2^(n-3), 7 * 2^(n-2))`.
pub fn conj16_offsets(n: u32) -> (u64, u64) {
    (13u64 << (n - 3), 7u64 << (n - 2))
}

/// The top subsegment of `μ_n` is
/// `μ_{n-4}(A - 3 * 2^(n-7)) ⊕ μ_{(n-2)/4}(A)^3` with `A = M_{n-1} + 2^(n-3)`,
/// and has `A001405(n - 5)` terms.
pub fn check_conj18(n: u32) -> VerificationOutcome {
    const NAME: &str = "conj18";
    VerificationOutcome::timed(|| {
        if let Some(bad) = even_at_least(NAME, n, 12) {
            return bad;
        }
        match conj18_terms(n) {
            Ok((expected, actual)) => {
                if let Err(detail) = compare_terms(&expected, &actual) {
                    return VerificationOutcome::fail(NAME, n, detail);
                }
                let count = a001405(u64::from(n - 5));
                if actual.len() as u128 != count {
                    return VerificationOutcome::fail(
                        NAME,
                        n,
                        Counterexample::new(core_top(n), count, actual.len()),
                    );
                }
                VerificationOutcome::pass(NAME, n)
                    .with_note(format!("{} terms in the top subsegment", actual.len()))
            }
            Err(e) => construction_failed(NAME, n, e),
        }
    })
}

/// Right-hand side materialized from lower cores, and the actual top
/// subsegment of `μ_n`.
pub fn conj18_terms(n: u32) -> Result<(Vec<u64>, Vec<u64>)> {
    let top = core_top(n);
    let actual = top_subsegment(&core(n)?)?;

    let lower_core = make_pattern(&core(n - 4)?.terms)?;
    let first = copy_at(&lower_core, top - (3u64 << (n - 7)))?;
    let previous_top = make_pattern(&top_subsegment(&core(n - 2)?)?)?;
    let tripled = power(&copy_at(&previous_top, top)?, 3)?;

    let mut expected = first.into_terms();
    expected.extend_from_slice(tripled.terms());
    Ok((expected, actual))
}

fn top_subsegment(c: &Core) -> Result<Vec<u64>> {
    let [_, _, _, top] = subsegments(c)?;
    Ok(top)
}

/// F00 rejects exactly `Cat(n/2 - 1)` terms of level `n - 2`, each of
/// which is a Dyck word once its leading bit is cleared.
pub fn check_rejected(n: u32) -> VerificationOutcome {
    const NAME: &str = "rejected";
    VerificationOutcome::timed(|| {
        if let Some(bad) = even_at_least(NAME, n, 6) {
            return bad;
        }
        let rejected = match rejected_terms(n) {
            Ok(r) => r,
            Err(e) => return construction_failed(NAME, n, e),
        };
        let expected = catalan(u64::from(n / 2 - 1));
        if rejected.len() as u128 != expected {
            return VerificationOutcome::fail(
                NAME,
                n,
                Counterexample::new(u64::from(n), expected, rejected.len()),
            );
        }
        let width = n - 2;
        for t in rejected {
            let word = t & !(1u64 << (width - 1));
            if 2 * word.count_ones() != width || !is_dyck_number(word) {
                return VerificationOutcome::fail(
                    NAME,
                    n,
                    Counterexample::new(
                        t,
                        "Dyck word after clearing the leading bit",
                        format!("{word:0w$b}", w = width as usize),
                    ),
                );
            }
        }
        VerificationOutcome::pass(NAME, n)
    })
}

/// Counting identities at even `n`: the level recurrence, the core-size
/// formula against A002054, and the measured core size.
pub fn check_sizes(n: u32) -> VerificationOutcome {
    const NAME: &str = "sizes";
    VerificationOutcome::timed(|| {
        if let Some(bad) = even_at_least(NAME, n, 6) {
            return bad;
        }
        let cat = catalan(u64::from(n / 2 - 1));
        let size = level_size(n);
        let four_below = 4 * level_size(n - 2) - cat;
        let two_below = 2 * level_size(n - 1) - cat;
        if size != four_below || size != two_below {
            return VerificationOutcome::fail(
                NAME,
                n,
                Counterexample::new(u64::from(n), size, format!("{four_below} / {two_below}")),
            );
        }
        let formula = core_size(n).unwrap_or_default();
        let binomial_form = a002054(u64::from(n / 2 - 2)).unwrap_or_default();
        if formula != binomial_form {
            return VerificationOutcome::fail(
                NAME,
                n,
                Counterexample::new(u64::from(n), binomial_form, formula),
            );
        }
        match core(n) {
            Ok(c) if c.len() as u128 == formula => VerificationOutcome::pass(NAME, n),
            Ok(c) => VerificationOutcome::fail(
                NAME,
                n,
                Counterexample::new(u64::from(n), formula, c.len()),
            ),
            Err(e) => construction_failed(NAME, n, e),
        }
    })
}

/// A named family of checks over a range of `n`.
#[derive(Debug, Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub min_n: u32,
    /// Parity of the admissible `n` (1 for odd levels, 0 for even).
    pub parity: u32,
    pub run: fn(u32) -> VerificationOutcome,
}

impl Check {
    pub fn ns(&self, max_n: u32) -> impl Iterator<Item = u32> + '_ {
        (self.min_n..=max_n).filter(move |n| n % 2 == self.parity)
    }

    pub fn run_up_to(&self, max_n: u32) -> Vec<VerificationOutcome> {
        self.ns(max_n).map(self.run).collect()
    }
}

/// Every check, in name order.
pub const CHECKS: [Check; 7] = [
    Check {
        name: "conj16",
        min_n: 8,
        parity: 0,
        run: check_conj16,
    },
    Check {
        name: "conj18",
        min_n: 12,
        parity: 0,
        run: check_conj18,
    },
    Check {
        name: "eq1",
        min_n: 5,
        parity: 1,
        run: verify_eq1,
    },
    Check {
        name: "eq2",
        min_n: 6,
        parity: 0,
        run: verify_eq2,
    },
    Check {
        name: "prop12",
        min_n: 6,
        parity: 0,
        run: check_prop12,
    },
    Check {
        name: "rejected",
        min_n: 6,
        parity: 0,
        run: check_rejected,
    },
    Check {
        name: "sizes",
        min_n: 6,
        parity: 0,
        run: check_sizes,
    },
];

pub fn find_check(name: &str) -> Option<&'static Check> {
    CHECKS.iter().find(|c| c.name == name)
}

/// Every check for `n <= max_n`, ordered by (name, n).
///
/// `prop12` and `conj16` at `n` also build level or core `n + 2`.
pub fn run_all(max_n: u32) -> Vec<VerificationOutcome> {
    CHECKS.iter().flat_map(|c| c.run_up_to(max_n)).collect()
}
