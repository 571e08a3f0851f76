//! Patterns: runs of adjacent terms of one level, identified by their
//! senior term (top). Copies, offsets, joins and powers are all term-wise
//! and validated against the sequence itself.

use std::fmt;

use crate::dyck::{bit_length, dyck_pred, dyck_succ, is_dyck_number, DyckNumber};
use crate::error::{DyckError, Result};
use crate::levels::{level_structural, mersenne};
use crate::report::{compare_terms, Counterexample, VerificationOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    terms: Vec<u64>,
}

impl Pattern {
    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<u64> {
        self.terms
    }

    pub fn first(&self) -> u64 {
        self.terms[0]
    }

    /// The senior term.
    pub fn top(&self) -> u64 {
        *self.terms.last().expect("patterns are non-empty")
    }

    /// Number of terms (the power `#x`).
    pub fn count(&self) -> usize {
        self.terms.len()
    }

    /// Offsets `top - term` in ascending term order.
    pub fn shape(&self) -> Vec<u64> {
        let top = self.top();
        self.terms.iter().map(|t| top - t).collect()
    }

    pub fn level(&self) -> u32 {
        bit_length(self.first())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

/// A verified copy: same cardinality and a constant term-wise offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyRelation {
    pub source: Pattern,
    pub target: Pattern,
    pub offset: u64,
}

impl CopyRelation {
    /// Checks both copy conditions: the target lies strictly above the
    /// source, and the predecessors of the first terms as well as every pair
    /// of terms differ by the same offset.
    pub fn new(source: Pattern, target: Pattern) -> Result<Self> {
        if source.count() != target.count() {
            return Err(DyckError::NotACopy(format!(
                "{} terms versus {}",
                source.count(),
                target.count()
            )));
        }
        if source.top() >= target.first() {
            return Err(DyckError::NotACopy(format!(
                "top {} of the source is not below the first target term {}",
                source.top(),
                target.first()
            )));
        }
        let offset = target.top() - source.top();
        if let Some((s, t)) = source
            .terms
            .iter()
            .zip(&target.terms)
            .find(|(s, t)| *t - *s != offset)
        {
            return Err(DyckError::NotACopy(format!(
                "{t} - {s} differs from the offset {offset}"
            )));
        }
        predecessor_offset_matches(&source, &target, offset).map_err(DyckError::NotACopy)?;
        Ok(CopyRelation {
            source,
            target,
            offset,
        })
    }
}

fn predecessor_offset_matches(
    source: &Pattern,
    target: &Pattern,
    offset: u64,
) -> std::result::Result<(), String> {
    let pred =
        |v: u64| dyck_pred(DyckNumber::new(v).expect("pattern terms are members")).map(|p| p.get());
    match (pred(source.first()), pred(target.first())) {
        (Ok(ps), Ok(pt)) if pt >= ps && pt - ps == offset => Ok(()),
        (Ok(ps), Ok(pt)) => Err(format!(
            "predecessors {ps} and {pt} of the first terms are not {offset} apart"
        )),
        _ => Err("the first term has no predecessor".to_string()),
    }
}

/// Validates membership, adjacency and a shared binary length.
pub fn make_pattern(terms: &[u64]) -> Result<Pattern> {
    let Some(&first) = terms.first() else {
        return Err(DyckError::Domain(
            "a pattern needs at least one term".into(),
        ));
    };
    let level = bit_length(first);
    for &t in terms {
        if !is_dyck_number(t) {
            return Err(DyckError::NotMember(t));
        }
        let other = bit_length(t);
        if other != level {
            return Err(DyckError::MixedLevels {
                first: level,
                other,
            });
        }
    }
    for w in terms.windows(2) {
        let next = dyck_succ(DyckNumber::new(w[0]).expect("checked above"))?.get();
        if next != w[1] {
            return Err(DyckError::NotContiguous {
                low: w[0],
                high: w[1],
                next,
            });
        }
    }
    Ok(Pattern {
        terms: terms.to_vec(),
    })
}

/// The full level `n` viewed as a pattern with top `M_n`.
pub fn level_pattern(n: u32) -> Result<Pattern> {
    Ok(Pattern {
        terms: level_structural(n)?.terms,
    })
}

/// `len(x) = top - DPred(first term)`: the span of the pattern on the number
/// line, as opposed to its number of terms.
pub fn pattern_len(p: &Pattern) -> Result<u64> {
    let first = DyckNumber::new(p.first()).expect("pattern terms are members");
    Ok(p.top() - dyck_pred(first)?.get())
}

/// Shifts every term by `delta` and checks that the result is again a
/// pattern satisfying the predecessor condition of a copy.
fn translate(p: &Pattern, delta: i128) -> Result<Pattern> {
    let new_top = p.top() as i128 + delta;
    let invalid = |reason: String| DyckError::InvalidCopy {
        top: new_top.max(0) as u64,
        reason,
    };
    let shifted: Vec<u64> = p
        .terms
        .iter()
        .map(|&t| {
            let v = t as i128 + delta;
            u64::try_from(v).map_err(|_| invalid(format!("{t} shifted by {delta} is out of range")))
        })
        .collect::<Result<_>>()?;
    let copy = make_pattern(&shifted).map_err(|e| invalid(e.to_string()))?;
    let (lower, upper) = if delta >= 0 { (p, &copy) } else { (&copy, p) };
    predecessor_offset_matches(lower, upper, delta.unsigned_abs() as u64).map_err(invalid)?;
    Ok(copy)
}

/// The copy of `p` whose senior term is `new_top`.
pub fn copy_at(p: &Pattern, new_top: u64) -> Result<Pattern> {
    if new_top <= p.top() {
        return Err(DyckError::InvalidCopy {
            top: new_top,
            reason: format!("copies lie above the source top {}", p.top()),
        });
    }
    let delta = new_top - p.top();
    if p.first() + delta <= p.top() {
        return Err(DyckError::InvalidCopy {
            top: new_top,
            reason: "the copy would overlap its source".into(),
        });
    }
    translate(p, i128::from(delta))
}

/// Offset between a pattern and a verified copy of it.
pub fn offset_of(p: &Pattern, q: &Pattern) -> Result<u64> {
    Ok(CopyRelation::new(p.clone(), q.clone())?.offset)
}

/// `x ⊕ y`, defined when the top of `x` immediately precedes `y`.
pub fn join(x: &Pattern, y: &Pattern) -> Result<Pattern> {
    let pred = dyck_pred(DyckNumber::new(y.first()).expect("pattern terms are members"))?.get();
    if pred != x.top() {
        return Err(DyckError::NotAdjacent {
            top: x.top(),
            first: y.first(),
        });
    }
    let level = x.level();
    if y.level() != level {
        return Err(DyckError::MixedLevels {
            first: level,
            other: y.level(),
        });
    }
    let mut terms = Vec::with_capacity(x.count() + y.count());
    terms.extend_from_slice(&x.terms);
    terms.extend_from_slice(&y.terms);
    Ok(Pattern { terms })
}

/// `p^k`: the `k` adjacent copies ending at `p`, each one pattern length
/// below the next.
pub fn power(p: &Pattern, k: u32) -> Result<Pattern> {
    if k < 2 {
        return Err(DyckError::Domain(format!("power needs k >= 2, got {k}")));
    }
    let len = i128::from(pattern_len(p)?);
    let mut acc = translate(p, -(i128::from(k - 1)) * len)?;
    for j in (0..k - 1).rev() {
        let next = if j == 0 {
            p.clone()
        } else {
            translate(p, -(i128::from(j)) * len)?
        };
        acc = join(&acc, &next).map_err(|e| DyckError::InvalidCopy {
            top: next.top(),
            reason: e.to_string(),
        })?;
    }
    Ok(acc)
}

/// An odd level is its predecessor level doubled:
/// `E_n = π_{n-1}(M_n)^2`.
pub fn verify_eq1(n: u32) -> VerificationOutcome {
    const NAME: &str = "eq1";
    VerificationOutcome::timed(|| {
        if n < 5 || n.is_multiple_of(2) {
            return VerificationOutcome::fail(
                NAME,
                n,
                Counterexample::new(n as u64, "odd n >= 5", n),
            );
        }
        let result = (|| -> Result<std::result::Result<(), Counterexample>> {
            let level = level_structural(n)?;
            let base = level_pattern(n - 1)?;
            let doubled = power(&copy_at(&base, mersenne(n))?, 2)?;
            Ok(compare_terms(doubled.terms(), &level.terms))
        })();
        outcome_from(NAME, n, result)
    })
}

/// The part of an even level above the core is a tripled copy of level
/// `n - 2`: `π_{n-2}(M_n)^3`.
pub fn verify_eq2(n: u32) -> VerificationOutcome {
    const NAME: &str = "eq2";
    VerificationOutcome::timed(|| {
        if n < 6 || n % 2 == 1 {
            return VerificationOutcome::fail(
                NAME,
                n,
                Counterexample::new(n as u64, "even n >= 6", n),
            );
        }
        let result = (|| -> Result<std::result::Result<(), Counterexample>> {
            let level = level_structural(n)?;
            let core_top = mersenne(n - 1) + (1 << (n - 3));
            let split = level.terms.partition_point(|&t| t <= core_top);
            let tail = &level.terms[split..];
            let base = level_pattern(n - 2)?;
            let tripled = power(&copy_at(&base, mersenne(n))?, 3)?;
            Ok(compare_terms(tripled.terms(), tail))
        })();
        outcome_from(NAME, n, result)
    })
}

fn outcome_from(
    name: &str,
    n: u32,
    result: Result<std::result::Result<(), Counterexample>>,
) -> VerificationOutcome {
    match result {
        Ok(r) => VerificationOutcome::from_result(name, n, r),
        Err(e) => VerificationOutcome::fail(
            name,
            n,
            Counterexample::new(n as u64, "construction succeeds", e),
        ),
    }
}
