//! Levels `E_n`: the Dyck numbers with binary length `n`, all lying in the
//! half-open interval `(M_{n-1}, M_n]` between consecutive Mersenne numbers.
//!
//! Two independent generators are provided. [`level_scan`] tests every odd
//! candidate in the interval and serves as the oracle. [`level_structural`]
//! builds odd levels from two shifted copies of the level below and even
//! levels from the four two-bit fragment images of level `n - 2`.

use crate::cores::Fragment;
use crate::dyck::{bit_length, is_dyck_number, DyckNumber};
use crate::error::{DyckError, Result};
use crate::oeis::a001405;

pub const DEFAULT_SCAN_BOUND: u32 = 24;
pub const DEFAULT_STRUCTURAL_BOUND: u32 = 30;
/// Largest level the structural generator will materialize.
pub const MAX_MATERIALIZED_TERMS: u128 = 1 << 28;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level {
    pub n: u32,
    pub terms: Vec<u64>,
}

impl Level {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn top(&self) -> u64 {
        mersenne(self.n)
    }

    pub fn contains(&self, v: u64) -> bool {
        self.terms.binary_search(&v).is_ok()
    }
}

/// `H_n` together with the two quarter points used by cores and copies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CentralTerms {
    pub n: u32,
    /// Midpoint of the level, `M_n - 2^(n-2)`.
    pub center: u64,
    /// `M_n - 2^(n-3)`.
    pub upper_center: u64,
    /// `M_{n-1} + 2^(n-3)`, the senior term of the core (even `n`).
    pub core_top: u64,
}

/// `2^n - 1`.
pub fn mersenne(n: u32) -> u64 {
    assert!(n <= 64, "M_{n} does not fit in u64");
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Binary length of a term; 0 for 0.
pub fn level_index(t: DyckNumber) -> u32 {
    bit_length(t.get())
}

/// `#E_n = C(n-1, floor((n-1)/2))`.
pub fn level_size(n: u32) -> u128 {
    assert!(n >= 1, "levels start at n = 1");
    a001405(u64::from(n - 1))
}

/// Brute-force level: every odd value of `(M_{n-1}, M_n]` passing the
/// suffix-balance test.
pub fn level_scan(n: u32) -> Result<Level> {
    level_scan_bounded(n, DEFAULT_SCAN_BOUND)
}

pub fn level_scan_bounded(n: u32, bound: u32) -> Result<Level> {
    if n == 0 {
        return Err(DyckError::Domain("levels start at n = 1".into()));
    }
    if n > bound || n > 63 {
        return Err(DyckError::Bound { n, bound });
    }
    let low = mersenne(n - 1) + 1;
    let high = mersenne(n);
    // low is even for n >= 2; level 1 is {1}.
    let start = low | 1;
    let terms = (start..=high)
        .step_by(2)
        .filter(|&v| is_dyck_number(v))
        .collect();
    Ok(Level { n, terms })
}

/// Structural level, built from copies of lower levels.
///
/// Odd `n >= 5`: level `n - 1` shifted by `2^(n-2)` and by `2^(n-1)`.
/// Even `n >= 6`: the images of level `n - 2` under the fragments
/// F00 (with rejection), F01, F10 and F11, which land in ascending order.
pub fn level_structural(n: u32) -> Result<Level> {
    if n == 0 {
        return Err(DyckError::Domain("levels start at n = 1".into()));
    }
    if level_size(n) > MAX_MATERIALIZED_TERMS || n > 62 {
        return Err(DyckError::Bound {
            n,
            bound: max_materializable_level(),
        });
    }
    let terms = match n {
        1 => vec![1],
        2 => vec![3],
        3 => vec![5, 7],
        4 => vec![11, 13, 15],
        _ if n % 2 == 1 => {
            let below = level_structural(n - 1)?;
            let lower = 1u64 << (n - 2);
            let upper = 1u64 << (n - 1);
            let mut terms = Vec::with_capacity(below.len() * 2);
            terms.extend(below.terms.iter().map(|t| t + lower));
            terms.extend(below.terms.iter().map(|t| t + upper));
            terms
        }
        _ => {
            let base = level_structural(n - 2)?;
            let mut terms = Vec::with_capacity(level_size(n) as usize);
            for fragment in Fragment::ALL {
                for &t in &base.terms {
                    if let Some(image) = fragment.lift(t, n) {
                        terms.push(image);
                    }
                }
            }
            terms
        }
    };
    debug_assert!(
        terms.windows(2).all(|w| w[0] < w[1]),
        "fragment images of level {n} collide or are out of order"
    );
    Ok(Level { n, terms })
}

/// Largest `n` accepted by [`level_structural`].
pub fn max_materializable_level() -> u32 {
    (1..=62)
        .take_while(|&n| level_size(n) <= MAX_MATERIALIZED_TERMS)
        .last()
        .unwrap_or(1)
}

pub fn central_terms(n: u32) -> Result<CentralTerms> {
    if !(5..=63).contains(&n) {
        return Err(DyckError::Domain(format!(
            "central terms are defined for 5 <= n <= 63, got {n}"
        )));
    }
    let top = mersenne(n);
    Ok(CentralTerms {
        n,
        center: top - (1 << (n - 2)),
        upper_center: top - (1 << (n - 3)),
        core_top: mersenne(n - 1) + (1 << (n - 3)),
    })
}

/// First `count` terms of A036991, starting at 0.
pub fn stream_terms(count: usize) -> Result<Vec<u64>> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    out.push(0);
    let mut n = 1;
    while out.len() < count {
        let level = level_structural(n)?;
        let wanted = count - out.len();
        out.extend(level.terms.iter().take(wanted));
        n += 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mersenne_examples() {
        assert_eq!(mersenne(0), 0);
        assert_eq!(mersenne(4), 15);
        assert_eq!(mersenne(9), 511);
        assert_eq!(mersenne(64), u64::MAX);
    }

    #[test]
    fn level_index_examples() {
        assert_eq!(level_index(DyckNumber::new(39).unwrap()), 6);
        assert_eq!(level_index(DyckNumber::new(15).unwrap()), 4);
        assert_eq!(level_index(DyckNumber::ZERO), 0);
    }

    #[test]
    fn scanned_levels() {
        assert_eq!(level_scan(1).unwrap().terms, vec![1]);
        assert_eq!(level_scan(4).unwrap().terms, vec![11, 13, 15]);
        assert_eq!(level_scan(5).unwrap().terms, vec![19, 21, 23, 27, 29, 31]);
        assert_eq!(
            level_scan(6).unwrap().terms,
            vec![39, 43, 45, 47, 51, 53, 55, 59, 61, 63]
        );
        assert_eq!(
            level_scan(25).unwrap_err(),
            DyckError::Bound { n: 25, bound: 24 }
        );
        assert!(level_scan(0).is_err());
    }

    #[test]
    fn structural_levels() {
        assert_eq!(
            level_structural(6).unwrap().terms,
            vec![39, 43, 45, 47, 51, 53, 55, 59, 61, 63]
        );
        assert_eq!(
            level_structural(5).unwrap().terms,
            vec![19, 21, 23, 27, 29, 31]
        );
        let eight = level_structural(8).unwrap();
        assert_eq!(eight.len(), 35);
        assert_eq!(
            eight.terms[25..],
            [231, 235, 237, 239, 243, 245, 247, 251, 253, 255]
        );
    }

    #[test]
    fn structural_matches_scan() {
        for n in 1..=18 {
            assert_eq!(
                level_structural(n).unwrap(),
                level_scan(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn level_shape_invariants() {
        for n in 1..=20u32 {
            let level = level_structural(n).unwrap();
            assert_eq!(level.len() as u128, level_size(n));
            assert_eq!(*level.terms.last().unwrap(), mersenne(n));
            assert!(level
                .terms
                .iter()
                .all(|&t| t > mersenne(n - 1) && t <= mersenne(n)));
            if n % 2 == 1 && n >= 5 {
                assert_eq!(level.len(), 2 * level_structural(n - 1).unwrap().len());
            }
        }
    }

    #[test]
    fn level_sizes() {
        assert_eq!(level_size(1), 1);
        assert_eq!(level_size(4), 3);
        assert_eq!(level_size(8), 35);
        let sizes: Vec<u128> = (1..=12).map(level_size).collect();
        assert_eq!(sizes, vec![1, 1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462]);
    }

    #[test]
    fn central_term_examples() {
        let six = central_terms(6).unwrap();
        assert_eq!((six.center, six.upper_center, six.core_top), (47, 55, 39));
        let eight = central_terms(8).unwrap();
        assert_eq!(
            (eight.center, eight.upper_center, eight.core_top),
            (191, 223, 159)
        );
        let ten = central_terms(10).unwrap();
        assert_eq!(
            (ten.center, ten.upper_center, ten.core_top),
            (767, 895, 639)
        );
        assert!(central_terms(4).is_err());
    }

    #[test]
    fn central_term_recurrences() {
        for n in 5..=40 {
            let c = central_terms(n).unwrap();
            assert_eq!(c.center, (mersenne(n - 1) + mersenne(n)) / 2);
            assert_eq!(c.center, mersenne(n - 1) + (1 << (n - 2)));
            let next = central_terms(n + 1).unwrap();
            assert_eq!(next.center, 2 * c.center + 1);
            assert_eq!(next.upper_center, 2 * c.upper_center + 1);
            assert_eq!(next.core_top, 2 * c.core_top + 1);
            if n >= 6 {
                assert!(is_dyck_number(c.center));
                assert!(is_dyck_number(c.upper_center));
                assert!(is_dyck_number(c.core_top));
            }
        }
    }

    #[test]
    fn streamed_prefix() {
        assert_eq!(
            stream_terms(9).unwrap(),
            vec![0, 1, 3, 5, 7, 11, 13, 15, 19]
        );
        assert_eq!(stream_terms(1).unwrap(), vec![0]);
        assert_eq!(*stream_terms(44).unwrap().last().unwrap(), 127);
    }

    #[test]
    fn memory_guard() {
        assert_eq!(max_materializable_level(), 31);
        assert!(matches!(level_structural(32), Err(DyckError::Bound { .. })));
    }
}
