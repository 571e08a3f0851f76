//! Cores `μ_n`: the initial segment of an even level `n`, up to the senior
//! term `M_{n-1} + 2^(n-3)`. A core is what survives of level `n - 2` after
//! inserting the fragment `00` behind the leading bit of every term.

mod decompose;

use std::fmt;

use crate::dyck::{bit_length, dynamics, is_dyck_number};
use crate::error::{DyckError, Result};
use crate::levels::{level_size, level_structural, mersenne};
use crate::oeis::catalan;

pub use decompose::{decompose, DecompositionExpr, Shape, ShapeLibrary};

/// Two-bit word inserted between the leading one and the remaining bits of
/// a term, lifting it two levels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fragment {
    F00,
    F01,
    F10,
    F11,
}

impl Fragment {
    /// In ascending order of their images.
    pub const ALL: [Fragment; 4] = [Fragment::F00, Fragment::F01, Fragment::F10, Fragment::F11];

    pub fn value(self) -> u64 {
        match self {
            Fragment::F00 => 0,
            Fragment::F01 => 1,
            Fragment::F10 => 2,
            Fragment::F11 => 3,
        }
    }

    /// Shift applied to a term of level `n - 2`:
    /// `2^(n-1) + (f - 1) * 2^(n-3)`.
    pub fn offset(self, n: u32) -> u64 {
        let quarter = 1u64 << (n - 3);
        (1u64 << (n - 1)) + self.value() * quarter - quarter
    }

    /// Image of `t` (binary length `n - 2`) in level `n`, or `None` when the
    /// lifted code violates the suffix-balance property. Only F00 rejects.
    ///
    /// The caller guarantees the binary length of `t`.
    pub(crate) fn lift(self, t: u64, n: u32) -> Option<u64> {
        let image = t + self.offset(n);
        if self == Fragment::F00 {
            let explicit = is_dyck_number(image);
            // The maximal proper suffix of t needs balance >= 2.
            debug_assert_eq!(explicit, dynamics(t) >= 4, "t = {t}, n = {n}");
            if !explicit {
                return None;
            }
        }
        Some(image)
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{:02b}", self.value())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FragmentImage {
    Term(u64),
    Rejected,
}

pub fn fragment_image(t: u64, fragment: Fragment, n: u32) -> Result<FragmentImage> {
    check_even_level(n)?;
    if bit_length(t) != n - 2 {
        return Err(DyckError::LevelMismatch {
            term: t,
            expected: n - 2,
        });
    }
    if !is_dyck_number(t) {
        return Err(DyckError::NotMember(t));
    }
    Ok(match fragment.lift(t, n) {
        Some(v) => FragmentImage::Term(v),
        None => FragmentImage::Rejected,
    })
}

fn check_even_level(n: u32) -> Result<()> {
    if n < 6 || n % 2 == 1 || n > 62 {
        return Err(DyckError::Domain(format!(
            "cores live on even levels 6 <= n <= 62, got {n}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Core {
    pub n: u32,
    pub terms: Vec<u64>,
}

impl Core {
    /// `M_{n-1} + 2^(n-3)`.
    pub fn top(&self) -> u64 {
        core_top(self.n)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value span of one of the four subsegments, `2^(n-5)`.
    pub fn subsegment_len(&self) -> u64 {
        1u64 << (self.n - 5)
    }

    /// Senior values of the four subsegment intervals, lowest first.
    pub fn subsegment_tops(&self) -> [u64; 4] {
        let top = self.top();
        let len = self.subsegment_len();
        [top - 3 * len, top - 2 * len, top - len, top]
    }
}

pub fn core_top(n: u32) -> u64 {
    mersenne(n - 1) + (1u64 << (n - 3))
}

/// F00 survivors of level `n - 2`, lifted into level `n`.
pub fn core(n: u32) -> Result<Core> {
    check_even_level(n)?;
    let base = level_structural(n - 2)?;
    let terms = base
        .terms
        .iter()
        .filter_map(|&t| Fragment::F00.lift(t, n))
        .collect();
    Ok(Core { n, terms })
}

/// `#μ_n = #E_{n-2} - Cat(n/2 - 1)`.
pub fn core_size(n: u32) -> Result<u128> {
    check_even_level(n)?;
    Ok(level_size(n - 2) - catalan(u64::from(n / 2 - 1)))
}

/// Terms of level `n - 2` whose F00 image is rejected.
pub fn rejected_terms(n: u32) -> Result<Vec<u64>> {
    check_even_level(n)?;
    let base = level_structural(n - 2)?;
    Ok(base
        .terms
        .into_iter()
        .filter(|&t| Fragment::F00.lift(t, n).is_none())
        .collect())
}

/// The four value intervals of length `2^(n-5)` partitioning the core.
pub fn subsegments(c: &Core) -> Result<[Vec<u64>; 4]> {
    if c.n < 10 {
        return Err(DyckError::Domain(format!(
            "subsegments need n >= 10, got {}",
            c.n
        )));
    }
    let tops = c.subsegment_tops();
    let mut parts: [Vec<u64>; 4] = Default::default();
    let mut rest = c.terms.as_slice();
    for (part, top) in parts.iter_mut().zip(tops) {
        let split = rest.partition_point(|&t| t <= top);
        part.extend_from_slice(&rest[..split]);
        rest = &rest[split..];
    }
    debug_assert!(rest.is_empty());
    Ok(parts)
}

/// `μ_6, μ_8, ..., μ_max_n` concatenated.
pub fn core_subsequence(max_n: u32) -> Result<Vec<u64>> {
    check_even_level(max_n)?;
    let mut out = Vec::new();
    for n in (6..=max_n).step_by(2) {
        out.extend(core(n)?.terms);
    }
    Ok(out)
}
