//! Related OEIS sequences, the cross-sequence identities, and b-file
//! handling for external validation.

mod bfile;
mod fetch;

use std::fmt;
use std::str::FromStr;

use crate::error::{DyckError, Result};

pub use bfile::{compare, parse_bfile, BFile};
pub use fetch::{cache_path, fetch_bfile, read_cached, FetchConfig, DEFAULT_BASE_URL};

/// `C(n, k)`, exact. Panics if the result does not fit in a `u128`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact; dividing out the common factor
        // first keeps the product within range whenever the result is.
        let g = gcd(acc, u128::from(i + 1));
        let factor = u128::from(n - i) / (u128::from(i + 1) / g);
        acc = (acc / g)
            .checked_mul(factor)
            .unwrap_or_else(|| panic!("C({n}, {k}) overflows u128"));
    }
    acc
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `Cat(k) = C(2k, k) / (k + 1)`.
pub fn catalan(k: u64) -> u128 {
    binomial(2 * k, k) / u128::from(k + 1)
}

/// Central binomial coefficients `C(n, floor(n/2))`.
pub fn a001405(n: u64) -> u128 {
    binomial(n, n / 2)
}

/// `C(2k+1, k-1)` for `k >= 1`.
pub fn a002054(k: u64) -> Result<u128> {
    if k == 0 {
        return Err(DyckError::Domain("A002054 is indexed from k = 1".into()));
    }
    Ok(binomial(2 * k + 1, k - 1))
}

/// `2^n - 1`.
pub fn a000225(n: u32) -> Result<u64> {
    if n > 63 {
        return Err(DyckError::Overflow(format!("A000225({n})")));
    }
    Ok((1u64 << n) - 1)
}

/// The four central-term families whose members all sit on level midpoints
/// or quarter points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CentralFamily {
    A052940,
    A290114,
    A086224,
    A052549,
}

impl CentralFamily {
    pub const ALL: [CentralFamily; 4] = [
        CentralFamily::A052940,
        CentralFamily::A290114,
        CentralFamily::A086224,
        CentralFamily::A052549,
    ];

    /// Smallest index at which the closed form applies.
    pub fn first_index(self) -> u32 {
        match self {
            CentralFamily::A052940 => 1,
            CentralFamily::A290114 => 2,
            CentralFamily::A086224 => 0,
            // The published range starts at 0, where 2^(n-1) is not integral.
            CentralFamily::A052549 => 1,
        }
    }

    /// Smallest index whose value is itself a Dyck number.
    pub fn first_member_index(self) -> u32 {
        match self {
            CentralFamily::A052940 => 1,
            CentralFamily::A290114 => 2,
            CentralFamily::A086224 => 1,
            CentralFamily::A052549 => 3,
        }
    }

    pub fn sequence_id(self) -> SequenceId {
        let number = match self {
            CentralFamily::A052940 => 52940,
            CentralFamily::A290114 => 290114,
            CentralFamily::A086224 => 86224,
            CentralFamily::A052549 => 52549,
        };
        SequenceId(number)
    }

    pub fn from_id(id: SequenceId) -> Option<Self> {
        CentralFamily::ALL
            .into_iter()
            .find(|f| f.sequence_id() == id)
    }
}

impl fmt::Display for CentralFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.sequence_id().fmt(f)
    }
}

fn pow2(e: u32) -> Result<u64> {
    1u64.checked_shl(e)
        .filter(|_| e < 64)
        .ok_or_else(|| DyckError::Overflow(format!("2^{e}")))
}

fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b)
        .ok_or_else(|| DyckError::Overflow(format!("{a} + {b}")))
}

/// Every closed form given for `family(n)`; all entries are equal.
///
/// The first entry is the defining form returned by [`central_family`].
pub fn central_family_forms(family: CentralFamily, n: u32) -> Result<Vec<u64>> {
    if n < family.first_index() {
        return Err(DyckError::Domain(format!(
            "{family}({n}) is outside the range n >= {}",
            family.first_index()
        )));
    }
    let forms = match family {
        CentralFamily::A052940 => vec![
            add(a000225(n + 1)?, pow2(n)?)?,
            a000225(n + 2)? - pow2(n)?,
            ((a000225(n + 1)? as u128 + a000225(n + 2)? as u128) / 2) as u64,
        ],
        CentralFamily::A290114 => vec![
            add(a000225(n)?, pow2(n - 1)?)?,
            a000225(n + 1)? - pow2(n - 1)?,
            (a000225(n)? + a000225(n + 1)?) / 2,
        ],
        CentralFamily::A086224 => {
            let outer = central_family(CentralFamily::A052940, n + 1)?;
            vec![
                add(outer, pow2(n)?)?,
                a000225(n + 3)? - pow2(n)?,
                ((outer as u128 + a000225(n + 3)? as u128) / 2) as u64,
            ]
        }
        CentralFamily::A052549 => {
            let outer = central_family(CentralFamily::A052940, n)?;
            vec![
                add(a000225(n + 1)?, pow2(n - 1)?)?,
                (a000225(n + 1)? + outer) / 2,
            ]
        }
    };
    Ok(forms)
}

pub fn central_family(family: CentralFamily, n: u32) -> Result<u64> {
    Ok(central_family_forms(family, n)?[0])
}

/// An OEIS A-number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequenceId(u32);

impl SequenceId {
    pub const A036991: SequenceId = SequenceId(36991);
    pub const A002054: SequenceId = SequenceId(2054);

    pub fn new(number: u32) -> Option<Self> {
        (number <= 999_999).then_some(SequenceId(number))
    }

    pub fn number(self) -> u32 {
        self.0
    }

    /// File name of the b-file resource, e.g. `b002054.txt`.
    pub fn bfile_name(self) -> String {
        format!("b{:06}.txt", self.0)
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{:06}", self.0)
    }
}

impl FromStr for SequenceId {
    type Err = DyckError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || DyckError::Domain(format!("{s:?} is not an A-number like A036991"));
        let digits = s
            .strip_prefix('A')
            .or_else(|| s.strip_prefix('a'))
            .ok_or_else(bad)?;
        if digits.len() != 6 || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        Ok(SequenceId(digits.parse().map_err(|_| bad())?))
    }
}

/// Difference between the OEIS index and the local index for each sequence
/// the crate computes. Never inferred from data.
pub fn index_shift(id: SequenceId) -> Option<i64> {
    // A036991 has OEIS offset 1 while the local stream starts at index 0;
    // the other formulas are already stated in OEIS indexing.
    const TABLE: [(SequenceId, i64); 6] = [
        (SequenceId::A036991, 1),
        (SequenceId::A002054, 0),
        (SequenceId(52940), 0),
        (SequenceId(290114), 0),
        (SequenceId(86224), 0),
        (SequenceId(52549), 0),
    ];
    TABLE
        .iter()
        .find(|(s, _)| *s == id)
        .map(|&(_, shift)| shift)
}

/// Up to `count` locally computed `(local index, value)` pairs for a
/// sequence with an entry in [`index_shift`].
pub fn local_values(id: SequenceId, count: usize) -> Result<Vec<(i64, u128)>> {
    if id == SequenceId::A036991 {
        let terms = crate::levels::stream_terms(count)?;
        return Ok((0..).zip(terms.into_iter().map(u128::from)).collect());
    }
    if id == SequenceId::A002054 {
        // C(2k+1, k-1) stays below 2^128 through k = 63.
        return (1..=count.min(63) as u64)
            .map(|k| Ok((k as i64, a002054(k)?)))
            .collect();
    }
    let family = CentralFamily::from_id(id)
        .ok_or_else(|| DyckError::Domain(format!("no local values for {id}")))?;
    Ok((family.first_index()..)
        .map_while(|n| {
            central_family(family, n)
                .ok()
                .map(|v| (i64::from(n), u128::from(v)))
        })
        .take(count)
        .collect())
}
