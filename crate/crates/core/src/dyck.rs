//! Membership, balance and the successor/predecessor functions over the
//! sequence of Dyck numbers (OEIS A036991).
//!
//! A nonnegative integer is a Dyck number when every suffix of its binary
//! code contains at least as many ones as zeros. The empty code (zero) is a
//! member. The fast path below works on `u64`; [`big`] repeats the same
//! operations over arbitrary precision integers.

use std::fmt;

use crate::error::{DyckError, Result};

/// A term of A036991.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckNumber(u64);

impl DyckNumber {
    pub const ZERO: DyckNumber = DyckNumber(0);

    /// Returns `None` when `v` fails the suffix-balance test.
    pub fn new(v: u64) -> Option<Self> {
        is_dyck_number(v).then_some(DyckNumber(v))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<u64> for DyckNumber {
    type Error = DyckError;

    fn try_from(v: u64) -> Result<Self> {
        DyckNumber::new(v).ok_or(DyckError::NotMember(v))
    }
}

impl From<DyckNumber> for u64 {
    fn from(t: DyckNumber) -> u64 {
        t.0
    }
}

impl fmt::Display for DyckNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Position of a term relative to its neighbours at distance 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TermClass {
    /// 0 and 1.
    Origin,
    /// Neither `t - 2` nor `t + 2` is a member.
    Root,
    TripletLow,
    TripletMiddle,
    TripletTop,
}

impl TermClass {
    pub fn is_triplet(self) -> bool {
        matches!(
            self,
            TermClass::TripletLow | TermClass::TripletMiddle | TermClass::TripletTop
        )
    }
}

impl fmt::Display for TermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TermClass::Origin => "Origin",
            TermClass::Root => "Root",
            TermClass::TripletLow => "TripletLow",
            TermClass::TripletMiddle => "TripletMiddle",
            TermClass::TripletTop => "TripletTop",
        };
        f.write_str(s)
    }
}

/// Right-to-left scan of the binary code, rejecting as soon as the running
/// balance of a suffix goes negative.
pub fn is_dyck_number(v: u64) -> bool {
    let mut balance: i32 = 0;
    let mut rest = v;
    while rest != 0 {
        if rest & 1 == 1 {
            balance += 1;
        } else {
            balance -= 1;
            if balance < 0 {
                return false;
            }
        }
        rest >>= 1;
    }
    true
}

/// Ones minus zeros in the binary code of `v` (no leading zeros).
pub fn dynamics(v: u64) -> i32 {
    if v == 0 {
        return 0;
    }
    let ones = v.count_ones() as i32;
    let len = bit_length(v) as i32;
    ones - (len - ones)
}

/// Number of binary digits of `v`; zero for `v == 0`.
pub fn bit_length(v: u64) -> u32 {
    u64::BITS - v.leading_zeros()
}

/// Smallest member above an arbitrary `v`, described as `(p, c)`: keep the
/// bits of `v` above position `p`, set bit `p`, and fill the bits below it
/// with `c` trailing ones.
///
/// `p` is the lowest zero bit of `v` (or `len`, a new leading bit) for
/// which the kept prefix leaves enough balance to complete.
pub(crate) fn succ_plan(len: u64, bit: impl Fn(u64) -> bool) -> (u64, u64) {
    for p in 0..=len {
        if p < len && bit(p) {
            continue;
        }
        let need = deficit(1, (p + 1..len).map(&bit));
        let c = (p + need).div_ceil(2);
        if c <= p {
            return (p, c);
        }
    }
    unreachable!("a new leading bit always completes")
}

/// Largest member below an arbitrary positive `v`: the lowest one bit `p`
/// of `v` that can be cleared, with every bit below it set.
pub(crate) fn pred_plan(len: u64, bit: impl Fn(u64) -> bool) -> u64 {
    for p in (0..len).filter(|&p| bit(p)) {
        // Clearing the leading bit leaves 2^p - 1, always a member.
        if p + 1 == len || deficit(-1, (p + 1..len).map(&bit)) <= p {
            return p;
        }
    }
    unreachable!("the leading bit can always be cleared")
}

/// How far below zero the running balance dips, starting from `first` and
/// then reading `bits` upward.
fn deficit(first: i64, bits: impl Iterator<Item = bool>) -> u64 {
    let mut balance = first;
    let mut lowest = first.min(0);
    for b in bits {
        balance += if b { 1 } else { -1 };
        lowest = lowest.min(balance);
    }
    lowest.unsigned_abs()
}

/// The next Dyck number after `t`, in `O(bits^2)`.
///
/// Fails only when the successor does not fit in a `u64` (see
/// [`big::dyck_succ`] for the unbounded version).
pub fn dyck_succ(t: DyckNumber) -> Result<DyckNumber> {
    let v = u128::from(t.get());
    let (p, c) = succ_plan(u64::from(bit_length(t.get())), |i| v >> i & 1 == 1);
    let next = (v >> p | 1) << p | ((1u128 << c) - 1);
    u64::try_from(next)
        .map(DyckNumber)
        .map_err(|_| DyckError::Overflow(format!("successor of {t} exceeds u64")))
}

/// The previous Dyck number before `t`; undefined at 0.
pub fn dyck_pred(t: DyckNumber) -> Result<DyckNumber> {
    let v = t.get();
    if v == 0 {
        return Err(DyckError::Domain(
            "the predecessor of 0 is undefined".to_string(),
        ));
    }
    let p = pred_plan(u64::from(bit_length(v)), |i| v >> i & 1 == 1);
    Ok(DyckNumber((v >> p ^ 1) << p | ((1u64 << p) - 1)))
}

/// Closed form for the successor of the Mersenne number `2^n - 1`:
/// `2^n - 1 + 2^ceil(n/2)`.
pub fn succ_of_mersenne(n: u32) -> Result<DyckNumber> {
    if n == 0 {
        return Err(DyckError::Domain("succ_of_mersenne needs n >= 1".into()));
    }
    if n >= 64 {
        return Err(DyckError::Overflow(format!(
            "successor of M_{n} exceeds u64"
        )));
    }
    let mersenne = (1u64 << n) - 1;
    let step = 1u64 << n.div_ceil(2);
    let value = mersenne
        .checked_add(step)
        .ok_or_else(|| DyckError::Overflow(format!("successor of M_{n} exceeds u64")))?;
    Ok(DyckNumber(value))
}

/// Root / triplet position of a term.
pub fn classify(t: DyckNumber) -> TermClass {
    let t = t.get();
    if t <= 1 {
        return TermClass::Origin;
    }
    let member = |d: i64| -> bool {
        let v = t as i128 + d as i128;
        v >= 0 && v <= u64::MAX as i128 && is_dyck_number(v as u64)
    };
    let (below, above) = (member(-2), member(2));
    match (below, above) {
        (false, false) => TermClass::Root,
        (true, true) => TermClass::TripletMiddle,
        (false, true) if member(4) => TermClass::TripletLow,
        (true, false) if member(-4) => TermClass::TripletTop,
        // Members at distance 2 always come in aligned runs of three
        // (8k+3, 8k+5, 8k+7), so a lone neighbour cannot occur.
        _ => unreachable!("{t} has a single neighbour at distance 2"),
    }
}

/// Arbitrary precision versions of the membership and neighbour functions.
///
/// These agree with the `u64` path wherever both are defined and keep
/// working past `2^64 - 1`.
pub mod big {
    pub use num_bigint::BigUint;
    use num_traits::{One, Zero};

    use crate::error::{DyckError, Result};

    pub fn is_dyck_number(v: &BigUint) -> bool {
        let mut balance: i64 = 0;
        for i in 0..v.bits() {
            if v.bit(i) {
                balance += 1;
            } else {
                balance -= 1;
                if balance < 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn dynamics(v: &BigUint) -> i64 {
        let len = v.bits() as i64;
        let ones = v.count_ones() as i64;
        ones - (len - ones)
    }

    /// Smallest member above `t`.
    pub fn dyck_succ(t: &BigUint) -> BigUint {
        let (p, c) = super::succ_plan(t.bits(), |i| t.bit(i));
        ((t >> p) | BigUint::one()) << p | ((BigUint::one() << c) - BigUint::one())
    }

    pub fn dyck_pred(t: &BigUint) -> Result<BigUint> {
        if t.is_zero() {
            return Err(DyckError::Domain(
                "the predecessor of 0 is undefined".to_string(),
            ));
        }
        let p = super::pred_plan(t.bits(), |i| t.bit(i));
        let mut high = t >> p;
        high.set_bit(0, false);
        Ok(high << p | ((BigUint::one() << p) - BigUint::one()))
    }

    pub fn succ_of_mersenne(n: u32) -> Result<BigUint> {
        if n == 0 {
            return Err(DyckError::Domain("succ_of_mersenne needs n >= 1".into()));
        }
        let mersenne = (BigUint::one() << n) - BigUint::one();
        Ok(mersenne + (BigUint::one() << n.div_ceil(2)))
    }
}
