use num_bigint::BigInt;

use super::SequenceId;
use crate::error::{DyckError, Result};
use crate::report::{Counterexample, VerificationOutcome};

/// Parsed b-file: `index value` pairs with strictly increasing indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub sequence_id: Option<SequenceId>,
    pub records: Vec<(i64, BigInt)>,
}

impl BFile {
    pub fn with_id(mut self, id: SequenceId) -> Self {
        self.sequence_id = Some(id);
        self
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        self.records
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.records[pos].1)
    }
}

/// Blank lines and lines starting with `#` are skipped; everything else must
/// be two whitespace-separated integers.
pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut records: Vec<(i64, BigInt)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| DyckError::Parse {
            line: line_no,
            message,
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected `index value`, got {line:?}")));
        };
        let index: i64 = index
            .parse()
            .map_err(|_| err(format!("bad index {index:?}")))?;
        let value: BigInt = value
            .parse()
            .map_err(|_| err(format!("bad value {value:?}")))?;
        if let Some((last, _)) = records.last() {
            if index <= *last {
                return Err(err(format!("index {index} does not increase after {last}")));
            }
        }
        records.push((index, value));
    }
    Ok(BFile {
        sequence_id: None,
        records,
    })
}

/// Compares locally computed `(local index, value)` pairs with a b-file,
/// mapping local index `i` to b-file index `i + index_shift`.
///
/// The outcome note records the first and last compared b-file index and
/// the number of compared terms.
pub fn compare(
    name: &str,
    values: &[(i64, u128)],
    bfile: &BFile,
    index_shift: i64,
) -> Result<VerificationOutcome> {
    let mut compared = 0usize;
    let mut first: Option<i64> = None;
    let mut last = 0i64;
    for &(local, value) in values {
        let index = local + index_shift;
        let Some(expected) = bfile.get(index) else {
            continue;
        };
        first.get_or_insert(index);
        last = index;
        compared += 1;
        if *expected != BigInt::from(value) {
            let detail = Counterexample::new(index.max(0) as u64, expected, value);
            return Ok(VerificationOutcome::fail(name, 0, detail)
                .with_note(format!("mismatch at b-file index {index}")));
        }
    }
    match first {
        None => Err(DyckError::NoOverlap),
        Some(first) => Ok(VerificationOutcome::pass(name, 0).with_note(format!(
            "{compared} terms matched, b-file indices {first}..={last}"
        ))),
    }
}
