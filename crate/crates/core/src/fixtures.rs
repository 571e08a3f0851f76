//! Reference data compiled into the crate: the published core-subsequence
//! listing and offline copies of the OEIS b-files used for validation.

use crate::error::Result;
use crate::oeis::{parse_bfile, BFile, SequenceId};

/// The published listing of the core subsequence, as printed.
pub const LISTING_TEXT: &str = include_str!("../data/core_listing.txt");

const BFILES: [(u32, &str); 6] = [
    (36991, include_str!("../data/oeis/b036991.txt")),
    (2054, include_str!("../data/oeis/b002054.txt")),
    (52940, include_str!("../data/oeis/b052940.txt")),
    (290114, include_str!("../data/oeis/b290114.txt")),
    (86224, include_str!("../data/oeis/b086224.txt")),
    (52549, include_str!("../data/oeis/b052549.txt")),
];

/// Terms of the published listing, in order.
///
/// Only maximal digit runs count, so the separators and line breaks of the
/// printed form are irrelevant.
pub fn listing_terms() -> Vec<u64> {
    canonical_terms(LISTING_TEXT)
}

/// Maximal runs of ASCII digits in `text`, parsed as integers.
pub fn canonical_terms(text: &str) -> Vec<u64> {
    text.split(|c: char| !c.is_ascii_digit())
        .filter(|run| !run.is_empty())
        .map(|run| run.parse().expect("digit runs in the listing fit in u64"))
        .collect()
}

/// The bundled b-file for `id`, if one ships with the crate.
pub fn bundled_bfile(id: SequenceId) -> Option<Result<BFile>> {
    BFILES
        .iter()
        .find(|(number, _)| *number == id.number())
        .map(|(_, text)| parse_bfile(text).map(|b| b.with_id(id)))
}

/// Ids of every bundled b-file.
pub fn bundled_ids() -> Vec<SequenceId> {
    BFILES
        .iter()
        .filter_map(|&(number, _)| SequenceId::new(number))
        .collect()
}
