//! Dyck numbers: the terms of OEIS A036991, whose binary codes have at
//! least as many ones as zeros in every suffix.
//!
//! The crate generates the sequence level by level (a level is the set of
//! terms with one binary length), models runs of terms as patterns that are
//! copied, joined and raised to powers, extracts the cores that open every
//! even level, and checks the structural statements about them against a
//! brute-force scan and against OEIS b-files.
//!
//! ```
//! use dyckseq_core::cores::core;
//! use dyckseq_core::levels::level_structural;
//!
//! assert_eq!(level_structural(5).unwrap().terms, vec![19, 21, 23, 27, 29, 31]);
//! assert_eq!(core(8).unwrap().terms, vec![143, 151, 155, 157, 159]);
//! ```

pub mod conjectures;
pub mod cores;
pub mod dyck;
pub mod error;
pub mod fixtures;
pub mod levels;
pub mod oeis;
pub mod patterns;
pub mod report;

pub use dyck::{DyckNumber, TermClass};
pub use error::{DyckError, Result};
pub use report::{Counterexample, VerificationOutcome};
