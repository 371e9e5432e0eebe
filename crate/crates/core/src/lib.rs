//! Exact enumeration of the nonnegative integers that are not of the form
//! `a·x + b·y` with `x, y ≥ 0`, for coprime positive `a` and `b`.
//!
//! The gap set is produced from an explicit closed-form description of the
//! representable numbers up to `a⌊b/2⌋ + b⌊a/2⌋` ([`closed_form`]). A
//! second construction through three-variable solution sets
//! ([`proof_machinery`]) and an independent sieve and residue scan
//! ([`oracle`]) exist to cross-check it. [`gauss`] covers the companion
//! floor-sum identity for odd primes.
//!
//! ```
//! use numerus::{closed_form, CoprimePair};
//!
//! let pair = CoprimePair::new(7, 5).unwrap();
//! let gaps = closed_form::gap_set(&pair);
//! assert_eq!(gaps.gaps(), &[1, 2, 3, 4, 6, 8, 9, 11, 13, 16, 18, 23]);
//! assert_eq!(gaps.max(), pair.frobenius_number());
//! ```

pub mod cli;
pub mod closed_form;
pub mod error;
pub mod gauss;
pub mod oracle;
pub mod pair;
pub mod proof_machinery;
pub mod verify;

pub use error::{Error, Result};
pub use pair::{frobenius_number, gap_count, theorem_bound, CoprimePair, GapSet, Representation};
