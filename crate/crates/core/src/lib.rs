//! Exact arithmetic invariants of number fields.
//!
//! Starting from a monic irreducible polynomial the library builds the
//! maximal order, decomposes rational primes, forms the integral trace form
//! and computes its rational and p-adic invariants. On top of those it decides
//! weak arithmetic equivalence of two fields, compares the genera of their
//! trace forms and compares normalized local root numbers.

pub mod error;
pub mod exact;
pub mod numberfield;
pub mod quadform;
pub mod parallel;
pub mod report;
pub mod rootnum;
pub mod splitting;
pub mod zeta;

pub use error::{NfError, Result};
