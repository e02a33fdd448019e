//! Genus comparison of integral trace forms of tame fields.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::HasseProfile;
use crate::error::Result;
use crate::numberfield::NumberField;
use crate::splitting::{is_tame_field, ramified_primes, Place};

/// Hypotheses under which equal `h_p` at odd primes decides the genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Hypothesis {
    BothTame,
    SameDiscriminant,
    SameSignature,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::BothTame => "both fields tame",
            Hypothesis::SameDiscriminant => "equal discriminants",
            Hypothesis::SameSignature => "equal signatures",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GenusComparison {
    Same,
    /// Odd primes at which the Hasse invariants differ.
    Different { primes: Vec<u64> },
    Inapplicable { failed: Vec<Hypothesis> },
}

impl fmt::Display for GenusComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenusComparison::Same => write!(f, "yes"),
            GenusComparison::Different { primes } => {
                let s: Vec<String> = primes.iter().map(u64::to_string).collect();
                write!(f, "no (h_p differs at {{{}}})", s.join(", "))
            }
            GenusComparison::Inapplicable { failed } => {
                let s: Vec<String> = failed.iter().map(Hypothesis::to_string).collect();
                write!(f, "inapplicable (fails: {})", s.join(", "))
            }
        }
    }
}

/// Hasse profile of the integral trace form, supported on `2`, the ramified
/// primes and `-1`.
pub fn trace_profile(k: &NumberField) -> Result<HasseProfile> {
    HasseProfile::of_gram_with_primes(&k.trace_gram(), &ramified_primes(k)?)
}

/// For tame fields with equal discriminant and signature the trace forms lie
/// in one genus exactly when `h_p` agrees at every odd prime.
pub fn same_genus_trace(k: &NumberField, l: &NumberField) -> Result<GenusComparison> {
    let mut failed = Vec::new();
    if !(is_tame_field(k)? && is_tame_field(l)?) {
        failed.push(Hypothesis::BothTame);
    }
    if k.disc() != l.disc() {
        failed.push(Hypothesis::SameDiscriminant);
    }
    if k.signature() != l.signature() {
        failed.push(Hypothesis::SameSignature);
    }
    if !failed.is_empty() {
        return Ok(GenusComparison::Inapplicable { failed });
    }
    let (a, b) = (trace_profile(k)?, trace_profile(l)?);
    let primes: Vec<u64> = ramified_primes(k)?
        .into_iter()
        .filter(|&p| p != 2 && a.get(Place::Prime(p)) != b.get(Place::Prime(p)))
        .collect();
    Ok(if primes.is_empty() {
        GenusComparison::Same
    } else {
        GenusComparison::Different { primes }
    })
}
