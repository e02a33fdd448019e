//! Normalized local root numbers `W_p(rho) / W_p(det rho)` from the trace
//! form: `w_p = h_p(q_K) (2, d)_p` with `d = disc(K)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exact::integer::squarefree_kernel;
use crate::numberfield::NumberField;
use crate::quadform::{hilbert_symbol_int, trace_profile, HasseProfile};
use crate::splitting::{ramified_primes, Place};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalizedRootNumber {
    pub p: u64,
    pub value: i8,
}

fn normalized(profile: &HasseProfile, disc: &BigInt, p: u64) -> Result<i8> {
    let place = Place::Prime(p);
    Ok(profile.get(place) * hilbert_symbol_int(&BigInt::from(2), disc, place)?)
}

pub fn stiefel_whitney_local(k: &NumberField, p: u64) -> Result<NormalizedRootNumber> {
    let profile = trace_profile(k)?;
    Ok(NormalizedRootNumber {
        p,
        value: normalized(&profile, k.disc(), p)?,
    })
}

/// Values at 2 and at every ramified prime; all other primes give `+1`.
pub fn stiefel_whitney_profile(k: &NumberField) -> Result<Vec<NormalizedRootNumber>> {
    let profile = trace_profile(k)?;
    let mut primes = ramified_primes(k)?;
    if !primes.contains(&2) {
        primes.insert(0, 2);
    }
    primes
        .into_iter()
        .map(|p| {
            Ok(NormalizedRootNumber {
                p,
                value: normalized(&profile, k.disc(), p)?,
            })
        })
        .collect()
}

/// The quadratic character attached to `det rho_K`, given by the square
/// class of `disc(K)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DetCharacter {
    /// Squarefree representative of the class of `disc(K)`.
    pub class: BigInt,
}

impl DetCharacter {
    pub fn is_trivial(&self) -> bool {
        self.class == BigInt::from(1)
    }
}

impl fmt::Display for DetCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            write!(f, "trivial")
        } else {
            write!(f, "Q(sqrt({}))", self.class)
        }
    }
}

pub fn det_rho_discriminant(k: &NumberField) -> Result<DetCharacter> {
    Ok(DetCharacter {
        class: squarefree_kernel(k.disc())?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum RootNumberComparison {
    /// Normalized values at each odd prime dividing the common discriminant.
    Compared {
        values: BTreeMap<u64, (i8, i8)>,
        agree: Vec<u64>,
        differ: Vec<u64>,
    },
    /// The discriminants differ, so the determinant factors need not cancel.
    UnequalDiscriminants,
}

impl fmt::Display for RootNumberComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
        match self {
            RootNumberComparison::UnequalDiscriminants => {
                write!(f, "inapplicable (discriminants differ)")
            }
            RootNumberComparison::Compared { differ, .. } if differ.is_empty() => {
                write!(f, "equal at every odd prime")
            }
            RootNumberComparison::Compared { differ, .. } => {
                write!(f, "differ at {{{}}}", set(differ))
            }
        }
    }
}

pub fn compare_root_numbers(k: &NumberField, l: &NumberField) -> Result<RootNumberComparison> {
    if k.disc() != l.disc() {
        return Ok(RootNumberComparison::UnequalDiscriminants);
    }
    let (a, b) = (trace_profile(k)?, trace_profile(l)?);
    let mut values = BTreeMap::new();
    let (mut agree, mut differ) = (Vec::new(), Vec::new());
    for p in ramified_primes(k)?.into_iter().filter(|&p| p != 2) {
        let pair = (normalized(&a, k.disc(), p)?, normalized(&b, l.disc(), p)?);
        values.insert(p, pair);
        if pair.0 == pair.1 {
            agree.push(p);
        } else {
            differ.push(p);
        }
    }
    Ok(RootNumberComparison::Compared { values, agree, differ })
}
