//! Local factors of the Dedekind zeta function and weak arithmetic
//! equivalence.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::numberfield::NumberField;
use crate::splitting::{decomposition_type, ramified_primes, DecompositionType, Place};

/// `L_p(s) = prod (1 - p^(-f_i s))^-1` at a finite place, or the gamma factor
/// `Gamma_R^r1 Gamma_C^r2` at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LocalLFactor {
    Finite { p: u64, fs: Vec<u32> },
    Infinite { r1: usize, r2: usize },
}

pub fn local_l_factor(k: &NumberField, place: Place) -> Result<LocalLFactor> {
    Ok(match place {
        Place::Infinite => {
            let (r1, r2) = k.signature();
            LocalLFactor::Infinite { r1, r2 }
        }
        Place::Prime(p) => LocalLFactor::Finite {
            p,
            fs: decomposition_type(k, place)?.fs,
        },
    })
}

impl fmt::Display for LocalLFactor {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalLFactor::Infinite { r1, r2 } => {
                let mut parts = Vec::new();
                for (name, k) in [("Gamma_R", r1), ("Gamma_C", r2)] {
                    match k {
                        0 => {}
                        1 => parts.push(name.to_string()),
                        k => parts.push(format!("{name}^{k}")),
                    }
                }
                write!(out, "{}", parts.join(" * "))
            }
            LocalLFactor::Finite { p, fs } => {
                let mut parts = Vec::new();
                let mut i = 0;
                while i < fs.len() {
                    let f = fs[i];
                    let mult = fs[i..].iter().take_while(|&&g| g == f).count();
                    let s = if f == 1 { "s".to_string() } else { format!("{f}s") };
                    parts.push(format!("(1 - {p}^-{s})^-{mult}"));
                    i += mult;
                }
                write!(out, "{}", parts.join(" * "))
            }
        }
    }
}

/// Outcome of the weak equivalence test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum EquivalenceWitness {
    /// The places compared, all with equal decomposition types.
    Agree { places: Vec<Place> },
    Degree { left: usize, right: usize },
    Differ {
        place: Place,
        left: DecompositionType,
        right: DecompositionType,
    },
}

impl fmt::Display for EquivalenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceWitness::Agree { places } => {
                let s: Vec<String> = places.iter().map(Place::to_string).collect();
                write!(f, "types agree at {{{}}}", s.join(", "))
            }
            EquivalenceWitness::Degree { left, right } => write!(f, "degrees differ: {left} vs {right}"),
            EquivalenceWitness::Differ { place, left, right } => {
                write!(f, "types differ at {place}: {left} vs {right}")
            }
        }
    }
}

/// Same degree and same decomposition types at every prime ramified in
/// either field and at `-1`.
pub fn weakly_equivalent(k: &NumberField, l: &NumberField) -> Result<(bool, EquivalenceWitness)> {
    if k.degree() != l.degree() {
        return Ok((
            false,
            EquivalenceWitness::Degree {
                left: k.degree(),
                right: l.degree(),
            },
        ));
    }
    let mut places: BTreeSet<Place> = BTreeSet::new();
    places.insert(Place::Infinite);
    for p in ramified_primes(k)?.into_iter().chain(ramified_primes(l)?) {
        places.insert(Place::Prime(p));
    }
    for &place in &places {
        let (a, b) = (decomposition_type(k, place)?, decomposition_type(l, place)?);
        if a != b {
            return Ok((
                false,
                EquivalenceWitness::Differ {
                    place,
                    left: a,
                    right: b,
                },
            ));
        }
    }
    Ok((
        true,
        EquivalenceWitness::Agree {
            places: places.into_iter().collect(),
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::IntPoly;

    fn field(c: &[i64]) -> NumberField {
        NumberField::new(IntPoly::from_i64(c)).unwrap()
    }

    #[test]
    fn factors_render() {
        let k = field(&[152, 68, 4, -1, 1]);
        let f7 = local_l_factor(&k, Place::Prime(7)).unwrap();
        assert_eq!(f7, LocalLFactor::Finite { p: 7, fs: vec![1, 1] });
        assert_eq!(f7.to_string(), "(1 - 7^-s)^-2");
        let inf = local_l_factor(&k, Place::Infinite).unwrap();
        assert_eq!(inf, LocalLFactor::Infinite { r1: 0, r2: 2 });
        assert_eq!(inf.to_string(), "Gamma_C^2");
        let g = field(&[1, 0, 1]);
        assert_eq!(local_l_factor(&g, Place::Prime(3)).unwrap().to_string(), "(1 - 3^-2s)^-1");
        let mixed = LocalLFactor::Finite { p: 5, fs: vec![1, 2, 2] };
        assert_eq!(mixed.to_string(), "(1 - 5^-s)^-1 * (1 - 5^-2s)^-2");
    }

    #[test]
    fn equivalence_examples() {
        let k = field(&[152, 68, 4, -1, 1]);
        let l = field(&[121, -21, -15, 0, 1]);
        let (ok, w) = weakly_equivalent(&k, &l).unwrap();
        assert!(ok);
        assert_eq!(
            w,
            EquivalenceWitness::Agree {
                places: vec![Place::Infinite, Place::Prime(7), Place::Prime(13), Place::Prime(43)]
            }
        );
        let (ok, _) = weakly_equivalent(&field(&[-15, -8, 0, 1]), &field(&[-1, 10, 0, 1])).unwrap();
        assert!(ok);
        let (ok, w) = weakly_equivalent(&field(&[-1, -2, 1, 1]), &field(&[1, -3, 0, 1])).unwrap();
        assert!(!ok);
        assert!(matches!(w, EquivalenceWitness::Differ { place: Place::Prime(3), .. }));
        assert!(weakly_equivalent(&k, &k).unwrap().0);
    }
}
