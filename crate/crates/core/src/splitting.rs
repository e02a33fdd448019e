//! Decomposition of rational primes and of the infinite place.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, NfError, Result};
use crate::exact::fp::{factor_mod_p, FpPoly};
use crate::exact::integer::is_prime_u64;
use crate::exact::matrix::Fp;
use crate::numberfield::NumberField;

/// A place of `Q`. The infinite place is written `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinite,
    Prime(u64),
}

impl Place {
    pub fn prime(self) -> Option<u64> {
        match self {
            Place::Infinite => None,
            Place::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinite => write!(f, "-1"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = NfError;

    fn from_str(s: &str) -> Result<Place> {
        let s = s.trim();
        if s == "-1" {
            return Ok(Place::Infinite);
        }
        let p: u64 = s
            .parse()
            .map_err(|_| NfError::Domain(format!("not a place: {s}")))?;
        if !is_prime_u64(p) {
            return domain(format!("{p} is not prime"));
        }
        Ok(Place::Prime(p))
    }
}

impl TryFrom<&BigInt> for Place {
    type Error = NfError;

    fn try_from(p: &BigInt) -> Result<Place> {
        p.to_u64()
            .map(Place::Prime)
            .ok_or_else(|| NfError::PrimeTooLarge(p.to_string()))
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Place {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Place, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Ramification index and residue degree of one prime above `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EfPair {
    pub e: u32,
    pub f: u32,
}

/// The primes above a place, sorted by residue degree then ramification
/// index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeSplitting {
    pub place: Place,
    pub pairs: Vec<EfPair>,
}

impl PrimeSplitting {
    fn new(place: Place, mut pairs: Vec<EfPair>) -> Self {
        pairs.sort_by_key(|q| (q.f, q.e));
        PrimeSplitting { place, pairs }
    }

    pub fn is_ramified(&self) -> bool {
        match self.place {
            Place::Infinite => self.pairs.iter().any(|q| q.f == 2),
            Place::Prime(_) => self.pairs.iter().any(|q| q.e > 1),
        }
    }

    pub fn is_tame(&self) -> bool {
        match self.place {
            Place::Infinite => true,
            Place::Prime(p) => self.pairs.iter().all(|q| u64::from(q.e) % p != 0),
        }
    }

    /// `sum e_i f_i`.
    pub fn degree(&self) -> u32 {
        self.pairs.iter().map(|q| q.e * q.f).sum()
    }

    /// `f_p = sum f_i`.
    pub fn residue_sum(&self) -> u32 {
        self.pairs.iter().map(|q| q.f).sum()
    }

    pub fn decomposition_type(&self) -> DecompositionType {
        let mut fs: Vec<u32> = self.pairs.iter().map(|q| q.f).collect();
        fs.sort_unstable();
        DecompositionType { fs }
    }

    /// `(f_1,...,f_g) (e_1,...,e_g)`.
    pub fn table_row(&self) -> String {
        let join = |v: Vec<u32>| v.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        format!(
            "({}) ({})",
            join(self.pairs.iter().map(|q| q.f).collect()),
            join(self.pairs.iter().map(|q| q.e).collect())
        )
    }
}

impl fmt::Display for PrimeSplitting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairs.iter().map(|q| format!("({},{})", q.e, q.f)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Sorted multiset of residue degrees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DecompositionType {
    pub fs: Vec<u32>,
}

impl fmt::Display for DecompositionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.fs.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        domain(format!("{p} is not prime"))
    }
}

/// Splitting of `p` from the factorization of the defining polynomial modulo
/// `p`. Only valid when `p` does not divide the index.
pub fn split_prime_dedekind(k: &NumberField, p: u64) -> Result<PrimeSplitting> {
    check_prime(p)?;
    let fp = Fp::new(p);
    let pairs = factor_mod_p(&FpPoly::from_int(k.defining_poly(), &fp), &fp)
        .into_iter()
        .map(|(g, m)| EfPair {
            e: m,
            f: g.deg() as u32,
        })
        .collect();
    Ok(PrimeSplitting::new(Place::Prime(p), pairs))
}

/// Splitting of `p` from the local factors of `O_K / p O_K`: a factor of
/// dimension `d` with residue field of degree `f` comes from a prime with
/// `e = d / f`.
pub fn split_prime_order(k: &NumberField, p: u64) -> Result<PrimeSplitting> {
    check_prime(p)?;
    let pairs = k
        .order()
        .mod_p(p)
        .local_components()
        .into_iter()
        .map(|c| {
            if c.dim % c.residue_degree != 0 {
                return Err(NfError::Internal(format!(
                    "local factor of dimension {} has residue degree {}",
                    c.dim, c.residue_degree
                )));
            }
            Ok(EfPair {
                e: (c.dim / c.residue_degree) as u32,
                f: c.residue_degree as u32,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PrimeSplitting::new(Place::Prime(p), pairs))
}

/// Decomposition of a rational prime in the maximal order.
pub fn split_prime(k: &NumberField, p: u64) -> Result<PrimeSplitting> {
    check_prime(p)?;
    let pb = BigInt::from(p);
    if (k.index() % &pb) != BigInt::from(0) {
        split_prime_dedekind(k, p)
    } else {
        split_prime_order(k, p)
    }
}

/// Decomposition at any place; at `-1` the pairs are `(1,1)` per real and
/// `(1,2)` per complex embedding pair.
pub fn split_place(k: &NumberField, place: Place) -> Result<PrimeSplitting> {
    match place {
        Place::Prime(p) => split_prime(k, p),
        Place::Infinite => {
            let (r1, r2) = k.signature();
            let mut pairs = vec![EfPair { e: 1, f: 1 }; r1];
            pairs.extend(vec![EfPair { e: 1, f: 2 }; r2]);
            Ok(PrimeSplitting::new(Place::Infinite, pairs))
        }
    }
}

pub fn decomposition_type(k: &NumberField, place: Place) -> Result<DecompositionType> {
    Ok(split_place(k, place)?.decomposition_type())
}

/// Primes dividing the field discriminant.
pub fn ramified_primes(k: &NumberField) -> Result<Vec<u64>> {
    k.disc_factorization()
        .primes()
        .map(|p| p.to_u64().ok_or_else(|| NfError::PrimeTooLarge(p.to_string())))
        .collect()
}

pub fn is_tame(k: &NumberField, p: u64) -> Result<bool> {
    Ok(split_prime(k, p)?.is_tame())
}

/// Tame at every ramified prime.
pub fn is_tame_field(k: &NumberField) -> Result<bool> {
    for p in ramified_primes(k)? {
        // only primes dividing the degree can be wild
        if p <= k.degree() as u64 && !is_tame(k, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::IntPoly;

    fn field(c: &[i64]) -> NumberField {
        NumberField::new(IntPoly::from_i64(c)).unwrap()
    }

    fn pairs(s: &PrimeSplitting) -> Vec<(u32, u32)> {
        s.pairs.iter().map(|q| (q.e, q.f)).collect()
    }

    #[test]
    fn quartic_pair_table() {
        let k = field(&[152, 68, 4, -1, 1]);
        let l = field(&[121, -21, -15, 0, 1]);
        let at = |f: &NumberField, p| split_prime(f, p).unwrap();
        assert_eq!(pairs(&at(&k, 7)), vec![(1, 1), (3, 1)]);
        assert_eq!(pairs(&at(&l, 7)), vec![(2, 1), (2, 1)]);
        assert_eq!(at(&k, 7).table_row(), "(1,1) (1,3)");
        assert_eq!(at(&l, 7).table_row(), "(1,1) (2,2)");
        assert_eq!(at(&k, 13).table_row(), "(1,1) (2,2)");
        assert_eq!(decomposition_type(&k, Place::Prime(13)).unwrap().fs, vec![1, 1]);
        assert_eq!(decomposition_type(&k, Place::Infinite).unwrap().fs, vec![2, 2]);
        assert_eq!(ramified_primes(&k).unwrap(), vec![7, 13, 43]);
        assert!(is_tame(&k, 7).unwrap());
        assert!(is_tame_field(&k).unwrap());
    }

    #[test]
    fn index_prime_uses_the_order() {
        let k = field(&[152, 68, 4, -1, 1]);
        // index 8: Dedekind's reading mod 2 is not valid here
        let s = split_prime(&k, 2).unwrap();
        assert_eq!(s.degree(), 4);
        assert!(!s.is_ramified());
    }

    #[test]
    fn gaussian_field() {
        let k = field(&[1, 0, 1]);
        assert_eq!(pairs(&split_prime(&k, 5).unwrap()), vec![(1, 1), (1, 1)]);
        assert_eq!(pairs(&split_prime(&k, 3).unwrap()), vec![(1, 2)]);
        assert_eq!(pairs(&split_prime(&k, 2).unwrap()), vec![(2, 1)]);
        assert_eq!(ramified_primes(&k).unwrap(), vec![2]);
        assert!(!is_tame(&field(&[2, 0, 1]), 2).unwrap());
        assert!(split_prime(&k, 9).is_err());
    }

    #[test]
    fn cubic_disc_49() {
        let k = field(&[-1, -2, 1, 1]);
        assert_eq!(ramified_primes(&k).unwrap(), vec![7]);
        assert_eq!(pairs(&split_prime(&k, 7).unwrap()), vec![(3, 1)]);
        assert!(is_tame_field(&k).unwrap());
        // x^3 - 3x + 1 is wild at 3
        assert!(!is_tame_field(&field(&[1, -3, 0, 1])).unwrap());
    }

    #[test]
    fn place_round_trips() {
        for p in [Place::Infinite, Place::Prime(7)] {
            let s = serde_json::to_string(&p).unwrap();
            assert_eq!(serde_json::from_str::<Place>(&s).unwrap(), p);
        }
        assert_eq!(serde_json::to_string(&Place::Infinite).unwrap(), "\"-1\"");
        assert!("15".parse::<Place>().is_err());
        assert!(Place::Infinite < Place::Prime(2));
    }
}
