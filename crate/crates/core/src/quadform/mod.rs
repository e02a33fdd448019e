//! Rational and p-adic invariants of quadratic forms.

mod genus;
mod jordan;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, NfError, Result};
use crate::exact::integer::{legendre, split_valuation, squarefree_kernel};
use crate::exact::{factor_integer, BigRat};
use crate::numberfield::GramMatrix;
use crate::splitting::Place;

pub use genus::{same_genus_trace, trace_profile, GenusComparison, Hypothesis};
pub use jordan::{jordan_form_odd, JordanBlock, JordanForm, UnitClass};

/// A diagonal form `<a_1, ..., a_n>` with nonzero rational entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DiagonalForm {
    entries: Vec<BigRat>,
}

impl DiagonalForm {
    pub fn new(entries: Vec<BigRat>) -> Result<Self> {
        if entries.iter().any(|a| a.is_zero()) {
            return domain("diagonal entries must be nonzero");
        }
        Ok(DiagonalForm { entries })
    }

    pub fn from_i64(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&a| BigRat::from_integer(BigInt::from(a))).collect())
    }

    pub fn entries(&self) -> &[BigRat] {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// `(positive, negative)` counts.
    pub fn signature(&self) -> (usize, usize) {
        let pos = self.entries.iter().filter(|a| a.is_positive()).count();
        (pos, self.dim() - pos)
    }

    pub fn det(&self) -> BigRat {
        self.entries.iter().fold(BigRat::from_integer(BigInt::from(1)), |acc, a| acc * a)
    }

    /// Squarefree integer representing the square class of the determinant.
    pub fn det_class(&self) -> Result<BigInt> {
        square_class(&self.det())
    }
}

impl fmt::Display for DiagonalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(BigRat::to_string).collect();
        write!(f, "<{}>", s.join(","))
    }
}

/// Squarefree integer in the square class of a nonzero rational.
pub fn square_class(a: &BigRat) -> Result<BigInt> {
    if a.is_zero() {
        return domain("zero has no square class");
    }
    squarefree_kernel(&(a.numer() * a.denom()))
}

/// Congruent diagonal form over `Q` by symmetric elimination.
pub fn diagonalize_rational(g: &GramMatrix) -> Result<DiagonalForm> {
    let mut m = g.to_rational();
    let n = m.len();
    let mut diag = Vec::with_capacity(n);
    for i in 0..n {
        if m[i][i].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(i, j);
                for row in m.iter_mut() {
                    row.swap(i, j);
                }
            } else if let Some(j) = (i + 1..n).find(|&j| !m[i][j].is_zero()) {
                add_row_col(&mut m, i, j);
            } else {
                return domain("Gram matrix is singular");
            }
        }
        let piv = m[i][i].clone();
        for r in i + 1..n {
            if m[r][i].is_zero() {
                continue;
            }
            let c = &m[r][i] / &piv;
            for k in i..n {
                let t = &c * &m[i][k];
                m[r][k] -= t;
            }
            for k in i..n {
                let t = &c * &m[k][i];
                m[k][r] -= t;
            }
        }
        diag.push(piv);
    }
    DiagonalForm::new(diag)
}

/// Replace basis vector `i` by `e_i + e_j`.
pub(crate) fn add_row_col<T>(m: &mut [Vec<T>], i: usize, j: usize)
where
    T: Clone + for<'a> std::ops::AddAssign<&'a T>,
{
    let row_j = m[j].clone();
    for (a, b) in m[i].iter_mut().zip(&row_j) {
        *a += b;
    }
    for row in m.iter_mut() {
        let b = row[j].clone();
        row[i] += &b;
    }
}

fn rational_to_integer_class(a: &BigRat) -> BigInt {
    a.numer() * a.denom()
}

/// `(-1)^e` for the parity of `e`.
fn sign_pow(e: u64) -> i8 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

fn hilbert_int(a: &BigInt, b: &BigInt, place: Place) -> i8 {
    match place {
        Place::Infinite => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = split_valuation(a, 2);
            let (beta, v) = split_valuation(b, 2);
            let m8 = |x: &BigInt| x.mod_floor(&BigInt::from(8)).to_u64().unwrap();
            let (u, v) = (m8(&u), m8(&v));
            let eps = |x: u64| ((x - 1) / 2) % 2;
            let omega = |x: u64| ((x * x - 1) / 8) % 2;
            sign_pow(eps(u) * eps(v) + u64::from(alpha) * omega(v) + u64::from(beta) * omega(u))
        }
        Place::Prime(p) => {
            let (alpha, u) = split_valuation(a, p);
            let (beta, v) = split_valuation(b, p);
            let eps = (p - 1) / 2;
            let mut s = sign_pow(u64::from(alpha) * u64::from(beta) * eps);
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&v, p);
            }
            s
        }
    }
}

/// The Hilbert symbol `(a, b)_p`, with `p = -1` the real place.
pub fn hilbert_symbol(a: &BigRat, b: &BigRat, place: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return domain("Hilbert symbol of zero");
    }
    Ok(hilbert_int(
        &rational_to_integer_class(a),
        &rational_to_integer_class(b),
        place,
    ))
}

pub fn hilbert_symbol_int(a: &BigInt, b: &BigInt, place: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return domain("Hilbert symbol of zero");
    }
    Ok(hilbert_int(a, b, place))
}

/// `h_p = prod_{i<j} (a_i, a_j)_p`.
pub fn hasse_invariant(d: &DiagonalForm, place: Place) -> i8 {
    let ints: Vec<BigInt> = d.entries.iter().map(rational_to_integer_class).collect();
    let mut h = 1;
    for i in 0..ints.len() {
        for j in i + 1..ints.len() {
            h *= hilbert_int(&ints[i], &ints[j], place);
        }
    }
    h
}

/// Local invariants of a nondegenerate rational form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseProfile {
    /// `h_p` on a set of places containing every `p` with `h_p = -1`,
    /// together with `2` and `-1`.
    pub hasse: BTreeMap<Place, i8>,
    pub det_class: BigInt,
    pub signature: (usize, usize),
}

impl HasseProfile {
    /// Profile of a diagonal form; the support comes from factoring the
    /// entries.
    pub fn of_diagonal(d: &DiagonalForm) -> Result<Self> {
        let mut primes = vec![2u64];
        for a in d.entries() {
            for part in [a.numer(), a.denom()] {
                for p in factor_integer(part)?.primes() {
                    primes.push(p.to_u64().ok_or_else(|| NfError::PrimeTooLarge(p.to_string()))?);
                }
            }
        }
        Self::with_primes(d, &primes)
    }

    /// Profile of an integral Gram matrix. Off `2 det` the form is unimodular
    /// at odd `p`, so `h_p = +1` there.
    pub fn of_gram(g: &GramMatrix) -> Result<Self> {
        let det = g.det();
        let mut primes = vec![2u64];
        for p in factor_integer(&det)?.primes() {
            primes.push(p.to_u64().ok_or_else(|| NfError::PrimeTooLarge(p.to_string()))?);
        }
        Self::with_primes(&diagonalize_rational(g)?, &primes)
    }

    /// Profile of an integral Gram matrix whose determinant is divisible only
    /// by the given primes.
    pub fn of_gram_with_primes(g: &GramMatrix, primes: &[u64]) -> Result<Self> {
        let mut all = vec![2u64];
        all.extend_from_slice(primes);
        Self::with_primes(&diagonalize_rational(g)?, &all)
    }

    fn with_primes(d: &DiagonalForm, primes: &[u64]) -> Result<Self> {
        let mut hasse = BTreeMap::new();
        hasse.insert(Place::Infinite, hasse_invariant(d, Place::Infinite));
        for &p in primes {
            hasse.insert(Place::Prime(p), hasse_invariant(d, Place::Prime(p)));
        }
        Ok(HasseProfile {
            hasse,
            det_class: d.det_class()?,
            signature: d.signature(),
        })
    }

    pub fn get(&self, place: Place) -> i8 {
        self.hasse.get(&place).copied().unwrap_or(1)
    }

    /// Product over all places; `+1` by Hilbert reciprocity.
    pub fn product(&self) -> i8 {
        self.hasse.values().product()
    }

    /// Places where `h_p = -1`.
    pub fn minus_places(&self) -> Vec<Place> {
        self.hasse.iter().filter(|(_, &h)| h == -1).map(|(&p, _)| p).collect()
    }
}

/// Hasse--Minkowski: equal dimension, signature, determinant class and `h_p`
/// at every place.
pub fn rational_equivalent(g1: &GramMatrix, g2: &GramMatrix) -> Result<bool> {
    if g1.dim() != g2.dim() {
        return Ok(false);
    }
    let (a, b) = (HasseProfile::of_gram(g1)?, HasseProfile::of_gram(g2)?);
    Ok(profiles_equivalent(&a, &b))
}

pub fn profiles_equivalent(a: &HasseProfile, b: &HasseProfile) -> bool {
    if a.signature != b.signature || a.det_class != b.det_class {
        return false;
    }
    let places: std::collections::BTreeSet<Place> = a.hasse.keys().chain(b.hasse.keys()).copied().collect();
    places.into_iter().all(|p| a.get(p) == b.get(p))
}

/// Whether the Gram matrix is rationally equivalent to `<1,...,1>`.
pub fn rationally_standard(g: &GramMatrix) -> Result<bool> {
    rational_equivalent(g, &GramMatrix::identity(g.dim()))
}
