//! Jordan splitting of an integral form over `Z_p`, `p` odd.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{add_row_col, DiagonalForm};
use crate::error::{domain, NfError, Result};
use crate::exact::integer::{is_prime_u64, legendre, split_valuation};
use crate::exact::BigRat;
use crate::numberfield::GramMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnitClass {
    Square,
    Nonsquare,
}

impl UnitClass {
    fn from_legendre(l: i8) -> Self {
        if l == 1 {
            UnitClass::Square
        } else {
            UnitClass::Nonsquare
        }
    }

    fn times(self, other: UnitClass) -> UnitClass {
        if self == other {
            UnitClass::Square
        } else {
            UnitClass::Nonsquare
        }
    }
}

/// `p^valuation` times a unimodular block of the given dimension whose
/// determinant has the given square class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanBlock {
    pub valuation: u32,
    pub dim: usize,
    pub class: UnitClass,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanForm {
    pub p: u64,
    pub unimodular_dim: usize,
    pub unimodular_class: UnitClass,
    pub p_part_dim: usize,
    pub p_part_class: UnitClass,
    /// Blocks of valuation at least two, in increasing valuation.
    pub higher_blocks: Vec<JordanBlock>,
}

impl JordanForm {
    pub fn blocks(&self) -> Vec<JordanBlock> {
        let mut out = Vec::new();
        if self.unimodular_dim > 0 {
            out.push(JordanBlock {
                valuation: 0,
                dim: self.unimodular_dim,
                class: self.unimodular_class,
            });
        }
        if self.p_part_dim > 0 {
            out.push(JordanBlock {
                valuation: 1,
                dim: self.p_part_dim,
                class: self.p_part_class,
            });
        }
        out.extend(self.higher_blocks.iter().cloned());
        out
    }

    pub fn dim(&self) -> usize {
        self.blocks().iter().map(|b| b.dim).sum()
    }

    /// Largest valuation occurring.
    pub fn max_valuation(&self) -> u32 {
        self.blocks().iter().map(|b| b.valuation).max().unwrap_or(0)
    }

    /// Smallest positive quadratic nonresidue modulo `p`.
    pub fn least_nonresidue(&self) -> u64 {
        (2..self.p).find(|&a| legendre(&BigInt::from(a), self.p) == -1).unwrap()
    }

    fn block_units(&self, b: &JordanBlock) -> Vec<u64> {
        let mut u = vec![1u64; b.dim];
        if b.class == UnitClass::Nonsquare {
            u[b.dim - 1] = self.least_nonresidue();
        }
        u
    }

    /// Canonical diagonal representative over `Z_p`.
    pub fn diagonal(&self) -> DiagonalForm {
        let pb = BigInt::from(self.p);
        let mut entries = Vec::new();
        for b in self.blocks() {
            let scale = pb.pow(b.valuation);
            for u in self.block_units(&b) {
                entries.push(BigRat::from_integer(&scale * u));
            }
        }
        DiagonalForm::new(entries).expect("canonical entries are nonzero")
    }

    /// Flattened display, e.g. `<1,3,7,21>`.
    pub fn flat(&self) -> String {
        let s: Vec<String> = self.diagonal().entries().iter().map(|a| a.to_string()).collect();
        format!("<{}>", s.join(","))
    }
}

impl fmt::Display for JordanForm {
    /// Block display, e.g. `<1,3> (+) 7<1,3>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let units: Vec<String> = self.block_units(b).iter().map(u64::to_string).collect();
                let scale = if b.valuation == 0 {
                    String::new()
                } else {
                    BigInt::from(self.p).pow(b.valuation).to_string()
                };
                format!("{scale}<{}>", units.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" (+) "))
    }
}

/// Valuation of a rational whose denominator is prime to `p`; `None` at zero.
fn val(a: &BigRat, p: u64) -> Option<u32> {
    if a.is_zero() {
        None
    } else {
        Some(split_valuation(a.numer(), p).0)
    }
}

/// Jordan decomposition of `G` over `Z_p` for an odd prime `p`, by pivoting
/// on an entry of minimal valuation.
pub fn jordan_form_odd(g: &GramMatrix, p: u64) -> Result<JordanForm> {
    if p == 2 {
        return Err(NfError::Unsupported("dyadic Jordan decomposition".into()));
    }
    if !is_prime_u64(p) {
        return domain(format!("{p} is not an odd prime"));
    }
    let mut m = g.to_rational();
    let n = m.len();
    let mut diag: Vec<(u32, BigInt)> = Vec::with_capacity(n);
    for i in 0..n {
        // minimal valuation over the remaining block; a diagonal entry wins
        // ties, then the lowest row index
        let mut best: Option<(u32, bool, usize, usize)> = None;
        for r in i..n {
            for c in r..n {
                if let Some(v) = val(&m[r][c], p) {
                    let key = (v, r != c, r, c);
                    if best.is_none_or(|b| key < b) {
                        best = Some(key);
                    }
                }
            }
        }
        let Some((v, _, r, c)) = best else {
            return domain("Gram matrix is singular");
        };
        if r != c {
            // every diagonal entry has valuation above v; e_r + e_c attains it
            add_row_col(&mut m, r, c);
        }
        if r != i {
            m.swap(i, r);
            for row in m.iter_mut() {
                row.swap(i, r);
            }
        }
        debug_assert_eq!(val(&m[i][i], p), Some(v));
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
        let (v, u) = split_valuation(piv.numer(), p);
        let unit = u * piv.denom();
        diag.push((v, unit));
    }
    let mut blocks: Vec<JordanBlock> = Vec::new();
    diag.sort_by_key(|(v, _)| *v);
    for (v, u) in diag {
        let class = UnitClass::from_legendre(legendre(&u.mod_floor(&BigInt::from(p)), p));
        match blocks.last_mut() {
            Some(b) if b.valuation == v => {
                b.dim += 1;
                b.class = b.class.times(class);
            }
            _ => blocks.push(JordanBlock {
                valuation: v,
                dim: 1,
                class,
            }),
        }
    }
    let take = |v: u32| {
        blocks
            .iter()
            .find(|b| b.valuation == v)
            .map_or((0, UnitClass::Square), |b| (b.dim, b.class))
    };
    let (unimodular_dim, unimodular_class) = take(0);
    let (p_part_dim, p_part_class) = take(1);
    let higher_blocks = blocks.iter().filter(|b| b.valuation >= 2).cloned().collect();
    Ok(JordanForm {
        p,
        unimodular_dim,
        unimodular_class,
        p_part_dim,
        p_part_class,
        higher_blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::hasse_invariant;
    use crate::splitting::Place;

    #[test]
    fn diagonal_input() {
        let j = jordan_form_odd(&GramMatrix::diagonal(&[1, 3, 7, 21]), 7).unwrap();
        assert_eq!(j.unimodular_dim, 2);
        assert_eq!(j.unimodular_class, UnitClass::Nonsquare);
        assert_eq!(j.p_part_class, UnitClass::Nonsquare);
        assert_eq!(j.to_string(), "<1,3> (+) 7<1,3>");
        assert_eq!(j.flat(), "<1,3,7,21>");
        let j = jordan_form_odd(&GramMatrix::diagonal(&[2, 5, 49, 3 * 7]), 7).unwrap();
        assert_eq!(j.to_string(), "<1,3> (+) 7<3> (+) 49<1>");
        assert_eq!(j.max_valuation(), 2);
    }

    #[test]
    fn off_diagonal_pivot() {
        // hyperbolic plane scaled by 5 on top of a unit
        let g = GramMatrix::from_i64(&[&[5, 0, 0], &[0, 0, 1], &[0, 1, 0]]).unwrap();
        let j = jordan_form_odd(&g, 5).unwrap();
        assert_eq!((j.unimodular_dim, j.p_part_dim), (2, 1));
        // H has determinant -1, a square mod 5
        assert_eq!(j.unimodular_class, UnitClass::Square);
        let h = hasse_invariant(&super::super::diagonalize_rational(&g).unwrap(), Place::Prime(5));
        assert_eq!(h, hasse_invariant(&j.diagonal(), Place::Prime(5)));
    }

    #[test]
    fn rejects_two() {
        assert!(matches!(
            jordan_form_odd(&GramMatrix::identity(2), 2),
            Err(NfError::Unsupported(_))
        ));
        assert!(jordan_form_odd(&GramMatrix::identity(2), 9).is_err());
    }
}
