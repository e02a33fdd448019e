//! Dense matrices over the integers, the rationals and prime fields.
//!
//! Matrices are plain `Vec<Vec<T>>` in row-major order.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::integer::{mul_mod, pow_mod};
use super::BigRat;

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<BigRat>>;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(mut m: IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

pub fn rat_det(m: &RatMatrix) -> BigRat {
    let n = m.len();
    let mut a = m.clone();
    let mut det = BigRat::one();
    for k in 0..n {
        let Some(r) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigRat::zero();
        };
        if r != k {
            a.swap(k, r);
            det = -det;
        }
        let piv = a[k][k].clone();
        det *= &piv;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    det
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn rat_inverse(m: &RatMatrix) -> Option<RatMatrix> {
    let n = m.len();
    let mut a: RatMatrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }));
            r
        })
        .collect();
    for k in 0..n {
        let r = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(k, r);
        let piv = a[k][k].clone();
        for v in a[k].iter_mut() {
            *v /= &piv;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..2 * n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Row vector times matrix.
pub fn rat_vec_mul(v: &[BigRat], m: &RatMatrix) -> Vec<BigRat> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols)
        .map(|j| {
            v.iter()
                .zip(m)
                .filter(|(a, _)| !a.is_zero())
                .fold(BigRat::zero(), |acc, (a, row)| acc + a * &row[j])
        })
        .collect()
}

pub fn rat_mat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    a.iter().map(|row| rat_vec_mul(row, b)).collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Hermite normal form of the row lattice spanned by `rows` (all rows of
/// length `n`, full rank `n` assumed). The result is lower triangular: row `i`
/// has its last nonzero entry in column `i`, that entry is positive, and the
/// entries below it in the same column are reduced into `[0, pivot)`.
pub fn hnf_lower(rows: &[Vec<BigInt>], n: usize) -> Option<IntMatrix> {
    let mut work: Vec<Vec<BigInt>> = rows.iter().filter(|r| r.iter().any(|c| !c.is_zero())).cloned().collect();
    let mut basis: Vec<Option<Vec<BigInt>>> = vec![None; n];
    for col in (0..n).rev() {
        // gcd-combine all rows with a nonzero entry in `col`
        let mut pivot: Option<Vec<BigInt>> = None;
        let mut rest = Vec::with_capacity(work.len());
        for row in work.drain(..) {
            if row[col].is_zero() {
                rest.push(row);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(row),
                Some(p) => {
                    let a = &p[col];
                    let b = &row[col];
                    let eg = a.extended_gcd(b);
                    let (g, x, y) = (eg.gcd, eg.x, eg.y);
                    let ag = a / &g;
                    let bg = b / &g;
                    let new_p: Vec<BigInt> = p.iter().zip(&row).map(|(u, v)| &x * u + &y * v).collect();
                    let other: Vec<BigInt> = p.iter().zip(&row).map(|(u, v)| &bg * u - &ag * v).collect();
                    debug_assert!(other[col].is_zero());
                    if other.iter().any(|c| !c.is_zero()) {
                        rest.push(other);
                    }
                    pivot = Some(new_p);
                }
            }
        }
        work = rest;
        let mut p = pivot?;
        if p[col].is_negative() {
            p.iter_mut().for_each(|c| *c = -&*c);
        }
        basis[col] = Some(p);
    }
    let mut out: IntMatrix = basis.into_iter().map(|r| r.unwrap()).collect();
    // reduce entries below each pivot
    for r in 1..n {
        for col in (0..r).rev() {
            let piv = out[col][col].clone();
            let q = out[r][col].div_floor(&piv);
            if !q.is_zero() {
                let sub: Vec<BigInt> = out[col].iter().map(|c| c * &q).collect();
                for (a, b) in out[r].iter_mut().zip(sub) {
                    *a -= b;
                }
            }
        }
    }
    Some(out)
}

/// HNF of a rational row lattice, returned as rationals.
pub fn hnf_rational(rows: &[Vec<BigRat>], n: usize) -> Option<RatMatrix> {
    let den = rows
        .iter()
        .flatten()
        .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|c| (c * &den).to_integer()).collect())
        .collect();
    let h = hnf_lower(&ints, n)?;
    let d = BigRat::from_integer(den);
    Some(
        h.into_iter()
            .map(|r| r.into_iter().map(|c| BigRat::from_integer(c) / &d).collect())
            .collect(),
    )
}

/// Linear algebra over the prime field with `p` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        Fp { p }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a as u128 + b as u128;
        (s % self.p as u128) as u64
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        mul_mod(a, b, self.p)
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    pub fn from_big(&self, a: &BigInt) -> u64 {
        super::integer::mod_u64(a, self.p)
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&self, m: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(k) = (r..rows).find(|&k| m[k][c] != 0) else {
                continue;
            };
            m.swap(r, k);
            let inv = self.inv(m[r][c]);
            for v in m[r].iter_mut() {
                *v = self.mul(*v, inv);
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        let t = self.mul(f, m[r][j]);
                        m[i][j] = self.sub(m[i][j], t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        pivots
    }

    /// Basis of `{v : v * M = 0}` (left kernel), `M` given by rows.
    pub fn left_kernel(&self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        // kernel of M^T
        let mut t: Vec<Vec<u64>> = (0..cols).map(|j| (0..rows).map(|i| m[i][j]).collect()).collect();
        self.right_kernel_of(&mut t, rows)
    }

    /// Basis of `{v : M v = 0}` for `M` with `width` columns.
    pub fn right_kernel(&self, m: &[Vec<u64>], width: usize) -> Vec<Vec<u64>> {
        let mut t = m.to_vec();
        self.right_kernel_of(&mut t, width)
    }

    fn right_kernel_of(&self, m: &mut Vec<Vec<u64>>, width: usize) -> Vec<Vec<u64>> {
        let pivots = if m.is_empty() { Vec::new() } else { self.rref(m) };
        let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; width];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = self.neg(m[r][f]);
                }
                v
            })
            .collect()
    }

    pub fn rank(&self, m: &[Vec<u64>]) -> usize {
        let mut t = m.to_vec();
        if t.is_empty() {
            return 0;
        }
        self.rref(&mut t).len()
    }
}
