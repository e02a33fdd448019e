//! Finite-dimensional commutative algebras over a prime field, given by
//! structure constants. Used for `O/pO` and its quotients and components.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::fp::{factor_mod_p, FpPoly};
use crate::exact::matrix::Fp;

#[derive(Debug, Clone)]
pub struct FpAlgebra {
    pub fp: Fp,
    pub dim: usize,
    /// `table[i][j]` is the product of basis elements `i` and `j`.
    pub table: Vec<Vec<Vec<u64>>>,
    pub one: Vec<u64>,
}

/// One local factor of an algebra: its dimension and the degree of its
/// residue field over `F_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalComponent {
    pub dim: usize,
    pub residue_degree: usize,
}

impl FpAlgebra {
    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let fp = &self.fp;
        let mut out = vec![0u64; self.dim];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = fp.mul(x, y);
                for (o, &t) in out.iter_mut().zip(&self.table[i][j]) {
                    if t != 0 {
                        *o = fp.add(*o, fp.mul(xy, t));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.one.clone();
        let mut b = a.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    fn basis_vec(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0u64; self.dim];
        v[i] = 1;
        v
    }

    /// Nilradical as a row-reduced basis: the kernel of `x -> x^(p^j)` with
    /// `p^j >= dim`, which is `F_p`-linear.
    pub fn radical(&self) -> Vec<Vec<u64>> {
        let mut q = self.fp.p;
        while (q as usize) < self.dim {
            q = q.saturating_mul(self.fp.p);
        }
        let rows: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| {
                let mut x = self.basis_vec(i);
                // x^(p^j) by repeated p-th powers
                let mut done = 1u64;
                while done < q {
                    x = self.pow(&x, self.fp.p);
                    done *= self.fp.p;
                }
                x
            })
            .collect();
        let mut ker = self.fp.left_kernel(&rows);
        if !ker.is_empty() {
            self.fp.rref(&mut ker);
        }
        ker
    }

    /// Quotient by an ideal given as row-reduced basis vectors.
    pub fn quotient(&self, ideal: &[Vec<u64>]) -> FpAlgebra {
        let pivots: Vec<usize> = ideal
            .iter()
            .map(|r| r.iter().position(|&c| c != 0).unwrap())
            .collect();
        let keep: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let project = |v: &[u64]| -> Vec<u64> {
            let mut w = v.to_vec();
            for (row, &pc) in ideal.iter().zip(&pivots) {
                let f = w[pc];
                if f != 0 {
                    for (a, &b) in w.iter_mut().zip(row) {
                        *a = self.fp.sub(*a, self.fp.mul(f, b));
                    }
                }
            }
            keep.iter().map(|&c| w[c]).collect()
        };
        let table = keep
            .iter()
            .map(|&a| {
                keep.iter()
                    .map(|&b| project(&self.table[a][b]))
                    .collect()
            })
            .collect();
        FpAlgebra {
            fp: self.fp,
            dim: keep.len(),
            table,
            one: project(&self.one),
        }
    }

    /// The ideal `A e` for an idempotent `e`, as an algebra with identity `e`.
    pub fn component(&self, e: &[u64]) -> FpAlgebra {
        let mut span: Vec<Vec<u64>> = (0..self.dim).map(|i| self.mul(&self.basis_vec(i), e)).collect();
        let pivots = self.fp.rref(&mut span);
        let coords = |v: &[u64]| -> Vec<u64> { pivots.iter().map(|&c| v[c]).collect() };
        let table = span
            .iter()
            .map(|a| span.iter().map(|b| coords(&self.mul(a, b))).collect())
            .collect();
        FpAlgebra {
            fp: self.fp,
            dim: span.len(),
            table,
            one: coords(e),
        }
    }

    /// Basis of `{x : x^p = x}`.
    fn fixed_by_frobenius(&self) -> Vec<Vec<u64>> {
        let rows: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| {
                let b = self.basis_vec(i);
                let mut fr = self.pow(&b, self.fp.p);
                fr[i] = self.fp.sub(fr[i], 1);
                fr
            })
            .collect();
        self.fp.left_kernel(&rows)
    }

    /// Minimal polynomial of `a` over `F_p`.
    pub fn min_poly(&self, a: &[u64]) -> FpPoly {
        let mut powers = vec![self.one.clone()];
        loop {
            let next = self.mul(powers.last().unwrap(), a);
            powers.push(next);
            let ker = self.fp.left_kernel(&powers);
            if let Some(rel) = ker.first() {
                // a kernel vector of minimal support ends at the newest power
                let k = powers.len() - 1;
                debug_assert!(rel[k] != 0);
                return self.fp.monic(&FpPoly::new(rel.clone()));
            }
        }
    }

    fn eval_poly(&self, g: &FpPoly, a: &[u64]) -> Vec<u64> {
        let mut acc = vec![0u64; self.dim];
        for &c in g.c.iter().rev() {
            acc = self.mul(&acc, a);
            for (x, &o) in acc.iter_mut().zip(&self.one) {
                *x = self.fp.add(*x, self.fp.mul(c, o));
            }
        }
        acc
    }

    /// Decomposition into local algebras (CRT components), each reported with
    /// its dimension and residue degree.
    pub fn local_components(&self) -> Vec<LocalComponent> {
        let mut rng = ChaCha8Rng::seed_from_u64(0xa1_9e_b2a ^ self.fp.p);
        let mut out = Vec::new();
        self.split_into(&mut out, &mut rng);
        out
    }

    fn split_into(&self, out: &mut Vec<LocalComponent>, rng: &mut ChaCha8Rng) {
        let rad = self.radical();
        let quot = self.quotient(&rad);
        let fixed = quot.fixed_by_frobenius();
        if fixed.len() <= 1 {
            out.push(LocalComponent {
                dim: self.dim,
                residue_degree: quot.dim,
            });
            return;
        }
        let pivots: Vec<usize> = rad
            .iter()
            .map(|r| r.iter().position(|&c| c != 0).unwrap())
            .collect();
        let keep: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        loop {
            let mut b = vec![0u64; quot.dim];
            for v in &fixed {
                let c = rng.gen_range(0..self.fp.p);
                for (x, &y) in b.iter_mut().zip(v) {
                    *x = self.fp.add(*x, self.fp.mul(c, y));
                }
            }
            let mut a = vec![0u64; self.dim];
            for (&k, &x) in keep.iter().zip(&b) {
                a[k] = x;
            }
            let m = self.min_poly(&a);
            let parts: Vec<FpPoly> = factor_mod_p(&m, &self.fp)
                .into_iter()
                .map(|(g, e)| (0..e).fold(FpPoly::one(), |acc, _| self.fp.pmul(&acc, &g)))
                .collect();
            if parts.len() < 2 {
                continue;
            }
            for part in &parts {
                let cofactor = self.fp.pdivrem(&m, part).0;
                let (_, s, _) = self.fp.pxgcd(&cofactor, part);
                let e_poly = self.fp.prem(&self.fp.pmul(&s, &cofactor), &m);
                let e = self.eval_poly(&e_poly, &a);
                self.component(&e).split_into(out, rng);
            }
            return;
        }
    }
}
