//! Polynomials over a prime field and their factorization.
//!
//! Factorization is squarefree decomposition, distinct-degree splitting, then
//! Cantor-Zassenhaus equal-degree splitting driven by a seeded generator so
//! output is reproducible.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::matrix::Fp;
use super::poly::IntPoly;

/// Polynomial over `F_p`, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    pub c: Vec<u64>,
}

impl FpPoly {
    pub fn new(mut c: Vec<u64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { c }
    }

    pub fn zero() -> Self {
        FpPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        FpPoly { c: vec![1] }
    }

    pub fn x() -> Self {
        FpPoly { c: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn from_int(f: &IntPoly, fp: &Fp) -> Self {
        Self::new(f.coeffs().iter().map(|a| fp.from_big(a)).collect())
    }

    pub fn to_int(&self) -> IntPoly {
        IntPoly::new(self.c.iter().map(|&a| BigInt::from(a)).collect())
    }
}

/// Arithmetic on `F_p[x]`.
impl Fp {
    pub fn padd(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.c.len().max(b.c.len());
        FpPoly::new(
            (0..n)
                .map(|i| self.add(*a.c.get(i).unwrap_or(&0), *b.c.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub fn psub(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let n = a.c.len().max(b.c.len());
        FpPoly::new(
            (0..n)
                .map(|i| self.sub(*a.c.get(i).unwrap_or(&0), *b.c.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub fn pscale(&self, a: &FpPoly, k: u64) -> FpPoly {
        FpPoly::new(a.c.iter().map(|&x| self.mul(x, k)).collect())
    }

    pub fn pmul(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        if a.is_zero() || b.is_zero() {
            return FpPoly::zero();
        }
        let mut out = vec![0u64; a.c.len() + b.c.len() - 1];
        for (i, &x) in a.c.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.c.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        FpPoly::new(out)
    }

    pub fn pdivrem(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly) {
        let db = b.degree().expect("division by zero polynomial");
        if a.c.len() <= db {
            return (FpPoly::zero(), a.clone());
        }
        let inv = self.inv(b.lc());
        let mut rem = a.c.clone();
        let mut q = vec![0u64; rem.len() - db];
        for i in (0..q.len()).rev() {
            let t = self.mul(rem[i + db], inv);
            if t == 0 {
                continue;
            }
            for (j, &bc) in b.c.iter().enumerate() {
                rem[i + j] = self.sub(rem[i + j], self.mul(t, bc));
            }
            q[i] = t;
        }
        rem.truncate(db);
        (FpPoly::new(q), FpPoly::new(rem))
    }

    pub fn prem(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        self.pdivrem(a, b).1
    }

    pub fn monic(&self, a: &FpPoly) -> FpPoly {
        if a.is_zero() {
            return a.clone();
        }
        self.pscale(a, self.inv(a.lc()))
    }

    pub fn pgcd(&self, a: &FpPoly, b: &FpPoly) -> FpPoly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let r = self.prem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn pxgcd(&self, a: &FpPoly, b: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (FpPoly::one(), FpPoly::zero());
        let (mut t0, mut t1) = (FpPoly::zero(), FpPoly::one());
        while !r1.is_zero() {
            let (q, r) = self.pdivrem(&r0, &r1);
            let s = self.psub(&s0, &self.pmul(&q, &s1));
            let t = self.psub(&t0, &self.pmul(&q, &t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = self.inv(r0.lc());
        (self.pscale(&r0, inv), self.pscale(&s0, inv), self.pscale(&t0, inv))
    }

    pub fn pderiv(&self, a: &FpPoly) -> FpPoly {
        FpPoly::new(
            a.c.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &x)| self.mul(x, i as u64 % self.p))
                .collect(),
        )
    }

    pub fn ppowmod(&self, base: &FpPoly, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut acc = self.prem(&FpPoly::one(), m);
        let mut b = self.prem(base, m);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.prem(&self.pmul(&acc, &b), m);
            }
            b = self.prem(&self.pmul(&b, &b), m);
            e >>= 1;
        }
        acc
    }

    pub fn peval(&self, a: &FpPoly, x: u64) -> u64 {
        a.c.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }
}

/// Factorization of `f` over `F_p` into monic irreducibles with multiplicity,
/// sorted by degree then coefficients. The leading coefficient is dropped.
pub fn factor_mod_p(f: &FpPoly, fp: &Fp) -> Vec<(FpPoly, u32)> {
    assert!(!f.is_zero(), "factoring the zero polynomial");
    let mut out = Vec::new();
    for (sqf, mult) in squarefree_decomposition(&fp.monic(f), fp) {
        for (deg, part) in distinct_degree(&sqf, fp) {
            for g in equal_degree(&part, deg, fp) {
                out.push((g, mult));
            }
        }
    }
    out.sort_by(|a, b| (a.0.deg(), &a.0.c, a.1).cmp(&(b.0.deg(), &b.0.c, b.1)));
    out
}

/// Squarefree factors `(g, i)` with `f = prod g^i`, for monic `f`.
pub fn squarefree_decomposition(f: &FpPoly, fp: &Fp) -> Vec<(FpPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let d = fp.pderiv(f);
    if d.is_zero() {
        // f = g(x^p)
        let g = FpPoly::new(f.c.iter().step_by(fp.p as usize).copied().collect());
        for (h, m) in squarefree_decomposition(&g, fp) {
            out.push((h, m * fp.p as u32));
        }
        return out;
    }
    let mut c = fp.pgcd(f, &d);
    let mut w = fp.pdivrem(f, &c).0;
    let mut i = 1u32;
    while w.deg() > 0 {
        let y = fp.pgcd(&w, &c);
        let z = fp.pdivrem(&w, &y).0;
        if z.deg() > 0 {
            out.push((fp.monic(&z), i));
        }
        i += 1;
        w = y;
        c = fp.pdivrem(&c, &w).0;
    }
    if c.deg() > 0 {
        // remaining part is a p-th power
        let g = FpPoly::new(c.c.iter().step_by(fp.p as usize).copied().collect());
        for (h, m) in squarefree_decomposition(&fp.monic(&g), fp) {
            out.push((h, m * fp.p as u32));
        }
    }
    out
}

fn distinct_degree(f: &FpPoly, fp: &Fp) -> Vec<(usize, FpPoly)> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = FpPoly::x();
    let mut h = fp.prem(&x, &rest);
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = fp.ppowmod(&h, fp.p, &rest);
        let g = fp.pgcd(&fp.psub(&h, &x), &rest);
        if g.deg() > 0 {
            out.push((d, g.clone()));
            rest = fp.pdivrem(&rest, &g).0;
            h = fp.prem(&h, &rest);
        }
    }
    if rest.deg() > 0 {
        out.push((rest.deg(), rest));
    }
    out
}

fn equal_degree(f: &FpPoly, d: usize, fp: &Fp) -> Vec<FpPoly> {
    if f.deg() == d {
        return vec![fp.monic(f)];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ fp.p ^ ((f.deg() as u64) << 32));
    loop {
        let a = FpPoly::new((0..f.deg()).map(|_| rng.gen_range(0..fp.p)).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if fp.p == 2 {
            // trace map a + a^2 + ... + a^(2^(d-1))
            let mut t = fp.prem(&a, f);
            let mut acc = t.clone();
            for _ in 1..d {
                t = fp.prem(&fp.pmul(&t, &t), f);
                acc = fp.padd(&acc, &t);
            }
            acc
        } else {
            // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
            let mut t = fp.prem(&a, f);
            let mut norm = t.clone();
            for _ in 1..d {
                t = fp.ppowmod(&t, fp.p, f);
                norm = fp.prem(&fp.pmul(&norm, &t), f);
            }
            let h = fp.ppowmod(&norm, (fp.p - 1) / 2, f);
            fp.psub(&h, &FpPoly::one())
        };
        let g = fp.pgcd(&b, f);
        if g.deg() > 0 && g.deg() < f.deg() {
            let q = fp.pdivrem(f, &g).0;
            let mut out = equal_degree(&g, d, fp);
            out.extend(equal_degree(&q, d, fp));
            return out;
        }
    }
}
