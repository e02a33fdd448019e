//! Factorization over the integers: squarefree decomposition, a modular
//! factorization at a good prime, Hensel lifting and subset recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fp::{factor_mod_p, FpPoly};
use super::integer::small_primes;
use super::matrix::Fp;
use super::poly::IntPoly;
use crate::error::{domain, Result};

/// Factor `f` into primitive irreducible integer polynomials with
/// multiplicities. Constant content is dropped; factors are sorted by degree
/// then coefficients.
pub fn factor_poly(f: &IntPoly) -> Result<Vec<(IntPoly, u32)>> {
    if f.is_zero() {
        return domain("cannot factor the zero polynomial");
    }
    let f = f.primitive_part();
    let parts = if squarefree_mod_some_prime(&f) {
        vec![(f, 1)]
    } else {
        squarefree_parts(&f)
    };
    let mut out = Vec::new();
    for (part, mult) in parts {
        for g in factor_squarefree(&part) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| {
        (a.0.deg(), a.0.coeffs(), a.1).cmp(&(b.0.deg(), b.0.coeffs(), b.1))
    });
    Ok(out)
}

/// Yun's squarefree decomposition over the rationals, returned as primitive
/// integer polynomials.
pub fn squarefree_parts(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let fr = f.to_rat();
    let d = fr.derivative();
    let a0 = fr.gcd(&d);
    let mut b = fr.div_rem(&a0).0;
    let mut c = d.div_rem(&a0).0;
    let mut dd = c.sub(&b.derivative());
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&dd);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.to_primitive_int(), i));
        }
        b = b.div_rem(&a).0;
        c = dd.div_rem(&a).0;
        dd = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// True when `f` stays squarefree of full degree modulo one of a few
/// primes, which certifies squarefreeness over the rationals.
pub(crate) fn squarefree_mod_some_prime(f: &IntPoly) -> bool {
    if f.deg() == 0 {
        return true;
    }
    for p in small_primes(3000).into_iter().filter(|&p| p > 1000).take(12) {
        let fp = Fp::new(p);
        let fbar = FpPoly::from_int(f, &fp);
        if fbar.deg() == f.deg() && fp.pgcd(&fbar, &fp.pderiv(&fbar)).deg() == 0 {
            return true;
        }
    }
    false
}

pub fn is_squarefree(f: &IntPoly) -> bool {
    if squarefree_mod_some_prime(f) {
        return true;
    }
    let fr = f.to_rat();
    fr.gcd(&fr.derivative()).degree() == Some(0)
}

/// Irreducible factors of a primitive squarefree polynomial.
pub fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let f = f.primitive_part();
    let n = f.deg();
    if n <= 1 {
        return vec![f];
    }
    let Some((p, modular)) = choose_prime(&f) else {
        // no good prime found among the candidates; cannot happen for squarefree input
        return vec![f];
    };
    if modular.len() == 1 {
        return vec![f];
    }
    let lc = f.lc().abs();
    let norm2: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let bound = (BigInt::one() << n) * (norm2.sqrt() + 1u32) * &lc * 2u32;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= bound {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(&f, &modular, p, k);
    recombine(f, lifted, &pk)
}

fn choose_prime(f: &IntPoly) -> Option<(u64, Vec<FpPoly>)> {
    let lc = f.lc();
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    for p in small_primes(2000) {
        let fp = Fp::new(p);
        if fp.from_big(&lc) == 0 {
            continue;
        }
        let fbar = FpPoly::from_int(f, &fp);
        if fp.pgcd(&fbar, &fp.pderiv(&fbar)).deg() != 0 {
            continue;
        }
        let factors: Vec<FpPoly> = factor_mod_p(&fbar, &fp).into_iter().map(|(g, _)| g).collect();
        let better = best.as_ref().is_none_or(|(_, b)| factors.len() < b.len());
        if better {
            best = Some((p, factors));
        }
        if best.as_ref().is_some_and(|(_, b)| b.len() == 1) {
            break;
        }
        tried += 1;
        if tried >= 6 {
            break;
        }
    }
    best
}

fn mod_sym(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn reduce(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let eg = a.mod_floor(m).extended_gcd(m);
    debug_assert!(eg.gcd.is_one());
    eg.x.mod_floor(m)
}

/// Lift `f = lc * prod g_i (mod p)` with monic `g_i` to a factorization modulo
/// `p^k` with monic lifted factors.
pub fn hensel_lift(f: &IntPoly, factors: &[FpPoly], p: u64, k: u32) -> Vec<IntPoly> {
    let pk = BigInt::from(p).pow(k);
    let inv = mod_inverse(&f.lc(), &pk);
    let monic = reduce(&f.scale(&inv), &pk);
    lift_all(&monic, factors, p, k, &pk)
}

fn lift_all(f: &IntPoly, factors: &[FpPoly], p: u64, k: u32, pk: &BigInt) -> Vec<IntPoly> {
    if factors.len() == 1 {
        return vec![reduce(f, pk)];
    }
    let fp = Fp::new(p);
    let rest = factors[1..]
        .iter()
        .fold(FpPoly::one(), |acc, g| fp.pmul(&acc, g));
    let (g, h) = lift_pair(f, &factors[0], &rest, p, k);
    let mut out = vec![g];
    out.extend(lift_all(&h, &factors[1..], p, k, pk));
    out
}

fn lift_pair(f: &IntPoly, g: &FpPoly, h: &FpPoly, p: u64, k: u32) -> (IntPoly, IntPoly) {
    let fp = Fp::new(p);
    let (one, s, t) = fp.pxgcd(g, h);
    debug_assert_eq!(one, FpPoly::one());
    let pb = BigInt::from(p);
    let mut big_g = g.to_int();
    let mut big_h = h.to_int();
    let mut pj = pb.clone();
    for _ in 1..k {
        let err = f.sub(&big_g.mul(&big_h));
        let e = FpPoly::new(
            err.coeffs()
                .iter()
                .map(|c| {
                    debug_assert!((c % &pj).is_zero());
                    fp.from_big(&(c / &pj))
                })
                .collect(),
        );
        if !e.is_zero() {
            let dg = fp.prem(&fp.pmul(&e, &t), g);
            let dh = fp.prem(&fp.pmul(&e, &s), h);
            big_g = big_g.add(&dg.to_int().scale(&pj));
            big_h = big_h.add(&dh.to_int().scale(&pj));
        }
        pj *= &pb;
    }
    (reduce(&big_g, &pj), reduce(&big_h, &pj))
}

fn recombine(mut f: IntPoly, mut lifted: Vec<IntPoly>, pk: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), s) {
            let lc = f.lc();
            let mut g = IntPoly::new(vec![lc.clone()]);
            for &i in &subset {
                g = g.mul(&lifted[i]);
                g = IntPoly::new(g.coeffs().iter().map(|c| mod_sym(c, pk)).collect());
            }
            let g = g.primitive_part();
            if let Some(q) = f.div_exact(&g) {
                found = Some((subset, g, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g);
                f = q.primitive_part();
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if f.deg() > 0 {
        out.push(f);
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Factorization over `F_p` of an integer polynomial, as integer
/// representatives in `[0, p)`.
pub fn factor_poly_mod(f: &IntPoly, p: u64) -> Result<Vec<(IntPoly, u32)>> {
    if !super::integer::is_prime_u64(p) {
        return domain(format!("{p} is not prime"));
    }
    let fp = Fp::new(p);
    let fbar = FpPoly::from_int(f, &fp);
    if fbar.is_zero() {
        return domain("polynomial vanishes modulo p");
    }
    Ok(factor_mod_p(&fbar, &fp)
        .into_iter()
        .map(|(g, m)| (g.to_int(), m))
        .collect())
}
