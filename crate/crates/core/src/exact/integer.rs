//! Integer factorization, primality and small number-theoretic helpers.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

const TRIAL_LIMIT: u64 = 1_000_000;

/// Bases for which Miller-Rabin is a proof of primality below
/// 3_317_044_064_679_887_385_961_981.
const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Signed prime factorization `sign * prod p^e` with primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn value(&self) -> BigInt {
        let mut acc = BigInt::from(self.sign);
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factors.iter().map(|(p, _)| p)
    }

    pub fn exponent(&self, p: u64) -> u32 {
        let p = BigInt::from(p);
        self.factors
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    /// Primes as machine words, or `None` if one of them is too large.
    pub fn primes_u64(&self) -> Option<Vec<u64>> {
        self.factors.iter().map(|(p, _)| p.to_u64()).collect()
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "{}", self.sign);
        }
        if self.sign < 0 {
            write!(f, "-")?;
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Exact prime factorization of a nonzero integer.
pub fn factor_integer(n: &BigInt) -> Result<Factorization> {
    if n.is_zero() {
        return domain("cannot factor zero");
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.magnitude().clone();
    let mut primes: Vec<BigUint> = Vec::new();

    let push = |p: u64, m: &mut BigUint, primes: &mut Vec<BigUint>| {
        let pb = BigUint::from(p);
        while (&*m % &pb).is_zero() {
            *m /= &pb;
            primes.push(pb.clone());
        }
    };
    push(2, &mut m, &mut primes);
    push(3, &mut m, &mut primes);
    // 6k +- 1 wheel
    let mut d = 5u64;
    while d <= TRIAL_LIMIT {
        if let Some(small) = m.to_u64() {
            if d.saturating_mul(d) > small {
                break;
            }
        }
        push(d, &mut m, &mut primes);
        push(d + 2, &mut m, &mut primes);
        d += 6;
    }
    if !m.is_one() {
        split_large(m, &mut primes);
    }
    primes.sort();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        let p = BigInt::from(p);
        match factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => factors.push((p, 1)),
        }
    }
    Ok(Factorization { sign, factors })
}

fn split_large(m: BigUint, out: &mut Vec<BigUint>) {
    if m.is_one() {
        return;
    }
    if is_prime(&m) {
        out.push(m);
        return;
    }
    if let Some(r) = exact_root(&m) {
        let (base, k) = r;
        for _ in 0..k {
            split_large(base.clone(), out);
        }
        return;
    }
    let d = pollard_brent(&m);
    let q = &m / &d;
    split_large(d, out);
    split_large(q, out);
}

/// `Some((b, k))` with `b^k = m`, k >= 2, when m is a perfect power.
fn exact_root(m: &BigUint) -> Option<(BigUint, u32)> {
    let bits = m.bits() as u32;
    for k in 2..=bits.max(2) {
        let r = m.nth_root(k);
        if r.pow(k) == *m {
            return Some((r, k));
        }
        if r < BigUint::from(2u32) {
            break;
        }
    }
    None
}

fn pollard_brent(n: &BigUint) -> BigUint {
    let one = BigUint::one();
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r = 1u64;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        const BLOCK: u64 = 128;
        while g == one {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g == one {
                ys = y.clone();
                for _ in 0..BLOCK.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += BLOCK;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if g != one {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

fn miller_rabin(n: &BigUint, base: &BigUint) -> bool {
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    let mut x = base.modpow(&d, n);
    if x == one || x == n1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n1 {
            return true;
        }
    }
    false
}

fn jacobi_big(a: &BigInt, n: &BigUint) -> i8 {
    let n = BigInt::from(n.clone());
    let mut a = a.mod_floor(&n);
    let mut n = n;
    let mut t = 1i8;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = (&n % 8u32).to_u32().unwrap();
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32() == Some(3) && (&n % 4u32).to_u32() == Some(3) {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge parameters.
fn strong_lucas(n: &BigUint) -> bool {
    let nb = BigInt::from(n.clone());
    let mut d = BigInt::from(5);
    loop {
        let j = jacobi_big(&d, n);
        if j == -1 {
            break;
        }
        if j == 0 && d.abs() != nb {
            return false;
        }
        d = if d.is_positive() { -(d + 2i32) } else { -d + 2i32 };
    }
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &d) / 4;
    let np1 = &nb + 1u32;
    let s = np1.trailing_zeros().unwrap_or(0);
    let dd = &np1 >> s;
    let m = |x: BigInt| x.mod_floor(&nb);
    let half = |x: BigInt| {
        let x = m(x);
        if x.is_odd() {
            (x + &nb) >> 1
        } else {
            x >> 1
        }
    };
    // binary Lucas chain for U_dd, V_dd
    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = m(q.clone());
    let bits = dd.bits();
    for i in (0..bits - 1).rev() {
        u = m(&u * &v);
        v = m(&v * &v - (&qk << 1usize));
        qk = m(&qk * &qk);
        if dd.bit(i) {
            let u2 = half(&p * &u + &v);
            let v2 = half(&d * &u + &p * &v);
            u = u2;
            v = v2;
            qk = m(&qk * &q);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = m(&v * &v - (&qk << 1usize));
        if v.is_zero() {
            return true;
        }
        qk = m(&qk * &qk);
    }
    false
}

/// Primality test. Deterministic (a proof) below 3.3e24; Baillie-PSW above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    if MR_BASES.iter().any(|&p| (n % p).is_zero()) {
        return false;
    }
    let bound: BigUint = "3317044064679887385961981".parse().unwrap();
    if *n < bound {
        return MR_BASES
            .iter()
            .all(|&b| miller_rabin(n, &BigUint::from(b)));
    }
    miller_rabin(n, &BigUint::from(2u32)) && strong_lucas(n)
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d0 = n - 1;
    let s = d0.trailing_zeros();
    let d = d0 >> s;
    'bases: for &a in &MR_BASES[..12] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Reduce a big integer into `[0, p)`.
pub fn mod_u64(a: &BigInt, p: u64) -> u64 {
    a.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

/// Legendre symbol `(a | p)` for an odd prime `p`, in `{-1, 0, 1}`.
pub fn legendre(a: &BigInt, p: u64) -> i8 {
    let r = mod_u64(a, p);
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// `(v, u)` with `n = p^v * u` and `p` not dividing `u`. `n` must be nonzero.
pub fn split_valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    debug_assert!(!n.is_zero());
    let pb = BigInt::from(p);
    let mut v = 0;
    let mut u = n.clone();
    loop {
        let (q, r) = u.div_rem(&pb);
        if !r.is_zero() {
            break;
        }
        u = q;
        v += 1;
    }
    (v, u)
}

pub fn valuation(n: &BigInt, p: u64) -> u32 {
    split_valuation(n, p).0
}

pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Squarefree integer in the same rational square class as `n`.
pub fn squarefree_kernel(n: &BigInt) -> Result<BigInt> {
    let fac = factor_integer(n)?;
    let mut acc = BigInt::from(fac.sign);
    for (p, e) in fac.factors {
        if e % 2 == 1 {
            acc *= p;
        }
    }
    Ok(acc)
}

pub fn is_squarefree(n: &BigInt) -> Result<bool> {
    Ok(factor_integer(n)?.factors.iter().all(|(_, e)| *e == 1))
}

/// Primes up to `limit` by a simple sieve.
pub fn small_primes(limit: u64) -> Vec<u64> {
    let limit = limit as usize;
    let mut sieve = vec![true; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

pub(crate) fn sign_of(n: &BigInt) -> i8 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}
