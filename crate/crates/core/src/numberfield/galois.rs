//! Normality test: `f` splits over `Q[x]/(f)` exactly when the norm of
//! `f(x - k a)` has `deg f` irreducible factors over `Q`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::NumberField;
use crate::error::{NfError, Result};
use crate::exact::fp::{factor_mod_p, FpPoly};
use crate::exact::integer::{is_square, small_primes};
use crate::exact::matrix::Fp;
use crate::exact::zfactor::{is_squarefree, squarefree_mod_some_prime};
use crate::exact::{factor_poly, resultant, BigRat, IntPoly};

pub(crate) fn is_galois(k: &NumberField) -> Result<bool> {
    let f = k.defining_poly();
    let n = k.degree();
    if n == 2 {
        return Ok(true);
    }
    // a normal field has equal-degree factorizations at unramified primes
    let disc = k.poly_disc();
    let mut checked = 0;
    for p in small_primes(2000) {
        let pb = BigInt::from(p);
        if (disc % &pb).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let degs: Vec<usize> = factor_mod_p(&FpPoly::from_int(f, &fp), &fp)
            .iter()
            .map(|(g, _)| g.deg())
            .collect();
        if degs.iter().any(|&d| d != degs[0]) {
            return Ok(false);
        }
        checked += 1;
        if checked >= 30 {
            break;
        }
    }
    if n == 3 {
        return Ok(disc > &BigInt::zero() && is_square(disc));
    }
    // shift 1 is never squarefree: b + a = a + b
    for shift in 2..=40i64 {
        let norm = norm_resolvent(f, shift);
        let certified = squarefree_mod_some_prime(&norm) || (shift > 30 && is_squarefree(&norm));
        if certified {
            let factors = factor_poly(&norm)?;
            return Ok(factors.len() == n);
        }
    }
    Err(NfError::Internal("no squarefree norm resolvent found".into()))
}

/// `Res_y(f(y), f(x - k y))`, a monic polynomial of degree `n^2` whose roots
/// are `b + k a` over pairs of roots of `f`.
pub fn norm_resolvent(f: &IntPoly, k: i64) -> IntPoly {
    let n = f.deg();
    let m = n * n;
    let kb = BigInt::from(-k);
    let xs: Vec<BigInt> = (0..=m).map(|i| BigInt::from(i as i64)).collect();
    let ys: Vec<BigRat> = xs
        .iter()
        .map(|x| BigRat::from_integer(resultant(f, &f.compose_linear(&kb, x))))
        .collect();
    // Newton divided differences on integer nodes
    let mut dd = ys.clone();
    for j in 1..=m {
        for i in (j..=m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRat::from_integer(BigInt::from(j as i64));
        }
    }
    let mut coeffs = vec![BigRat::zero(); m + 1];
    let mut basis = vec![BigRat::from_integer(BigInt::from(1))];
    for (j, c) in dd.iter().enumerate() {
        for (i, b) in basis.iter().enumerate() {
            coeffs[i] += c * b;
        }
        // basis *= (x - j)
        let mut next = vec![BigRat::zero(); basis.len() + 1];
        for (i, b) in basis.iter().enumerate() {
            next[i + 1] += b;
            next[i] -= b * BigRat::from_integer(BigInt::from(j as i64));
        }
        basis = next;
    }
    IntPoly::new(
        coeffs
            .into_iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect(),
    )
}
