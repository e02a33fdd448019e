//! Real root counting with Sturm chains over the rationals.

use num_traits::{Signed, Zero};

use super::poly::{IntPoly, RatPoly};
use super::zfactor::is_squarefree;
use super::BigRat;
use crate::error::{domain, Result};

/// Sturm chain `f, f', -rem(f, f'), ...`.
pub fn sturm_chain(f: &IntPoly) -> Vec<RatPoly> {
    let mut chain = vec![f.to_rat(), f.to_rat().derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(RatPoly::new(r.coeffs().iter().map(|c| -c).collect()));
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut n = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

fn sign(c: &BigRat) -> i8 {
    if c.is_zero() {
        0
    } else if c.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of distinct real roots of a squarefree integer polynomial.
pub fn count_real_roots(f: &IntPoly) -> Result<usize> {
    match f.degree() {
        None => return domain("zero polynomial has infinitely many roots"),
        Some(0) => return Ok(0),
        _ => {}
    }
    if !is_squarefree(f) {
        return domain("real root counting requires a squarefree polynomial");
    }
    let chain = sturm_chain(f);
    let at_pos = sign_changes(chain.iter().map(|p| sign(&p.lc())));
    let at_neg = sign_changes(chain.iter().map(|p| {
        let s = sign(&p.lc());
        if p.degree().unwrap_or(0) % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    Ok(at_neg - at_pos)
}
