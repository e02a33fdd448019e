//! p-maximal enlargement of an order (round 2) and Dedekind's criterion.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Order;
use crate::error::{NfError, Result};
use crate::exact::fp::{factor_mod_p, FpPoly};
use crate::exact::matrix::{hnf_lower, hnf_rational, rat_inverse, rat_vec_mul, Fp, RatMatrix};
use crate::exact::{BigRat, IntPoly};

/// Dedekind's criterion: whether `Z[a]` is maximal at `p` for `f(a) = 0`.
pub fn dedekind_is_p_maximal(f: &IntPoly, p: u64) -> bool {
    let fp = Fp::new(p);
    let fbar = FpPoly::from_int(f, &fp);
    let factors = factor_mod_p(&fbar, &fp);
    let mut g = IntPoly::from_i64(&[1]);
    let mut h = IntPoly::from_i64(&[1]);
    for (q, e) in &factors {
        let qi = q.to_int();
        g = g.mul(&qi);
        h = h.mul(&qi.pow(e - 1));
    }
    let diff = g.mul(&h).sub(f);
    let pb = BigInt::from(p);
    let big_f = IntPoly::new(diff.coeffs().iter().map(|c| c / &pb).collect());
    let fbar_f = FpPoly::from_int(&big_f, &fp);
    let gbar = FpPoly::from_int(&g, &fp);
    let hbar = FpPoly::from_int(&h, &fp);
    let d = fp.pgcd(&fp.pgcd(&fbar_f, &gbar), &hbar);
    d.deg() == 0 && !d.is_zero()
}

/// Enlarge the order with the given power-basis rows until it is maximal at
/// `p`. Returns the new basis in lower Hermite form.
pub(crate) fn p_maximal_basis(f: &IntPoly, mut basis: RatMatrix, p: u64) -> Result<RatMatrix> {
    let n = f.deg();
    let fp = Fp::new(p);
    let pb = BigInt::from(p);
    loop {
        let order = Order::from_basis(f, basis.clone())?;
        let alg = order.mod_p(p);
        let rad = alg.radical();
        if rad.is_empty() {
            return Ok(basis);
        }
        // p-radical as a lattice in order coordinates
        let mut gens: Vec<Vec<BigInt>> = rad
            .iter()
            .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        for i in 0..n {
            let mut v = vec![BigInt::zero(); n];
            v[i] = pb.clone();
            gens.push(v);
        }
        let ideal = hnf_lower(&gens, n)
            .ok_or_else(|| NfError::Internal("radical lattice is degenerate".into()))?;
        let ideal_rat: RatMatrix = ideal
            .iter()
            .map(|r| r.iter().map(|c| BigRat::from_integer(c.clone())).collect())
            .collect();
        let ideal_inv = rat_inverse(&ideal_rat)
            .ok_or_else(|| NfError::Internal("radical lattice is singular".into()))?;

        // w_i * alpha_k in ideal coordinates, modulo p
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                let mut row = Vec::with_capacity(n * n);
                for alpha in &ideal {
                    let mut prod = vec![BigInt::zero(); n];
                    for (j, a) in alpha.iter().enumerate() {
                        if a.is_zero() {
                            continue;
                        }
                        for (o, t) in prod.iter_mut().zip(&order.table[i][j]) {
                            *o += a * t;
                        }
                    }
                    let prod: Vec<BigRat> = prod.into_iter().map(BigRat::from_integer).collect();
                    for c in rat_vec_mul(&prod, &ideal_inv) {
                        debug_assert!(c.is_integer());
                        row.push(fp.from_big(&c.to_integer()));
                    }
                }
                row
            })
            .collect();
        let kernel = fp.left_kernel(&rows);
        if kernel.is_empty() {
            return Ok(basis);
        }
        let inv_p = BigRat::new(BigInt::one(), pb.clone());
        let mut new_rows = basis.clone();
        for u in &kernel {
            let mut v = vec![BigRat::zero(); n];
            for (c, w) in u.iter().zip(&basis) {
                if *c == 0 {
                    continue;
                }
                let c = BigRat::from_integer(BigInt::from(*c));
                for (x, y) in v.iter_mut().zip(w) {
                    *x += &c * y;
                }
            }
            new_rows.push(v.into_iter().map(|x| x * &inv_p).collect());
        }
        basis = hnf_rational(&new_rows, n)
            .ok_or_else(|| NfError::Internal("enlarged order is degenerate".into()))?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::matrix::rat_det;
    use num_traits::Signed;

    fn index_at(f: &[i64], p: u64) -> BigInt {
        let f = IntPoly::from_i64(f);
        let b = p_maximal_basis(&f, Order::equation_order(f.deg()), p).unwrap();
        (BigRat::one() / rat_det(&b).abs()).to_integer()
    }

    #[test]
    fn dedekind_on_small_cases() {
        // x^2 + 3: Z[sqrt(-3)] is not 2-maximal
        assert!(!dedekind_is_p_maximal(&IntPoly::from_i64(&[3, 0, 1]), 2));
        assert!(dedekind_is_p_maximal(&IntPoly::from_i64(&[1, 0, 1]), 2));
        assert!(dedekind_is_p_maximal(&IntPoly::from_i64(&[-2, 0, 0, 1]), 3));
        assert!(dedekind_is_p_maximal(&IntPoly::from_i64(&[-2, 0, 0, 1]), 2));
        // 10 = 1 (mod 9)
        assert!(!dedekind_is_p_maximal(&IntPoly::from_i64(&[-10, 0, 0, 1]), 3));
    }

    #[test]
    fn indices_of_known_orders() {
        assert_eq!(index_at(&[3, 0, 1], 2), BigInt::from(2));
        assert_eq!(index_at(&[-5, 0, 1], 2), BigInt::from(2));
        assert_eq!(index_at(&[-8, 0, 1], 2), BigInt::from(2));
        assert_eq!(index_at(&[-49 * 3, 0, 1], 7), BigInt::from(7));
        assert_eq!(index_at(&[152, 68, 4, -1, 1], 2), BigInt::from(8));
        assert_eq!(index_at(&[152, 68, 4, -1, 1], 7), BigInt::from(1));
        assert_eq!(index_at(&[-10, 0, 0, 1], 3), BigInt::from(3));
    }
}
