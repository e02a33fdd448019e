//! Number fields given by a monic irreducible polynomial: maximal order,
//! discriminant, signature, trace form, normality test.

pub mod algebra;
mod galois;
mod round2;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{NfError, Result};
use crate::exact::matrix::{rat_det, rat_inverse, rat_vec_mul, Fp, RatMatrix};
use crate::exact::{
    count_real_roots, factor_integer, factor_poly, poly_discriminant, BigRat, Factorization,
    IntPoly, RatPoly,
};
use algebra::FpAlgebra;

pub use galois::norm_resolvent;
pub use round2::dedekind_is_p_maximal;

/// A number field `Q(a)` with `a` a root of `defining_poly`, together with
/// its ring of integers.
#[derive(Debug, Clone)]
pub struct NumberField {
    poly: IntPoly,
    degree: usize,
    order: Order,
    poly_disc: BigInt,
    disc: BigInt,
    disc_factors: Factorization,
    index: BigInt,
    signature: (usize, usize),
    prime_traces: Vec<BigInt>,
}

/// A full-rank subring of the field, stored by a basis in the power basis.
#[derive(Debug, Clone)]
pub(crate) struct Order {
    /// Row `i` holds the power-basis coordinates of basis element `i`.
    pub basis: RatMatrix,
    pub inverse: RatMatrix,
    /// `table[i][j][k]`: coefficient of basis element `k` in `w_i * w_j`.
    pub table: Vec<Vec<Vec<BigInt>>>,
}

/// Element of a number field in integral-basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement {
    pub coords: Vec<BigRat>,
}

/// Symmetric integer matrix of the integral trace form `Tr(w_i w_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GramMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl GramMatrix {
    /// Wrap a symmetric integer matrix.
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(NfError::Domain("Gram matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(NfError::Domain("Gram matrix must be symmetric".into()));
                }
            }
        }
        Ok(GramMatrix { entries })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = vec![vec![BigInt::zero(); n]; n];
        for (i, &a) in entries.iter().enumerate() {
            m[i][i] = BigInt::from(a);
        }
        GramMatrix { entries: m }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![1; n])
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn det(&self) -> BigInt {
        crate::exact::matrix::bareiss_det(self.entries.clone())
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.entries
            .iter()
            .map(|r| r.iter().map(|c| BigRat::from_integer(c.clone())).collect())
            .collect()
    }
}

/// Multiply two power-basis vectors modulo the monic polynomial `f`.
pub(crate) fn mul_mod_poly(a: &[BigRat], b: &[BigRat], f: &IntPoly) -> Vec<BigRat> {
    let n = f.deg();
    let mut prod = vec![BigRat::zero(); 2 * n - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                prod[i + j] += x * y;
            }
        }
    }
    let fc: Vec<BigRat> = f.coeffs().iter().map(|c| BigRat::from_integer(c.clone())).collect();
    for k in (n..2 * n - 1).rev() {
        let t = std::mem::replace(&mut prod[k], BigRat::zero());
        if t.is_zero() {
            continue;
        }
        for (i, c) in fc.iter().take(n).enumerate() {
            prod[k - n + i] -= &t * c;
        }
    }
    prod.truncate(n);
    prod
}

impl Order {
    pub fn equation_order(n: usize) -> RatMatrix {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigRat::one() } else { BigRat::zero() })
                    .collect()
            })
            .collect()
    }

    /// Build the order with the given basis; fails if the lattice is not
    /// closed under multiplication.
    pub fn from_basis(f: &IntPoly, basis: RatMatrix) -> Result<Order> {
        let n = f.deg();
        let inverse = rat_inverse(&basis)
            .ok_or_else(|| NfError::Internal("order basis is singular".into()))?;
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in i..n {
                let prod = mul_mod_poly(&basis[i], &basis[j], f);
                let coords = rat_vec_mul(&prod, &inverse);
                let ints = coords
                    .into_iter()
                    .map(|c| {
                        if c.is_integer() {
                            Ok(c.to_integer())
                        } else {
                            Err(NfError::Internal("lattice is not closed under multiplication".into()))
                        }
                    })
                    .collect::<Result<Vec<BigInt>>>()?;
                table[i][j] = ints.clone();
                table[j][i] = ints;
            }
        }
        Ok(Order {
            basis,
            inverse,
            table,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `O/pO` as an algebra over `F_p`.
    pub fn mod_p(&self, p: u64) -> FpAlgebra {
        let fp = Fp::new(p);
        let n = self.dim();
        let table = self
            .table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.iter().map(|c| fp.from_big(c)).collect())
                    .collect()
            })
            .collect();
        let mut one = vec![0u64; n];
        one[0] = 1;
        debug_assert!(self.basis[0][0].is_one() && self.basis[0][1..].iter().all(|c| c.is_zero()));
        FpAlgebra {
            fp,
            dim: n,
            table,
            one,
        }
    }

    /// `[O : Z[a]]`, i.e. the inverse of the basis determinant.
    pub fn index(&self) -> BigInt {
        let d = rat_det(&self.basis).abs();
        (BigRat::one() / d).to_integer()
    }
}

impl NumberField {
    /// Construct the field defined by a monic irreducible polynomial of degree
    /// at least two and compute its maximal order.
    pub fn new(poly: IntPoly) -> Result<Self> {
        let degree = poly.degree().unwrap_or(0);
        if degree < 2 {
            return Err(NfError::DegreeTooSmall(degree));
        }
        if !poly.is_monic() {
            return Err(NfError::NotMonic(poly.lc().to_string()));
        }
        let factors = factor_poly(&poly)?;
        if factors.len() > 1 || factors[0].1 > 1 {
            return Err(NfError::Reducible(factors[0].0.to_string()));
        }
        let poly_disc = poly_discriminant(&poly)?;
        let poly_disc_factors = factor_integer(&poly_disc)?;

        let mut basis = Order::equation_order(degree);
        for (p, e) in &poly_disc_factors.factors {
            if *e < 2 {
                continue;
            }
            let p = p
                .to_u64()
                .ok_or_else(|| NfError::PrimeTooLarge(p.to_string()))?;
            if dedekind_is_p_maximal(&poly, p) {
                continue;
            }
            basis = round2::p_maximal_basis(&poly, basis, p)?;
        }
        let order = Order::from_basis(&poly, basis)?;
        let index = order.index();
        let disc = &poly_disc / (&index * &index);
        if &disc * &index * &index != poly_disc {
            return Err(NfError::Internal("index squared does not divide disc(f)".into()));
        }
        let disc_factors = factor_integer(&disc)?;

        let r1 = count_real_roots(&poly)?;
        let r2 = (degree - r1) / 2;
        let expected_sign = if r2 % 2 == 0 { 1 } else { -1 };
        if crate::exact::integer::sign_of(&disc) != expected_sign {
            return Err(NfError::Internal("sign of the discriminant disagrees with the signature".into()));
        }

        let prime_traces = (0..degree)
            .map(|k| (0..degree).map(|i| order.table[k][i][i].clone()).sum())
            .collect();

        Ok(NumberField {
            poly,
            degree,
            order,
            poly_disc,
            disc,
            disc_factors,
            index,
            signature: (r1, r2),
            prime_traces,
        })
    }

    pub fn defining_poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn disc_factorization(&self) -> &Factorization {
        &self.disc_factors
    }

    pub fn poly_disc(&self) -> &BigInt {
        &self.poly_disc
    }

    pub fn index(&self) -> &BigInt {
        &self.index
    }

    /// `(r1, r2)`: real embeddings and pairs of complex embeddings.
    pub fn signature(&self) -> (usize, usize) {
        self.signature
    }

    pub fn is_totally_real(&self) -> bool {
        self.signature.1 == 0
    }

    /// Rows express the integral basis in the power basis `1, a, ..., a^(n-1)`.
    pub fn integral_basis(&self) -> &RatMatrix {
        &self.order.basis
    }

    pub(crate) fn order(&self) -> &Order {
        &self.order
    }

    /// `table[i][j][k]`: integral structure constants of the maximal order.
    pub fn structure_constants(&self) -> &[Vec<Vec<BigInt>>] {
        &self.order.table
    }

    /// The integral basis element `w_i`.
    pub fn basis_element(&self, i: usize) -> FieldElement {
        let mut coords = vec![BigRat::zero(); self.degree];
        coords[i] = BigRat::one();
        FieldElement { coords }
    }

    /// Element with the given power-basis coordinates.
    pub fn from_power_basis(&self, coeffs: &[BigRat]) -> FieldElement {
        let mut v = coeffs.to_vec();
        v.resize(self.degree, BigRat::zero());
        FieldElement {
            coords: rat_vec_mul(&v, &self.order.inverse),
        }
    }

    pub fn to_power_basis(&self, x: &FieldElement) -> Vec<BigRat> {
        rat_vec_mul(&x.coords, &self.order.basis)
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        let n = self.degree;
        let mut out = vec![BigRat::zero(); n];
        for (i, a) in x.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (o, c) in out.iter_mut().zip(&self.order.table[i][j]) {
                    if !c.is_zero() {
                        *o += &ab * BigRat::from_integer(c.clone());
                    }
                }
            }
        }
        FieldElement { coords: out }
    }

    /// Trace to `Q`: the trace of the multiplication matrix.
    pub fn trace(&self, x: &FieldElement) -> BigRat {
        x.coords
            .iter()
            .zip(&self.prime_traces)
            .fold(BigRat::zero(), |acc, (a, t)| acc + a * BigRat::from_integer(t.clone()))
    }

    /// Gram matrix of the integral trace form in the integral basis.
    pub fn trace_gram(&self) -> GramMatrix {
        let n = self.degree;
        let mut g = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let t: BigInt = self.order.table[i][j]
                    .iter()
                    .zip(&self.prime_traces)
                    .map(|(c, t)| c * t)
                    .sum();
                g[i][j] = t.clone();
                g[j][i] = t;
            }
        }
        GramMatrix { entries: g }
    }

    /// Whether the field is normal over `Q`: the defining polynomial splits
    /// into linear factors over the field.
    pub fn is_galois(&self) -> Result<bool> {
        galois::is_galois(self)
    }

    /// Render `w_i` as a polynomial in `a`.
    pub fn basis_element_string(&self, i: usize) -> String {
        let s = RatPoly::new(self.order.basis[i].clone()).to_string();
        s.replace('x', "a")
    }
}

impl fmt::Display for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.poly)
    }
}

/// Fundamental discriminants: `d = 1 (mod 4)` squarefree, or `d = 4m` with `m`
/// squarefree and `m = 2, 3 (mod 4)`. The value 1 is excluded.
pub fn is_fundamental_disc(d: &BigInt) -> Result<bool> {
    use crate::exact::integer::is_squarefree;
    use num_integer::Integer;
    if d.is_zero() || d.is_one() {
        return Ok(false);
    }
    let r = d.mod_floor(&BigInt::from(4)).to_u32().unwrap();
    if r == 1 {
        return is_squarefree(d);
    }
    if r == 0 {
        let m: BigInt = d / 4u32;
        let rm = m.mod_floor(&BigInt::from(4)).to_u32().unwrap();
        return Ok((rm == 2 || rm == 3) && is_squarefree(&m)?);
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(c: &[i64]) -> NumberField {
        NumberField::new(IntPoly::from_i64(c)).unwrap()
    }

    /// Power sums of the roots by Newton's identities, an independent route
    /// to the trace form.
    fn newton_sums(f: &IntPoly, count: usize) -> Vec<BigInt> {
        let n = f.deg();
        let a = |k: usize| f.coeff(n - k); // e-coefficients of monic f: x^n + a1 x^(n-1) + ...
        let mut s: Vec<BigInt> = vec![BigInt::from(n)];
        for k in 1..count {
            let mut v = if k <= n { -BigInt::from(k) * a(k) } else { BigInt::zero() };
            for i in 1..k {
                if i <= n {
                    v -= a(i) * &s[k - i];
                }
            }
            s.push(v);
        }
        s
    }

    fn gram_by_newton(k: &NumberField) -> Vec<Vec<BigRat>> {
        let n = k.degree();
        let s = newton_sums(k.defining_poly(), 2 * n);
        let b = k.integral_basis();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = BigRat::zero();
                        for (u, x) in b[i].iter().enumerate() {
                            for (v, y) in b[j].iter().enumerate() {
                                acc += x * y * BigRat::from_integer(s[u + v].clone());
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    #[test]
    fn gaussian_field() {
        let k = field(&[1, 0, 1]);
        assert_eq!(k.disc(), &BigInt::from(-4));
        assert_eq!(k.signature(), (0, 1));
        assert!(k.index().is_one());
        assert_eq!(k.trace_gram(), GramMatrix::from_i64(&[&[2, 0], &[0, -2]]).unwrap());
        assert_eq!(k.basis_element_string(1), "a");
    }

    #[test]
    fn quartic_pair_discriminants() {
        let k = field(&[152, 68, 4, -1, 1]);
        assert_eq!(k.degree(), 4);
        assert_eq!(k.disc(), &BigInt::from(15311569));
        assert_eq!(k.signature(), (0, 2));
        assert_eq!(k.index(), &BigInt::from(8));
        assert_eq!(k.trace_gram().det(), BigInt::from(15311569));
        let l = field(&[121, -21, -15, 0, 1]);
        assert_eq!(l.disc(), &BigInt::from(15311569));
        assert_eq!(l.signature(), (0, 2));
    }

    #[test]
    fn trace_gram_agrees_with_newton_sums() {
        for c in [
            &[152i64, 68, 4, -1, 1][..],
            &[-1, -2, 1, 1],
            &[1, 0, 1],
            &[-15, -8, 0, 1],
            &[64, -30, -1, 1],
        ] {
            let k = field(c);
            let g = k.trace_gram().to_rational();
            assert_eq!(g, gram_by_newton(&k), "poly {c:?}");
        }
    }

    #[test]
    fn structure_constants_are_integral_and_one_is_first() {
        let k = field(&[152, 68, 4, -1, 1]);
        let b = k.integral_basis();
        assert!(b[0][0].is_one() && b[0][1..].iter().all(|c| c.is_zero()));
        // products computed in the power basis land back in the lattice
        for i in 0..4 {
            for j in 0..4 {
                let prod = mul_mod_poly(&b[i], &b[j], k.defining_poly());
                let x = k.from_power_basis(&prod);
                assert!(x.coords.iter().all(|c| c.is_integer()));
                assert_eq!(x, k.mul(&k.basis_element(i), &k.basis_element(j)));
            }
        }
    }

    #[test]
    fn trace_matches_fixed_values() {
        let k = field(&[1, 0, 1]);
        let i = k.basis_element(1);
        assert_eq!(k.trace(&k.mul(&i, &i)), BigRat::from_integer(BigInt::from(-2)));
        assert_eq!(k.trace(&k.basis_element(0)), BigRat::from_integer(BigInt::from(2)));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            NumberField::new(IntPoly::from_i64(&[-1, 0, 1])),
            Err(NfError::Reducible(_))
        ));
        assert!(matches!(
            NumberField::new(IntPoly::from_i64(&[1, 0, 2])),
            Err(NfError::NotMonic(_))
        ));
        assert!(matches!(
            NumberField::new(IntPoly::from_i64(&[3, 1])),
            Err(NfError::DegreeTooSmall(1))
        ));
    }

    #[test]
    fn cubic_with_index() {
        // x^3 - x^2 - 30x + 64 has disc(f) = 4 * 8281 and field discriminant 8281
        let k = field(&[64, -30, -1, 1]);
        assert_eq!(k.disc(), &BigInt::from(8281));
        assert_eq!(k.index(), &BigInt::from(2));
        assert_eq!(k.trace_gram().det(), BigInt::from(8281));
    }

    #[test]
    fn fundamental_discriminants() {
        let t = |d: i64| is_fundamental_disc(&BigInt::from(d)).unwrap();
        assert!(t(725517561));
        assert!(!t(49));
        assert!(t(-4027));
        assert!(t(-4));
        assert!(t(8));
        assert!(t(-3));
        assert!(!t(12 * 4));
        assert!(!t(1));
        assert!(!t(-8 * 2));
    }
}
