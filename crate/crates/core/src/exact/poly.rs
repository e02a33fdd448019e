//! Dense univariate polynomials over the integers and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::bareiss_det;
use super::BigRat;
use crate::error::{domain, Result};

/// Integer polynomial, coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::from_i64(&[1]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient over the integers, or `None` if `divisor` does not divide.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d = divisor.degree()?;
        let lc = divisor.lc();
        let mut rem = self.coeffs.clone();
        if rem.len() < d + 1 {
            return if self.is_zero() { Some(Self::zero()) } else { None };
        }
        let mut q = vec![BigInt::zero(); rem.len() - d];
        for i in (0..q.len()).rev() {
            let top = &rem[i + d];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// `self(a*x + b)`.
    pub fn compose_linear(&self, a: &BigInt, b: &BigInt) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Self::new(vec![c.clone()]));
        }
        acc
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| BigRat::from_integer(c.clone())).collect())
    }
}

fn write_terms<T: fmt::Display + Clone>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    var: &str,
    is_zero: impl Fn(&T) -> bool,
    is_neg: impl Fn(&T) -> bool,
    abs: impl Fn(&T) -> T,
    is_one: impl Fn(&T) -> bool,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in coeffs.iter().enumerate().rev() {
        if is_zero(c) {
            continue;
        }
        let neg = is_neg(c);
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if neg { " - " } else { " + " })?;
        }
        first = false;
        let a = abs(c);
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        if i == 0 {
            write!(f, "{a}")?;
        } else if is_one(&a) {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{a}*{mono}")?;
        }
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            &self.coeffs,
            "x",
            |c| c.is_zero(),
            |c| c.is_negative(),
            |c| c.abs(),
            |c| c.is_one(),
        )
    }
}

/// Rational polynomial, coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRat>,
}

impl RatPoly {
    pub fn new(coeffs: Vec<BigRat>) -> Self {
        let mut p = RatPoly { coeffs };
        while p.coeffs.last().is_some_and(|c| c.is_zero()) {
            p.coeffs.pop();
        }
        p
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.lc();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (Self::new(Vec::new()), self.clone());
        }
        let mut q = vec![BigRat::zero(); rem.len() - d];
        for i in (0..q.len()).rev() {
            let c = &rem[i + d] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        rem.truncate(d);
        (Self::new(q), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        let lc = self.lc();
        Self::new(self.coeffs.iter().map(|c| c / &lc).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Clear denominators and return the primitive integer polynomial.
    pub fn to_primitive_int(&self) -> IntPoly {
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRat::from_integer(den.clone())).to_integer())
                .collect(),
        )
        .primitive_part()
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            &self.coeffs,
            "x",
            |c| c.is_zero(),
            |c| c.is_negative(),
            |c| c.abs(),
            |c| c.is_one(),
        )
    }
}

/// Resultant via the determinant of the Sylvester matrix.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    let (Some(m), Some(n)) = (f.degree(), g.degree()) else {
        return BigInt::zero();
    };
    if m == 0 && n == 0 {
        return BigInt::one();
    }
    let size = m + n;
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    // rows hold coefficients in descending order
    for i in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    bareiss_det(rows)
}

/// `disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)`.
pub fn poly_discriminant(f: &IntPoly) -> Result<BigInt> {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return domain("discriminant of a constant polynomial"),
    };
    let res = resultant(f, &f.derivative());
    let mut d = res / f.lc();
    if (n * (n - 1) / 2) % 2 == 1 {
        d = -d;
    }
    Ok(d)
}
