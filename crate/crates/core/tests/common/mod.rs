//! Strategies and per-case checks shared by the property and acceptance
//! suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestError, TestRunner};

use nf_core::exact::integer::small_primes;
use nf_core::exact::{factor_integer, BigRat, IntPoly};
use nf_core::numberfield::NumberField;
use nf_core::quadform::{diagonalize_rational, hasse_invariant, hilbert_symbol, hilbert_symbol_int, jordan_form_odd, trace_profile};
use nf_core::splitting::{split_prime, split_prime_dedekind, split_prime_order, Place};
use nf_core::zeta::weakly_equivalent;

pub type CaseResult = Result<(), TestCaseError>;

pub const CASES: u32 = 1000;
pub const ORACLE_PRIMES: [u64; 7] = [2, 3, 5, 7, 11, 13, 43];

pub fn config() -> Config {
    Config {
        cases: CASES,
        max_global_rejects: 100_000,
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn runner() -> TestRunner {
    TestRunner::new(config())
}

/// Monic irreducible polynomials of degree 2 to 5 with small coefficients.
pub fn field() -> impl Strategy<Value = NumberField> {
    (2usize..=5)
        .prop_flat_map(|n| prop::collection::vec(-9i64..=9, n))
        .prop_filter_map("reducible", |mut c| {
            c.push(1);
            NumberField::new(IntPoly::from_i64(&c)).ok()
        })
}

pub fn nonzero(bound: i64) -> impl Strategy<Value = i64> + Clone {
    (-bound..=bound).prop_filter("nonzero", |v| *v != 0)
}

fn vp(x: &BigInt, p: u64) -> u32 {
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut v = 0;
    while !x.is_zero() && (&x % &p).is_zero() {
        x /= &p;
        v += 1;
    }
    v
}

fn add_primes(out: &mut Vec<Place>, n: &BigInt) {
    for p in factor_integer(n).unwrap().primes() {
        let place = Place::Prime(u64::try_from(p).unwrap());
        if !out.contains(&place) {
            out.push(place);
        }
    }
}

/// Solvability of `a x^2 + b y^2 = z^2` in `Q_p` by search for a primitive
/// solution modulo a power of `p` large enough for Hensel lifting.
pub fn solvable(a: i64, b: i64, p: u64) -> bool {
    let p = p as i64;
    let reduce = |mut v: i64| {
        while v % (p * p) == 0 {
            v /= p * p;
        }
        v
    };
    let (a, b) = (reduce(a), reduce(b));
    let m = if p == 2 { 32 } else { p * p * p };
    let r = |v: i64| v.rem_euclid(m) as usize;
    let mut squares = vec![false; m as usize];
    let mut b_squares = vec![false; m as usize];
    for x in 0..m {
        squares[r(x * x)] = true;
        b_squares[r(b * x * x)] = true;
    }
    // scale a unit coordinate to 1
    (0..m).any(|y| squares[r(a + b * y * y)])
        || (0..m).any(|x| squares[r(a * x * x + b)])
        || (0..m).any(|x| b_squares[r(1 - a * x * x)])
}

pub fn hilbert_matches_oracle(a: i64, b: i64, p: u64) -> CaseResult {
    let h = hilbert_symbol_int(&BigInt::from(a), &BigInt::from(b), Place::Prime(p)).unwrap();
    prop_assert_eq!(h == 1, solvable(a, b, p), "({}, {})_{}", a, b, p);
    Ok(())
}

pub fn hilbert_reciprocity(a: i64, b: i64, c: i64, d: i64) -> CaseResult {
    let x = BigRat::new(BigInt::from(a), BigInt::from(c));
    let y = BigRat::new(BigInt::from(b), BigInt::from(d));
    let mut places = vec![Place::Infinite, Place::Prime(2)];
    for v in [a, b, c, d] {
        add_primes(&mut places, &BigInt::from(v));
    }
    let product: i8 = places.iter().map(|&q| hilbert_symbol(&x, &y, q).unwrap()).product();
    prop_assert_eq!(product, 1, "({}, {})", x, y);
    Ok(())
}

pub fn hasse_product_formula(k: &NumberField) -> CaseResult {
    prop_assert_eq!(trace_profile(k).unwrap().product(), 1);
    // independent support: every prime dividing a diagonal entry
    let diag = diagonalize_rational(&k.trace_gram()).unwrap();
    let mut support = vec![Place::Infinite, Place::Prime(2)];
    for e in diag.entries() {
        add_primes(&mut support, e.numer());
        add_primes(&mut support, e.denom());
    }
    let product: i8 = support.iter().map(|&q| hasse_invariant(&diag, q)).product();
    prop_assert_eq!(product, 1);
    Ok(())
}

pub fn residue_degrees_sum_to_degree(k: &NumberField) -> CaseResult {
    let n = k.degree() as u32;
    let mut primes: Vec<u64> = small_primes(50);
    for p in k.disc_factorization().primes() {
        primes.push(u64::try_from(p).unwrap());
    }
    for p in primes {
        let s = split_prime(k, p).unwrap();
        let total: u32 = s.pairs.iter().map(|q| q.e * q.f).sum();
        prop_assert_eq!(total, n, "p = {}", p);
    }
    Ok(())
}

pub fn tame_discriminant_exponent(k: &NumberField) -> CaseResult {
    let n = k.degree() as u32;
    for p in k.disc_factorization().primes() {
        let p = u64::try_from(p).unwrap();
        let s = split_prime(k, p).unwrap();
        prop_assert!(s.is_ramified());
        if s.is_tame() {
            prop_assert_eq!(vp(k.disc(), p), n - s.residue_sum(), "p = {}", p);
        } else {
            prop_assert!(vp(k.disc(), p) > n - s.residue_sum(), "p = {}", p);
        }
    }
    for p in small_primes(50) {
        if !(k.disc() % BigInt::from(p)).is_zero() {
            prop_assert!(!split_prime(k, p).unwrap().is_ramified(), "p = {}", p);
        }
    }
    Ok(())
}

pub fn jordan_at_odd_primes(k: &NumberField) -> CaseResult {
    let g = k.trace_gram();
    let diag = diagonalize_rational(&g).unwrap();
    for p in k.disc_factorization().primes() {
        let p = u64::try_from(p).unwrap();
        if p == 2 {
            continue;
        }
        let j = jordan_form_odd(&g, p).unwrap();
        prop_assert_eq!(j.dim(), k.degree());
        prop_assert_eq!(
            hasse_invariant(&j.diagonal(), Place::Prime(p)),
            hasse_invariant(&diag, Place::Prime(p)),
            "p = {}",
            p
        );
        if split_prime(k, p).unwrap().is_tame() {
            prop_assert!(j.max_valuation() <= 1, "p = {}", p);
            prop_assert_eq!(j.p_part_dim as u32, vp(k.disc(), p), "p = {}", p);
        }
    }
    Ok(())
}

pub fn dedekind_and_order_agree(k: &NumberField) -> CaseResult {
    for p in small_primes(60) {
        if (k.index() % BigInt::from(p)).is_zero() {
            continue;
        }
        prop_assert_eq!(split_prime_dedekind(k, p).unwrap(), split_prime_order(k, p).unwrap(), "p = {}", p);
    }
    Ok(())
}

pub fn weak_equivalence_reflexive_symmetric(k: &NumberField, l: &NumberField) -> CaseResult {
    prop_assert!(weakly_equivalent(k, k).unwrap().0);
    prop_assert_eq!(weakly_equivalent(k, l).unwrap().0, weakly_equivalent(l, k).unwrap().0);
    Ok(())
}

fn outcome<T: std::fmt::Debug>(r: Result<(), TestError<T>>) -> Result<(), String> {
    r.map_err(|e| match e {
        TestError::Abort(m) => format!("aborted: {m}"),
        TestError::Fail(m, v) => format!("{m}; minimal input {v:?}"),
    })
}

/// Run every property with the shared configuration.
pub fn run_all() -> Vec<(&'static str, Result<(), String>)> {
    vec![
        (
            "hilbert reciprocity",
            outcome(runner().run(&(nonzero(2000), nonzero(2000), 1i64..=30, 1i64..=30), |(a, b, c, d)| {
                hilbert_reciprocity(a, b, c, d)
            })),
        ),
        (
            "hilbert symbol vs solvability oracle",
            outcome(runner().run(&(nonzero(50), nonzero(50), 0..ORACLE_PRIMES.len()), |(a, b, i)| {
                hilbert_matches_oracle(a, b, ORACLE_PRIMES[i])
            })),
        ),
        ("hasse product formula", outcome(runner().run(&field(), |k| hasse_product_formula(&k)))),
        ("sum of e*f equals degree", outcome(runner().run(&field(), |k| residue_degrees_sum_to_degree(&k)))),
        ("tame exponent law", outcome(runner().run(&field(), |k| tame_discriminant_exponent(&k)))),
        ("jordan valuations and p-part", outcome(runner().run(&field(), |k| jordan_at_odd_primes(&k)))),
        ("dedekind vs order splitting", outcome(runner().run(&field(), |k| dedekind_and_order_agree(&k)))),
        (
            "weak equivalence reflexive and symmetric",
            outcome(runner().run(&(field(), field()), |(k, l)| weak_equivalence_reflexive_symmetric(&k, &l))),
        ),
    ]
}
