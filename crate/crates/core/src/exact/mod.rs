//! Exact arithmetic kernel: big integers and rationals, polynomials over
//! `Z`, `Q` and `F_p`, dense matrices, factorization and real root counting.

pub mod fp;
pub mod integer;
pub mod matrix;
pub mod poly;
pub mod sturm;
pub mod zfactor;

/// Reduced rational with positive denominator.
pub type BigRat = num_rational::BigRational;

pub use integer::{factor_integer, is_prime, is_prime_u64, Factorization};
pub use poly::{poly_discriminant, resultant, IntPoly, RatPoly};
pub use sturm::count_real_roots;
pub use zfactor::{factor_poly, factor_poly_mod};
