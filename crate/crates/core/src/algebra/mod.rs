//! Exact scalars (Laurent rational functions, rationals, number fields) and
//! small dense matrices over them.

mod context;
mod extension;
mod laurent;
mod matrix;
mod parse;
mod ratfunc;
mod scalar;
mod univariate;

pub use context::VarContext;
pub use extension::{ExtElement, Modulus};
pub use laurent::{grlex_cmp, Exponents, LaurentPolynomial};
pub use matrix::{nullspace_of_rows, rank_of_rows, EchelonBasis, SquareMatrix, MAX_DIM};
pub use parse::parse_scalar;
pub use ratfunc::RationalFunction;
pub use scalar::{Backend, Scalar};
pub use univariate::UniPoly;

use num_bigint::BigInt;
use num_traits::One;

pub type Rational = num_rational::BigRational;

/// `p` or `p/q` with no whitespace.
pub fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Shorthand for `n/d`; panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}
