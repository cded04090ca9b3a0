//! Exact sparse multivariate polynomials over the rationals.
//!
//! Every variable carries two weights: a positive reparametrization weight
//! (the derivative order of a jet coordinate) and an integer vector GL-weight.
//! Polynomials are stored as a map from exponent vectors to nonzero
//! coefficients, ordered graded-lexicographically on the fixed variable order,
//! so equality is equality of term maps and printing is reproducible.

mod derivation;
mod polynomial;
mod table;

pub use derivation::Derivation;
pub use polynomial::{Grading, Monomial, Polynomial};
pub use table::{VariableSpec, VariableTable};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `p/q`, or `p` when the denominator is 1.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p/q` or `p` into a rational.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
