//! Scalars for the skein calculus: the field Q(v), v = q^(1/6).
//!
//! Every power of q occurring in the theory is an integer power of v
//! (q = v^6, q^(1/2) = v^3, q^(1/3) = v^2), so one Laurent variable suffices.
//! [`LaurentPoly`] is a sparse Laurent polynomial with exact rational
//! coefficients; [`RatFunc`] is a quotient of two of them kept in a canonical
//! reduced form so that representation equality is field-element equality.

mod jsonfmt;
mod laurent;
mod numeric;
mod qnum;
mod ratfunc;

pub use jsonfmt::{parse_rational, rational_string};
pub use laurent::LaurentPoly;
pub use numeric::eval_ratfunc;
pub use qnum::{qbinom, qint};
pub use ratfunc::RatFunc;

use thiserror::Error;

/// Arbitrary-precision rational coefficient.
pub type Rational = num_rational::BigRational;

/// Errors from exact scalar arithmetic.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    /// Division by the zero rational function.
    #[error("division by zero rational function")]
    DivisionByZero,
    /// Numerical evaluation hit a zero of the denominator.
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    /// A serialized scalar failed to parse.
    #[error("malformed scalar: {0}")]
    Parse(String),
}

/// Convenience: rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
