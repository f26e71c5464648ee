//! Generators, monomials and sparse rational elements shared by all rings.

mod element;
mod generator;
mod monomial;
mod parse;

pub use element::Element;
pub use generator::{GeneratorId, IndexSet, MAX_AMBIENT};
pub use monomial::Monomial;
pub use parse::parse_expression;

/// Arbitrary-precision rationals.
pub type Q = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(v: i64) -> Q {
    Q::from_integer(v.into())
}

/// Free product of two elements; fails on an ambient mismatch.
pub fn multiply(x: &Element, y: &Element) -> crate::error::Result<Element> {
    x.checked_mul(y)
}
