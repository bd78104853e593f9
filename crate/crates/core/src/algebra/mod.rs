//! Exact arithmetic: prime-field residues, exponent vectors, sparse
//! polynomials, rationals and the polynomial text grammar.

mod bracket;
mod field;
mod monomial;
mod ops;
mod parse;
mod poly;
mod rational;

pub use bracket::{
    frobenius_power, in_bracket_max, pow_mod_bracket, square_and_multiply_truncated,
    BracketPowers, FrobeniusPower,
};
pub use field::{is_prime, PrimeField, MAX_CHARACTERISTIC};
pub use monomial::{Exponents, MAX_EXPONENT};
pub use ops::{gradient, initial_form, partial_derivative};
pub use parse::{parse_polynomial, poly_parse};
pub use poly::{Polynomial, Ring};
pub use rational::Rational;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable '{name}' at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),
    #[error("a ring needs at least one variable")]
    NoVariables,
    #[error("exponent exceeds 2^31")]
    ExponentOverflow,
    #[error("intermediate polynomial has {terms} terms, budget is {limit}")]
    TermBudget { terms: usize, limit: usize },
    #[error("zero polynomial has no initial form")]
    ZeroPolynomial,
    #[error("malformed rational '{0}'")]
    BadRational(String),
}
