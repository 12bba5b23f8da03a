//! Exact sparse multivariate polynomials.

mod field;
mod hom;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use field::{Coeff, Field};
pub use hom::RingHom;
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder};
pub use parse::{parse_poly, MAX_EXPONENT};
pub use polynomial::{format_poly, Polynomial};
pub use ring::PolyRing;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("negative exponent at position {pos}")]
    NegativeExponent { pos: usize },
    #[error("implicit multiplication at position {pos}; write `*`")]
    ImplicitMultiplication { pos: usize },
    #[error("exponent too large at position {pos}")]
    ExponentOverflow { pos: usize },
    #[error("division by zero or by a non-constant at position {pos}")]
    BadDivision { pos: usize },
}

impl PolyError {
    /// Byte offset for parse errors.
    pub fn position(&self) -> Option<usize> {
        match self {
            PolyError::UnknownVariable { pos, .. }
            | PolyError::Syntax { pos, .. }
            | PolyError::NegativeExponent { pos }
            | PolyError::ImplicitMultiplication { pos }
            | PolyError::ExponentOverflow { pos }
            | PolyError::BadDivision { pos } => Some(*pos),
            _ => None,
        }
    }
}
