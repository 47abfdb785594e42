//! Sparse multivariate polynomials over ℚ, polynomial maps, Jacobians and a
//! small text format.

mod map;
mod parse;
mod poly;

use thiserror::Error;

pub use map::{compose, compose_sequence, jacobian, poly_det, substitute, PolyMap};
pub use parse::parse_poly;
pub use poly::{default_names, fmt_rat, grlex_desc, in_ideal_power, Exponent, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("matrix is not square")]
    NonSquare,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
