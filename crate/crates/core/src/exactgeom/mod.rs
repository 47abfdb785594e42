//! Exact integer and rational linear algebra, and rational polyhedral cones.

mod cone;
pub mod linalg;
mod matrix;
mod normal_form;

use thiserror::Error;

pub use cone::Cone;
pub use matrix::{content, dot, int, int_vec, lex_desc, primitive, primitive_from_rat, rat, to_rat_vec, IntMatrix, IntVector, Rat};
pub use normal_form::{hnf, invariant_factors, lattice_basis, left_kernel, saturated_span, snf, solve_integer};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("vector {0:?} is not in the lattice")]
    NotInLattice(IntVector),
    #[error("cone contains a line")]
    NonPointed,
    #[error("cone is not full-dimensional")]
    NotFullDimensional,
    #[error("matrix is not square")]
    NotSquare,
}

/// Edges of the dual cone, as primitive functionals on the lattice of `c`.
pub fn dual_cone(c: &Cone) -> Result<Cone, GeomError> {
    c.dual()
}

pub fn hilbert_basis(c: &Cone) -> Vec<IntVector> {
    c.hilbert_basis()
}

pub fn cone_contains(c: &Cone, v: &[num_bigint::BigInt]) -> bool {
    c.contains(v)
}
