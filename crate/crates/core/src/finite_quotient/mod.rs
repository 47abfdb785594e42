//! Finite linear groups over cyclotomic fields: pseudoreflections, the
//! quotient pipeline `H ⊂ H̃ ⊂ G` and invariants by averaging.

mod cyclo;
mod group;
mod invariants;
mod matrix;

use thiserror::Error;

pub use cyclo::{cyclotomic_poly, CycloNum};
pub use group::{close_group, quotient_report, MatGroup, QuotientReport, DEFAULT_CAP};
pub use invariants::{monomials, reynolds_invariants, CycloPoly};
pub use matrix::{rank, row_reduce, CycloMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("group closure exceeded {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("generator {index} is not invertible")]
    NotInvertible { index: usize },
    #[error("entries have different conductors")]
    ConductorMismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("no generators given")]
    NoGenerators,
    #[error("degree must be at least 1")]
    DegreeZero,
}
