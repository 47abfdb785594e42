//! Cox rings of affine toric varieties: class group grading, pullback of
//! characters and lifts of automorphisms.

mod cox;

use thiserror::Error;

use crate::exactgeom::{GeomError, IntVector};
use crate::grading::GradingError;
use crate::polyring::PolyError;

pub use cox::{cox_data, quadric_cone, quadric_relation, tau, tau_inverse, CoxData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("character {u:?} is negative on a ray")]
    NotInDualCone { u: IntVector },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("exponent does not fit in 32 bits")]
    ExponentOverflow,
}
