//! Gradings of polynomial rings by finitely generated abelian groups, graded
//! endomorphisms and the machinery around the wild automorphism ζ of the
//! quadric cone.

mod endo;
mod group;
mod ring;
mod wild;

use thiserror::Error;

use crate::polyring::{Exponent, PolyError};

pub use endo::{elementary, shear_family, single_shear, verify_inverse, Elementary, EndoKind, GradedEndo, Neither, Normalization};
pub use group::{AbGroup, GroupElem};
pub use ring::{DegreeMap, GradedRing};
pub use wild::{
    certify_rho, delta, nagata, nagata_homogeneous, quadric_ring, rho_replace, tame_generators, tame_search, transpose_map, wildness_certificate, zeta_chain_5,
    zeta, zeta_inverse, RhoCertificate, TameSearch, Wildness,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GradingError {
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("expected {expected} variable degrees, found {found}")]
    DegreeCount { expected: usize, found: usize },
    #[error("the zero polynomial is homogeneous of every degree")]
    ZeroPolynomial,
    #[error("terms {first:?} and {second:?} have different degrees")]
    NotHomogeneous { first: Exponent, second: Exponent },
    #[error("image of variable {var} is not homogeneous")]
    ImagesNotHomogeneous { var: usize },
    #[error("image of variable {var} is zero")]
    ZeroImage { var: usize },
    #[error("shear term involves the shifted variable {var}")]
    DependsOnTarget { var: usize },
    #[error("shear term is not homogeneous of the degree of variable {var}")]
    NotHomogeneousShear { var: usize },
    #[error("linear map is singular")]
    SingularLinear,
    #[error("linear map does not respect the variable degrees")]
    LinearNotGraded,
    #[error("variable index {0} out of range")]
    VariableIndex(usize),
    #[error("shear parameter is not homogeneous of degree zero")]
    NotDegreeZero,
    #[error("step {step} is not an elementary map")]
    NotElementary { step: usize },
    #[error("step {step} does not preserve the grading")]
    NotGradingPreserving { step: usize },
    #[error("maps live on different graded rings")]
    RingMismatch,
    #[error("the construction needs 4 variables with the quadric grading")]
    NotQuadric,
    #[error(transparent)]
    Poly(#[from] PolyError),
}
