//! Affine monoids, their divisor theories, and extension of embeddings into
//! free monoids through the divisor theory.
//!
//! Monoids are written additively: a free monoid is `ℤʳ_{≥0}` and a prime
//! element is a coordinate vector. All bounded searches measure the size of a
//! monoid element by the coordinate sum of its image in the relevant free
//! monoid.

mod extension;
mod monoid;
mod search;
mod theory;

use thiserror::Error;

use crate::exactgeom::{GeomError, IntVector};

pub use extension::{check_star_star_witness, check_star_witness, extend_embedding, ExtensionResult, MonoidHom};
pub use monoid::{is_saturated, AffineMonoid, Saturation};
pub use search::nonneg_combination;
pub use theory::{divisor_theory, verify_divisor_axioms, AxiomReport, DivisorTheory, FreeEmbedding};

/// Default bound on the coordinate sum of monoid elements in bounded checks.
pub const DEFAULT_DEPTH: u32 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("generator {0} is zero")]
    ZeroGenerator(usize),
    #[error("monoid has no generators")]
    Empty,
    #[error("monoid is not saturated; {witness:?} lies in the cone and the group but not in the monoid")]
    NotSaturated { witness: IntVector },
    #[error("image of generator {0} has a negative entry")]
    NegativeImage(usize),
    #[error("image of generator {0} is zero")]
    ZeroImage(usize),
    #[error("expected {expected} images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("images have inconsistent lengths")]
    ImageLength,
    #[error("generator images violate the relation {relation:?} among the generators")]
    InconsistentImages { relation: IntVector },
    #[error("neither a violation nor a unique extension was found within depth {depth}")]
    DepthInsufficient { depth: u32 },
}
