//! Exact computations around Cox rings: divisor theories of affine monoids,
//! Cox gradings of affine toric varieties, quotients by finite matrix groups,
//! and graded automorphisms of polynomial rings.

pub mod exactgeom;
pub mod polyring;
pub mod monoids;
pub mod grading;
pub mod toric_cox;
pub mod finite_quotient;
