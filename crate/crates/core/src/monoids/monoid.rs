use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::search::nonneg_combination;
use super::MonoidError;
use crate::exactgeom::{dot, lattice_basis, linalg, to_rat_vec, Cone, GeomError, IntMatrix, IntVector, Rat};

/// A finitely generated submonoid of ℤⁿ with pointed cone.
///
/// The group `L` defaults to the group generated by the generators. A larger
/// lattice may be supplied, in which case `L` is that lattice intersected
/// with the span of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMonoid {
    ambient_rank: usize,
    generators: Vec<IntVector>,
    cone: Cone,
}

impl AffineMonoid {
    pub fn new(ambient_rank: usize, generators: Vec<IntVector>) -> Result<AffineMonoid, MonoidError> {
        Self::validate(ambient_rank, &generators)?;
        let group = lattice_basis(&IntMatrix::from_rows(ambient_rank, generators.clone())?);
        Self::build(ambient_rank, generators, &group)
    }

    pub fn with_lattice(ambient_rank: usize, generators: Vec<IntVector>, lattice: &IntMatrix) -> Result<AffineMonoid, MonoidError> {
        Self::validate(ambient_rank, &generators)?;
        Self::build(ambient_rank, generators, lattice)
    }

    pub fn from_i64(ambient_rank: usize, generators: &[&[i64]]) -> Result<AffineMonoid, MonoidError> {
        Self::new(ambient_rank, generators.iter().map(|g| crate::exactgeom::int_vec(g)).collect())
    }

    fn validate(ambient_rank: usize, generators: &[IntVector]) -> Result<(), MonoidError> {
        if generators.is_empty() {
            return Err(MonoidError::Empty);
        }
        for (i, g) in generators.iter().enumerate() {
            if g.len() != ambient_rank {
                return Err(GeomError::Dimension {
                    expected: ambient_rank,
                    found: g.len(),
                }
                .into());
            }
            if g.iter().all(Zero::is_zero) {
                return Err(MonoidError::ZeroGenerator(i));
            }
        }
        Ok(())
    }

    fn build(ambient_rank: usize, generators: Vec<IntVector>, lattice: &IntMatrix) -> Result<AffineMonoid, MonoidError> {
        let cone = Cone::with_lattice(ambient_rank, &generators, lattice)?;
        Ok(AffineMonoid {
            ambient_rank,
            generators,
            cone,
        })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[IntVector] {
        &self.generators
    }

    /// Basis (rows) of the group `L`.
    pub fn group_basis(&self) -> &IntMatrix {
        self.cone.lattice()
    }

    pub fn rank(&self) -> usize {
        self.cone.dim()
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    /// Coordinates of a lattice point with respect to the group basis.
    pub fn coords(&self, v: &[BigInt]) -> Option<IntVector> {
        self.cone.lattice_coords(v)
    }

    /// Values of the facet functionals of the cone; injective on `L` and
    /// nonnegative exactly on the cone.
    pub(crate) fn facet_values(&self, v: &[BigInt]) -> Option<IntVector> {
        let c = self.coords(v)?;
        Some(self.cone.facets().iter().map(|f| dot(f, &c)).collect())
    }

    /// Exact membership test `v ∈ Γ`.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let Some(target) = self.facet_values(v) else {
            return false;
        };
        if target.iter().any(|x| x.is_negative()) {
            return false;
        }
        let vecs: Vec<IntVector> = self.generators.iter().map(|g| self.facet_values(g).expect("generator in L")).collect();
        nonneg_combination(&vecs, &target).is_some()
    }

    /// Rank of the generator matrix over ℚ.
    pub(crate) fn generator_rank(&self) -> usize {
        let rows: Vec<Vec<Rat>> = self.generators.iter().map(|g| to_rat_vec(g)).collect();
        linalg::rank(&rows, self.ambient_rank)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Saturation {
    pub saturated: bool,
    /// A Hilbert basis element of `σ ∩ L` outside the monoid.
    pub witness: Option<IntVector>,
    pub hilbert_basis: Vec<IntVector>,
}

/// Decides `Γ = σ ∩ L` by testing each Hilbert basis element of `σ ∩ L` for membership.
pub fn is_saturated(m: &AffineMonoid) -> Saturation {
    let hilbert_basis = m.cone().hilbert_basis();
    let witness = hilbert_basis.iter().find(|h| !m.contains(h)).cloned();
    Saturation {
        saturated: witness.is_none(),
        witness,
        hilbert_basis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::int_vec;

    #[test]
    fn monoid_469_is_saturated() {
        let m = AffineMonoid::from_i64(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        assert_eq!(m.rank(), 2);
        let s = is_saturated(&m);
        assert!(s.saturated);
        assert_eq!(s.witness, None);
    }

    #[test]
    fn missing_root_is_witness() {
        let gens = vec![int_vec(&[2, 0]), int_vec(&[0, 1])];
        let m = AffineMonoid::with_lattice(2, gens.clone(), &IntMatrix::identity(2)).unwrap();
        let s = is_saturated(&m);
        assert!(!s.saturated);
        assert_eq!(s.witness, Some(int_vec(&[1, 0])));
        // in its own group the same monoid is saturated
        assert!(is_saturated(&AffineMonoid::new(2, gens).unwrap()).saturated);
    }

    #[test]
    fn orthant_is_saturated() {
        let m = AffineMonoid::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        assert!(is_saturated(&m).saturated);
    }

    #[test]
    fn membership() {
        let m = AffineMonoid::from_i64(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]).unwrap();
        assert_eq!(m.rank(), 3);
        assert!(m.contains(&int_vec(&[2, 2, 2, 2])));
        assert!(!m.contains(&int_vec(&[1, 0, 0, 0])));
        assert!(!m.contains(&int_vec(&[2, 0, 1, 0])));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(AffineMonoid::from_i64(2, &[&[0, 0]]), Err(MonoidError::ZeroGenerator(0)));
        assert_eq!(
            AffineMonoid::from_i64(2, &[&[1, 0], &[-1, 0]]),
            Err(MonoidError::Geom(GeomError::NonPointed))
        );
        assert_eq!(AffineMonoid::new(2, vec![]), Err(MonoidError::Empty));
    }
}
