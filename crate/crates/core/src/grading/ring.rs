use num_bigint::BigInt;

use super::{AbGroup, GradingError, GroupElem};
use crate::exactgeom::{lattice_basis, left_kernel, solve_integer, IntVector};
use crate::polyring::{default_names, Poly};

/// `𝕂[y₁,…,y_n]` graded by an abelian group, each variable homogeneous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRing {
    group: AbGroup,
    var_degrees: Vec<GroupElem>,
}

impl GradedRing {
    pub fn new(group: AbGroup, var_degrees: Vec<GroupElem>) -> Result<GradedRing, GradingError> {
        let var_degrees = var_degrees
            .into_iter()
            .map(|d| group.elem(d.free, d.torsion))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GradedRing { group, var_degrees })
    }

    /// `ℤ`-grading with the given variable degrees.
    pub fn integer(degrees: &[i64]) -> GradedRing {
        let group = AbGroup::free(1);
        let var_degrees = degrees
            .iter()
            .map(|&d| GroupElem {
                free: vec![BigInt::from(d)],
                torsion: Vec::new(),
            })
            .collect();
        GradedRing { group, var_degrees }
    }

    /// `ℤ/n`-grading with the given residues.
    pub fn cyclic(n: u64, degrees: &[i64]) -> Result<GradedRing, GradingError> {
        let group = AbGroup::cyclic(n)?;
        let var_degrees = degrees
            .iter()
            .map(|&d| group.elem(Vec::new(), vec![BigInt::from(d)]))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GradedRing { group, var_degrees })
    }

    pub fn group(&self) -> &AbGroup {
        &self.group
    }

    pub fn num_vars(&self) -> usize {
        self.var_degrees.len()
    }

    pub fn var_degrees(&self) -> &[GroupElem] {
        &self.var_degrees
    }

    pub fn var_degree(&self, i: usize) -> &GroupElem {
        &self.var_degrees[i]
    }

    pub fn names(&self) -> Vec<String> {
        default_names("y", self.num_vars())
    }

    pub fn monomial_degree(&self, exponent: &[u32]) -> GroupElem {
        let ks: Vec<BigInt> = exponent.iter().map(|&e| BigInt::from(e)).collect();
        self.group.sum(ks.iter().zip(&self.var_degrees))
    }

    /// Common degree of all terms of a nonzero polynomial.
    pub fn degree_of(&self, p: &Poly) -> Result<GroupElem, GradingError> {
        let mut terms = p.sorted_terms().into_iter();
        let Some((first, _)) = terms.next() else {
            return Err(GradingError::ZeroPolynomial);
        };
        let d = self.monomial_degree(first);
        for (e, _) in terms {
            if self.monomial_degree(e) != d {
                return Err(GradingError::NotHomogeneous {
                    first: first.clone(),
                    second: e.clone(),
                });
            }
        }
        Ok(d)
    }

    /// Zero counts as homogeneous.
    pub fn is_homogeneous(&self, p: &Poly) -> bool {
        !matches!(self.degree_of(p), Err(GradingError::NotHomogeneous { .. }))
    }

    pub fn is_homogeneous_of(&self, p: &Poly, d: &GroupElem) -> bool {
        match self.degree_of(p) {
            Ok(e) => &e == d,
            Err(GradingError::ZeroPolynomial) => true,
            Err(_) => false,
        }
    }
}

/// The group map `φ₀` induced on the subgroup `S` generated by the variable
/// degrees by `deg yᵢ ↦ targetᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeMap {
    group: AbGroup,
    sources: Vec<GroupElem>,
    targets: Vec<GroupElem>,
}

impl DegreeMap {
    /// Fails with a relation `λ` (over the degrees) that the targets violate.
    pub fn induced(ring: &GradedRing, targets: Vec<GroupElem>) -> Result<DegreeMap, IntVector> {
        let group = ring.group.clone();
        let sources = ring.var_degrees.clone();
        assert_eq!(sources.len(), targets.len());
        if group.ngens() > 0 {
            let kernel = left_kernel(&group.stacked(&sources));
            for z in kernel.rows() {
                let lambda = &z[..sources.len()];
                if group.sum(lambda.iter().zip(&targets)) != group.zero() {
                    return Err(lambda.to_vec());
                }
            }
        }
        Ok(DegreeMap { group, sources, targets })
    }

    pub fn identity(ring: &GradedRing) -> DegreeMap {
        DegreeMap {
            group: ring.group.clone(),
            sources: ring.var_degrees.clone(),
            targets: ring.var_degrees.clone(),
        }
    }

    pub fn targets(&self) -> &[GroupElem] {
        &self.targets
    }

    pub fn is_identity(&self) -> bool {
        self.sources == self.targets
    }

    /// `φ₀(u)`, defined for `u` in the subgroup generated by the degrees.
    pub fn apply(&self, u: &GroupElem) -> Option<GroupElem> {
        if self.group.ngens() == 0 {
            return Some(self.group.zero());
        }
        let c = solve_integer(&self.group.stacked(&self.sources), &self.group.to_vector(u))?;
        Some(self.group.sum(c.iter().zip(&self.targets)))
    }

    /// Images of the standard generators when the degrees generate the group.
    pub fn generator_images(&self) -> Option<Vec<GroupElem>> {
        (0..self.group.ngens()).map(|i| self.apply(&self.group.generator(i))).collect()
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &DegreeMap) -> Option<DegreeMap> {
        let targets = other.targets.iter().map(|t| self.apply(t)).collect::<Option<Vec<_>>>()?;
        Some(DegreeMap {
            group: self.group.clone(),
            sources: other.sources.clone(),
            targets,
        })
    }

    /// `Ok` when `φ₀` is an automorphism of the degree subgroup, otherwise an
    /// element witnessing failure: a degree outside the image, or an image
    /// outside the subgroup.
    pub fn check_automorphism(&self) -> Result<(), GroupElem> {
        if self.group.ngens() == 0 {
            return Ok(());
        }
        let src = self.group.stacked(&self.sources);
        let tgt = self.group.stacked(&self.targets);
        if lattice_basis(&src) == lattice_basis(&tgt) {
            return Ok(());
        }
        for d in &self.sources {
            if solve_integer(&tgt, &self.group.to_vector(d)).is_none() {
                return Err(d.clone());
            }
        }
        for t in &self.targets {
            if solve_integer(&src, &self.group.to_vector(t)).is_none() {
                return Err(t.clone());
            }
        }
        unreachable!("equal lattices have equal Hermite bases")
    }
}
