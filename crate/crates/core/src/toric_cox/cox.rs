use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ToricError;
use crate::exactgeom::{dot, hnf, lex_desc, linalg, snf, solve_integer, to_rat_vec, Cone, GeomError, IntMatrix, IntVector};
use crate::grading::{AbGroup, GradedEndo, GradedRing, GroupElem, Normalization};
use crate::polyring::{compose, default_names, substitute, Poly, PolyMap};

/// Cox ring data of the affine toric variety of a full-dimensional pointed
/// cone `σ ⊂ N_ℚ`.
///
/// Variables `y₁, …, y_r` correspond to `rays` in the stored order: rays are
/// stably sorted by decreasing degree after the free part of the class group
/// has been put in Hermite form. The coordinates `x₁, …, x_k` of the variety
/// are the Hilbert basis of `σ∨ ∩ M`, ordered by decreasing exponent vector of
/// their pullbacks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxData {
    cone: Cone,
    rays: Vec<IntVector>,
    cl_group: AbGroup,
    var_degrees: Vec<GroupElem>,
    ray_pairing: IntMatrix,
    coordinates: Vec<IntVector>,
}

pub fn cox_data(cone: &Cone) -> Result<CoxData, ToricError> {
    let n = cone.ambient_rank();
    if !cone.is_full_dimensional() {
        return Err(GeomError::NotFullDimensional.into());
    }
    let input_rays = cone.rays().to_vec();
    let r = input_rays.len();
    // column i holds the ray vᵢ
    let pairing = IntMatrix::new(input_rays.clone()).transpose();
    let (s, _, v) = snf(&pairing);

    let mut free_cols = Vec::new();
    let mut torsion = Vec::new();
    for k in 0..r {
        let d = if k < n { s.get(k, k).clone() } else { BigInt::zero() };
        if d.is_zero() {
            free_cols.push(k);
        } else if !d.is_one() {
            torsion.push((k, d));
        }
    }
    let group = AbGroup::new(free_cols.len(), torsion.iter().map(|(_, d)| d.clone()).collect())?;

    // free parts in Hermite form, one row per free coordinate
    let free_t = IntMatrix::from_rows(r, free_cols.iter().map(|&k| v.column(k)).collect()).expect("columns of V");
    let free_t = if free_t.nrows() > 0 { hnf(&free_t).0 } else { free_t };
    let degrees: Vec<GroupElem> = (0..r)
        .map(|i| {
            let free = (0..free_cols.len()).map(|j| free_t.get(j, i).clone()).collect();
            let tors = torsion.iter().map(|(k, _)| v.get(i, *k).clone()).collect();
            group.elem(free, tors).expect("shape matches")
        })
        .collect();

    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&a, &b| {
        lex_desc(&degrees[a].free, &degrees[b].free).then_with(|| degrees[a].torsion.cmp(&degrees[b].torsion))
    });
    let rays: Vec<IntVector> = order.iter().map(|&i| input_rays[i].clone()).collect();
    let var_degrees: Vec<GroupElem> = order.iter().map(|&i| degrees[i].clone()).collect();
    let ray_pairing = IntMatrix::new(rays.clone()).transpose();

    let mut coordinates = dual_hilbert_basis(cone)?;
    let pair = |u: &IntVector| -> IntVector { rays.iter().map(|v| dot(u, v)).collect() };
    coordinates.sort_by(|a, b| lex_desc(&pair(a), &pair(b)));

    Ok(CoxData {
        cone: cone.clone(),
        rays,
        cl_group: group,
        var_degrees,
        ray_pairing,
        coordinates,
    })
}

/// Hilbert basis of `σ∨ ∩ M` in the standard coordinates of `M = ℤⁿ`.
fn dual_hilbert_basis(cone: &Cone) -> Result<Vec<IntVector>, ToricError> {
    let dual = cone.dual()?;
    let basis = cone.lattice().to_rat();
    let inv = linalg::inverse(&basis).expect("full-dimensional lattice basis is invertible");
    // u_L = B·u, so u = B⁻¹·u_L
    Ok(dual
        .hilbert_basis()
        .iter()
        .map(|ul| {
            let ul = to_rat_vec(ul);
            inv.iter()
                .map(|row| {
                    let x: crate::exactgeom::Rat = row.iter().zip(&ul).map(|(a, b)| a * b).sum();
                    assert!(x.is_integer());
                    x.to_integer()
                })
                .collect()
        })
        .collect())
}

impl CoxData {
    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn cl_group(&self) -> &AbGroup {
        &self.cl_group
    }

    pub fn var_degrees(&self) -> &[GroupElem] {
        &self.var_degrees
    }

    /// Entry `(j, i)` is `⟨eⱼ, vᵢ⟩`.
    pub fn ray_pairing(&self) -> &IntMatrix {
        &self.ray_pairing
    }

    /// Characters used as coordinates `x₁, …, x_k`.
    pub fn coordinates(&self) -> &[IntVector] {
        &self.coordinates
    }

    pub fn num_vars(&self) -> usize {
        self.rays.len()
    }

    pub fn ring(&self) -> GradedRing {
        GradedRing::new(self.cl_group.clone(), self.var_degrees.clone()).expect("degrees live in the class group")
    }

    pub fn coordinate_names(&self) -> Vec<String> {
        default_names("x", self.coordinates.len())
    }

    /// `(⟨u, vᵢ⟩)ᵢ`.
    pub fn exponent(&self, u: &[BigInt]) -> Result<IntVector, ToricError> {
        if u.len() != self.cone.ambient_rank() {
            return Err(ToricError::DimensionMismatch {
                expected: self.cone.ambient_rank(),
                found: u.len(),
            });
        }
        Ok(self.ray_pairing.left_mul(u))
    }

    /// `χᵘ ↦ ∏ yᵢ^⟨u,vᵢ⟩`.
    pub fn pullback(&self, u: &[BigInt]) -> Result<Poly, ToricError> {
        let e = self.exponent(u)?;
        if e.iter().any(|x| x.is_negative()) {
            return Err(ToricError::NotInDualCone { u: u.to_vec() });
        }
        let exps = e.iter().map(|x| u32::try_from(x).map_err(|_| ToricError::ExponentOverflow)).collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::monomial(self.num_vars(), exps, crate::exactgeom::rat(1)))
    }

    /// `x_j ↦ q*(x_j)` as a map from the coordinates to the Cox ring.
    pub fn pullback_map(&self) -> PolyMap {
        let images = self.coordinates.iter().map(|u| self.pullback(u).expect("Hilbert basis lies in the dual cone")).collect();
        PolyMap::new(self.num_vars(), images).expect("monomials in the Cox ring")
    }

    /// Character with the given pullback exponent, if one exists.
    pub fn character_of(&self, exponent: &[BigInt]) -> Option<IntVector> {
        solve_integer(&self.ray_pairing, exponent)
    }

    /// Whether `φ` lifts `ψ`: `φ` normalizes the grading and
    /// `φ*(q*(ψ*(x_j))) = q*(x_j)` for every coordinate, so that `ψ` and `φ`
    /// act on functions through their inverses.
    pub fn verify_lift(&self, psi: &PolyMap, phi: &GradedEndo) -> Result<bool, ToricError> {
        let k = self.coordinates.len();
        if psi.source_vars() != k || psi.target_vars() != k {
            return Err(ToricError::DimensionMismatch {
                expected: k,
                found: psi.source_vars(),
            });
        }
        if phi.ring() != &self.ring() {
            return Err(ToricError::DimensionMismatch {
                expected: self.num_vars(),
                found: phi.ring().num_vars(),
            });
        }
        if let Normalization::Neither(_) = phi.check_normalizes() {
            return Ok(false);
        }
        let q = self.pullback_map();
        let lhs = compose(&compose(psi, &q)?, phi.map())?;
        Ok(lhs == q)
    }

    /// Index of the first relation `R(x)` with `q*(R(ψ)) ≠ 0`.
    pub fn check_relations(&self, psi: &PolyMap, relations: &[Poly]) -> Result<Option<usize>, ToricError> {
        let q = self.pullback_map();
        for (i, rel) in relations.iter().enumerate() {
            let image = substitute(&substitute(rel, psi)?, &q)?;
            if !image.is_zero() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

/// Cone over the unit square, whose toric variety is the quadric cone
/// `x₁x₄ = x₂x₃`.
pub fn quadric_cone() -> Cone {
    let rays: Vec<IntVector> = [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]]
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    Cone::new(3, &rays).expect("pointed cone")
}

fn x(i: usize) -> Poly {
    Poly::var(4, i)
}

fn tau_with_sign(sign: i64) -> PolyMap {
    let s = Poly::constant(4, crate::exactgeom::rat(sign));
    let d = &x(2) - &x(1);
    let shift = &s * &(&x(0) * &d);
    let x4 = &(&x(3) + &(&s * &(&(&x(2) + &x(1)) * &d))) + &(&x(0) * &d.pow(2));
    PolyMap::new(4, vec![x(0), &x(1) + &shift, &x(2) + &shift, x4]).unwrap()
}

/// The automorphism `τ` of the quadric cone in the coordinates of [`quadric_cone`].
pub fn tau() -> PolyMap {
    tau_with_sign(1)
}

pub fn tau_inverse() -> PolyMap {
    tau_with_sign(-1)
}

/// `x₁x₄ − x₂x₃`.
pub fn quadric_relation() -> Poly {
    &(&x(0) * &x(3)) - &(&x(1) * &x(2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::int_vec;
    use crate::grading::{quadric_ring, zeta};
    use crate::polyring::parse_poly;

    #[test]
    fn quadric_data() {
        let cd = cox_data(&quadric_cone()).unwrap();
        assert_eq!(cd.cl_group(), &AbGroup::free(1));
        assert_eq!(cd.ring(), quadric_ring());
        let names = default_names("y", 4);
        let expect: Vec<Poly> = ["y1*y3", "y1*y4", "y2*y3", "y2*y4"].iter().map(|s| parse_poly(s, &names).unwrap()).collect();
        assert_eq!(cd.pullback_map().images(), &expect[..]);
    }

    #[test]
    fn orthant_and_cyclic() {
        let cd = cox_data(&Cone::new(3, &[int_vec(&[1, 0, 0]), int_vec(&[0, 1, 0]), int_vec(&[0, 0, 1])]).unwrap()).unwrap();
        assert!(cd.cl_group().is_trivial());
        assert_eq!(cd.pullback(&int_vec(&[0, 0, 0])).unwrap(), Poly::one(3));
        assert_eq!(cd.pullback(&int_vec(&[1, 0, 0])).unwrap().total_degree(), Some(1));
        assert!(matches!(cd.pullback(&int_vec(&[-1, 0, 0])), Err(ToricError::NotInDualCone { .. })));

        let cd = cox_data(&Cone::new(2, &[int_vec(&[1, 0]), int_vec(&[1, 2])]).unwrap()).unwrap();
        assert_eq!(cd.cl_group(), &AbGroup::cyclic(2).unwrap());
        for d in cd.var_degrees() {
            assert_eq!(d.torsion, int_vec(&[1]));
        }
    }

    #[test]
    fn lift_of_tau() {
        let cd = cox_data(&quadric_cone()).unwrap();
        let r = cd.ring();
        let z = GradedEndo::new(&r, zeta()).unwrap();
        let id = GradedEndo::identity(&r);
        assert!(cd.verify_lift(&tau(), &z).unwrap());
        assert!(cd.verify_lift(&PolyMap::identity(4), &id).unwrap());
        assert!(!cd.verify_lift(&tau(), &id).unwrap());
        let zi = GradedEndo::new(&r, crate::grading::zeta_inverse()).unwrap();
        assert!(cd.verify_lift(&tau_inverse(), &zi).unwrap());
        assert_eq!(cd.check_relations(&tau(), &[quadric_relation()]).unwrap(), None);
        let bad = PolyMap::new(4, vec![x(0), x(0), x(2), x(3)]).unwrap();
        assert_eq!(cd.check_relations(&bad, &[quadric_relation()]).unwrap(), Some(0));
    }

    #[test]
    fn not_full_dimensional() {
        let c = Cone::new(3, &[int_vec(&[1, 0, 0]), int_vec(&[0, 1, 0])]).unwrap();
        assert!(matches!(cox_data(&c), Err(ToricError::Geom(GeomError::NotFullDimensional))));
    }
}
