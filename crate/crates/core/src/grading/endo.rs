use num_traits::Zero;

use super::{DegreeMap, GradedRing, GradingError, GroupElem};
use crate::exactgeom::{linalg, IntVector, Rat};
use crate::polyring::{compose, Poly, PolyMap};

/// How a graded endomorphism was built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EndoKind {
    General,
    /// `yᵢ ↦ Σⱼ aᵢⱼ yⱼ`.
    Linear(Vec<Vec<Rat>>),
    /// `y_var ↦ y_var + f`.
    Shear { var: usize, f: Poly },
}

/// Input to [`elementary`].
#[derive(Clone, Debug)]
pub enum Elementary {
    Linear(Vec<Vec<Rat>>),
    Shear { var: usize, f: Poly },
}

/// An endomorphism of a graded polynomial ring with homogeneous images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedEndo {
    ring: GradedRing,
    map: PolyMap,
    degree_map: Option<DegreeMap>,
    kind: EndoKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalization {
    Preserves,
    Normalizes(DegreeMap),
    Neither(Neither),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Neither {
    /// A relation among the variable degrees that the image degrees break.
    NotWellDefined { relation: IntVector },
    /// The induced map on degrees is not bijective.
    NotInvertible { witness: GroupElem },
}

impl GradedEndo {
    pub fn new(ring: &GradedRing, map: PolyMap) -> Result<GradedEndo, GradingError> {
        Self::with_kind(ring, map, EndoKind::General)
    }

    fn with_kind(ring: &GradedRing, map: PolyMap, kind: EndoKind) -> Result<GradedEndo, GradingError> {
        let n = ring.num_vars();
        if map.source_vars() != n || map.target_vars() != n {
            return Err(GradingError::DegreeCount {
                expected: n,
                found: map.source_vars(),
            });
        }
        let mut targets = Vec::with_capacity(n);
        for (var, image) in map.images().iter().enumerate() {
            match ring.degree_of(image) {
                Ok(d) => targets.push(d),
                Err(GradingError::ZeroPolynomial) => return Err(GradingError::ZeroImage { var }),
                Err(_) => return Err(GradingError::ImagesNotHomogeneous { var }),
            }
        }
        let degree_map = DegreeMap::induced(ring, targets).ok();
        Ok(GradedEndo {
            ring: ring.clone(),
            map,
            degree_map,
            kind,
        })
    }

    pub fn identity(ring: &GradedRing) -> GradedEndo {
        GradedEndo {
            ring: ring.clone(),
            map: PolyMap::identity(ring.num_vars()),
            degree_map: Some(DegreeMap::identity(ring)),
            kind: EndoKind::General,
        }
    }

    pub fn ring(&self) -> &GradedRing {
        &self.ring
    }

    pub fn map(&self) -> &PolyMap {
        &self.map
    }

    pub fn kind(&self) -> &EndoKind {
        &self.kind
    }

    /// `None` when the image degrees do not come from a group endomorphism.
    pub fn degree_map(&self) -> Option<&DegreeMap> {
        self.degree_map.as_ref()
    }

    pub fn check_normalizes(&self) -> Normalization {
        let Some(dm) = &self.degree_map else {
            let targets = self
                .map
                .images()
                .iter()
                .map(|p| self.ring.degree_of(p).expect("images are homogeneous"))
                .collect();
            let relation = DegreeMap::induced(&self.ring, targets).expect_err("degree map failed to build");
            return Normalization::Neither(Neither::NotWellDefined { relation });
        };
        if dm.is_identity() {
            return Normalization::Preserves;
        }
        match dm.check_automorphism() {
            Ok(()) => Normalization::Normalizes(dm.clone()),
            Err(witness) => Normalization::Neither(Neither::NotInvertible { witness }),
        }
    }

    pub fn preserves_grading(&self) -> bool {
        self.check_normalizes() == Normalization::Preserves
    }

    /// `self ∘ other` in the convention of [`compose`]: component `i` is
    /// `selfᵢ(other)`.
    pub fn compose(&self, other: &GradedEndo) -> Result<GradedEndo, GradingError> {
        if self.ring != other.ring {
            return Err(GradingError::RingMismatch);
        }
        GradedEndo::new(&self.ring, compose(&self.map, &other.map)?)
    }

    /// The inverse of an elementary map, when it is invertible by shape.
    pub fn inverse(&self) -> Option<GradedEndo> {
        match &self.kind {
            EndoKind::Shear { var, f } if !f.involves(*var) => {
                elementary(&self.ring, Elementary::Shear { var: *var, f: -f }).ok()
            }
            EndoKind::Linear(a) => elementary(&self.ring, Elementary::Linear(linalg::inverse(a)?)).ok(),
            _ => None,
        }
    }

    /// Shears keep only the degree-one part of the added term.
    pub fn linear_part(&self) -> Result<GradedEndo, GradingError> {
        match &self.kind {
            EndoKind::Shear { var, f } => single_shear(&self.ring, *var, f.homogeneous_part(1)),
            _ => Ok(self.clone()),
        }
    }

    pub fn is_elementary(&self) -> bool {
        !matches!(self.kind, EndoKind::General)
    }

    /// Index of the variable a shear changes.
    pub fn shifted_var(&self) -> Option<usize> {
        match &self.kind {
            EndoKind::Shear { var, .. } => Some(*var),
            _ => None,
        }
    }
}

fn shear_map(n: usize, var: usize, f: &Poly) -> PolyMap {
    let mut images: Vec<Poly> = (0..n).map(|i| Poly::var(n, i)).collect();
    images[var] = &images[var] + f;
    PolyMap::new(n, images).expect("square map")
}

/// Elementary linear maps and shears `yᵢ ↦ yᵢ + f` with `f` free of `yᵢ`
/// and homogeneous of degree `deg yᵢ`.
pub fn elementary(ring: &GradedRing, kind: Elementary) -> Result<GradedEndo, GradingError> {
    let n = ring.num_vars();
    match kind {
        Elementary::Shear { var, f } => {
            if var >= n || f.nvars() != n {
                return Err(GradingError::VariableIndex(var));
            }
            if f.involves(var) {
                return Err(GradingError::DependsOnTarget { var });
            }
            if !ring.is_homogeneous_of(&f, ring.var_degree(var)) {
                return Err(GradingError::NotHomogeneousShear { var });
            }
            let map = shear_map(n, var, &f);
            GradedEndo::with_kind(ring, map, EndoKind::Shear { var, f })
        }
        Elementary::Linear(a) => {
            if a.len() != n || a.iter().any(|row| row.len() != n) {
                return Err(GradingError::DegreeCount {
                    expected: n,
                    found: a.len(),
                });
            }
            if linalg::rank(&a, n) < n {
                return Err(GradingError::SingularLinear);
            }
            let images = a
                .iter()
                .map(|row| {
                    Poly::from_terms(
                        n,
                        row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| {
                            let mut e = vec![0; n];
                            e[j] = 1;
                            (e, c.clone())
                        }),
                    )
                })
                .collect();
            let map = PolyMap::new(n, images)?;
            GradedEndo::with_kind(ring, map, EndoKind::Linear(a)).map_err(|e| match e {
                GradingError::ImagesNotHomogeneous { .. } => GradingError::LinearNotGraded,
                other => other,
            })
        }
    }
}

/// `y_var ↦ y_var + f` where `y_var + f` is homogeneous of degree
/// `deg y_var`; `f` may involve `y_var`, so the result need not be invertible.
pub fn single_shear(ring: &GradedRing, var: usize, f: Poly) -> Result<GradedEndo, GradingError> {
    let n = ring.num_vars();
    if var >= n || f.nvars() != n {
        return Err(GradingError::VariableIndex(var));
    }
    if !ring.is_homogeneous_of(&f, ring.var_degree(var)) {
        return Err(GradingError::NotHomogeneousShear { var });
    }
    let map = shear_map(n, var, &f);
    GradedEndo::with_kind(ring, map, EndoKind::Shear { var, f })
}

/// `yᵢ ↦ yᵢ + f·hᵏ` with `h` of degree zero.
pub fn shear_family(ring: &GradedRing, i: usize, f: &Poly, h: &Poly, k: u32) -> Result<GradedEndo, GradingError> {
    if i >= ring.num_vars() {
        return Err(GradingError::VariableIndex(i));
    }
    if h.involves(i) {
        return Err(GradingError::DependsOnTarget { var: i });
    }
    if !ring.is_homogeneous_of(h, &ring.group().zero()) || h.is_zero() {
        return Err(GradingError::NotDegreeZero);
    }
    if !ring.is_homogeneous_of(f, ring.var_degree(i)) {
        return Err(GradingError::NotHomogeneousShear { var: i });
    }
    elementary(ring, Elementary::Shear { var: i, f: f * &h.pow(k) })
}

/// Both composites are the identity map.
pub fn verify_inverse(e: &GradedEndo, e_inv: &GradedEndo) -> bool {
    if e.ring != e_inv.ring {
        return false;
    }
    let ok = |a: &PolyMap, b: &PolyMap| compose(a, b).map(|m| m.is_identity()).unwrap_or(false);
    ok(&e.map, &e_inv.map) && ok(&e_inv.map, &e.map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::{int_vec, rat};
    use crate::polyring::parse_poly;

    fn quadric() -> GradedRing {
        GradedRing::integer(&[1, 1, -1, -1])
    }

    fn p(r: &GradedRing, s: &str) -> Poly {
        parse_poly(s, &r.names()).unwrap()
    }

    fn endo(r: &GradedRing, imgs: &[&str]) -> GradedEndo {
        let images = imgs.iter().map(|s| p(r, s)).collect();
        GradedEndo::new(r, PolyMap::new(r.num_vars(), images).unwrap()).unwrap()
    }

    #[test]
    fn normalization_examples() {
        let r = quadric();
        let t = endo(&r, &["y3", "y4", "y1", "y2"]);
        match t.check_normalizes() {
            Normalization::Normalizes(dm) => {
                assert_eq!(dm.generator_images().unwrap(), vec![r.group().elem(int_vec(&[-1]), vec![]).unwrap()]);
            }
            other => panic!("{other:?}"),
        }
        let r1 = GradedRing::integer(&[1, 0, 0, 0]);
        let sq = endo(&r1, &["y1^2", "y2", "y3", "y4"]);
        assert!(matches!(sq.check_normalizes(), Normalization::Neither(Neither::NotInvertible { .. })));
        let bad = endo(&r, &["y1", "y1*y2", "y3", "y4"]);
        assert!(matches!(bad.check_normalizes(), Normalization::Neither(Neither::NotWellDefined { .. })));
        let nh = PolyMap::new(4, vec![p(&r, "y1+y3"), p(&r, "y2"), p(&r, "y3"), p(&r, "y4")]).unwrap();
        assert_eq!(GradedEndo::new(&r, nh), Err(GradingError::ImagesNotHomogeneous { var: 0 }));
    }

    #[test]
    fn elementary_shears() {
        let r = quadric();
        let s = elementary(&r, Elementary::Shear { var: 0, f: p(&r, "y2*y2*y3") }).unwrap();
        assert_eq!(s.map().image(0), &p(&r, "y1 + y2^2*y3"));
        assert!(s.preserves_grading());
        let inv = s.inverse().unwrap();
        assert!(verify_inverse(&s, &inv));
        assert_eq!(
            elementary(&r, Elementary::Shear { var: 1, f: p(&r, "y1*(y1*y4 - y2*y3)") }),
            Err(GradingError::DependsOnTarget { var: 1 })
        );
        assert_eq!(
            elementary(&r, Elementary::Shear { var: 0, f: p(&r, "y3") }),
            Err(GradingError::NotHomogeneousShear { var: 0 })
        );
        let zeta2 = single_shear(&r, 1, p(&r, "y1*(y1*y4 - y2*y3)")).unwrap();
        assert_eq!(zeta2.map().image(1), &p(&r, "y2 + y1^2*y4 - y1*y2*y3"));
        assert!(zeta2.inverse().is_none());
    }

    #[test]
    fn elementary_linear() {
        let r = quadric();
        let id = elementary(&r, Elementary::Linear((0..4).map(|i| (0..4).map(|j| rat((i == j) as i64)).collect()).collect())).unwrap();
        assert!(id.map().is_identity());
        let mut a: Vec<Vec<Rat>> = (0..4).map(|i| (0..4).map(|j| rat((i == j) as i64)).collect()).collect();
        a[0][1] = rat(2);
        let l = elementary(&r, Elementary::Linear(a.clone())).unwrap();
        assert!(verify_inverse(&l, &l.inverse().unwrap()));
        a[0][2] = rat(1);
        assert_eq!(elementary(&r, Elementary::Linear(a)), Err(GradingError::LinearNotGraded));
        let sing = vec![vec![rat(0); 4]; 4];
        assert_eq!(elementary(&r, Elementary::Linear(sing)), Err(GradingError::SingularLinear));
    }

    #[test]
    fn shear_family_shapes() {
        let r = quadric();
        let y1y3 = p(&r, "y1*y3");
        for k in 0..4u32 {
            let s = shear_family(&r, 0, &p(&r, "y2"), &p(&r, "y2*y3"), k).unwrap();
            let image = crate::polyring::substitute(&y1y3, s.map()).unwrap();
            let expected = &y1y3 + &p(&r, "y2*y3").pow(k + 1);
            assert_eq!(image, expected);
            assert_eq!(image.total_degree(), Some(2 * (k + 1)));
        }
        assert_eq!(
            shear_family(&r, 0, &p(&r, "y2"), &p(&r, "y1*y3"), 1),
            Err(GradingError::DependsOnTarget { var: 0 })
        );
        assert_eq!(shear_family(&r, 0, &p(&r, "y2"), &p(&r, "y2"), 1), Err(GradingError::NotDegreeZero));
    }
}
