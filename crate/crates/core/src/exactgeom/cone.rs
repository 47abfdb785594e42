use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg;
use super::matrix::{dot, lex_desc, primitive, primitive_from_rat, to_rat_vec, IntMatrix, IntVector, Rat};
use super::normal_form::{lattice_basis, saturated_span, snf, solve_integer};
use super::GeomError;

/// A pointed rational polyhedral cone together with the lattice it lives in.
///
/// The lattice is always replaced by its intersection with the linear span of
/// the cone, so the cone is full-dimensional in lattice coordinates. Rays are
/// the primitive lattice points on the extreme rays; facets are primitive
/// functionals on the lattice, given by their values on the lattice basis rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    ambient_rank: usize,
    lattice: IntMatrix,
    rays: Vec<IntVector>,
    ray_coords: Vec<IntVector>,
    facets: Vec<IntVector>,
}

impl Cone {
    /// Cone generated by `generators` in the standard lattice ℤⁿ.
    pub fn new(ambient_rank: usize, generators: &[IntVector]) -> Result<Cone, GeomError> {
        Self::with_lattice(ambient_rank, generators, &IntMatrix::identity(ambient_rank))
    }

    /// Cone generated by `generators` inside the lattice spanned by the rows of `lattice`.
    pub fn with_lattice(ambient_rank: usize, generators: &[IntVector], lattice: &IntMatrix) -> Result<Cone, GeomError> {
        if lattice.ncols() != ambient_rank {
            return Err(GeomError::Dimension {
                expected: ambient_rank,
                found: lattice.ncols(),
            });
        }
        for g in generators {
            if g.len() != ambient_rank {
                return Err(GeomError::Dimension {
                    expected: ambient_rank,
                    found: g.len(),
                });
            }
        }
        let base = lattice_basis(lattice);
        let k0 = base.nrows();
        let mut coords0 = Vec::new();
        for g in generators.iter().filter(|g| g.iter().any(|x| !x.is_zero())) {
            let c = solve_integer(&base, g).ok_or_else(|| GeomError::NotInLattice(g.clone()))?;
            coords0.push(c);
        }
        let sat = if coords0.is_empty() {
            IntMatrix::zeros(0, k0)
        } else {
            saturated_span(&IntMatrix::new(coords0.clone()))
        };
        let k = sat.nrows();
        let lattice = if k == 0 { IntMatrix::zeros(0, ambient_rank) } else { &sat * &base };
        if k == 0 {
            return Ok(Cone {
                ambient_rank,
                lattice,
                rays: Vec::new(),
                ray_coords: Vec::new(),
                facets: Vec::new(),
            });
        }
        let coords: Vec<IntVector> = coords0
            .iter()
            .map(|c| solve_integer(&sat, c).expect("generator lies in its saturated span"))
            .collect();

        let facets = dd_dual(&coords, k);
        let facet_rows: Vec<Vec<Rat>> = facets.iter().map(|f| to_rat_vec(f)).collect();
        if linalg::rank(&facet_rows, k) < k {
            return Err(GeomError::NonPointed);
        }

        let mut seen = HashSet::new();
        let mut extreme = Vec::new();
        for c in &coords {
            let p = primitive(c);
            if !seen.insert(p.clone()) {
                continue;
            }
            let tight: Vec<Vec<Rat>> = facets
                .iter()
                .filter(|f| dot(f, &p).is_zero())
                .map(|f| to_rat_vec(f))
                .collect();
            if linalg::rank(&tight, k) == k - 1 {
                extreme.push(p);
            }
        }
        let mut paired: Vec<(IntVector, IntVector)> =
            extreme.into_iter().map(|c| (lattice.left_mul(&c), c)).collect();
        paired.sort_by(|a, b| lex_desc(&a.0, &b.0));
        let (rays, ray_coords) = paired.into_iter().unzip();
        let mut facets = facets;
        facets.sort_by(lex_desc);
        Ok(Cone {
            ambient_rank,
            lattice,
            rays,
            ray_coords,
            facets,
        })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Rank of the lattice, equal to the dimension of the cone.
    pub fn dim(&self) -> usize {
        self.lattice.nrows()
    }

    pub fn lattice(&self) -> &IntMatrix {
        &self.lattice
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn ray_coords(&self) -> &[IntVector] {
        &self.ray_coords
    }

    /// Facet functionals in lattice coordinates (edges of the dual cone).
    pub fn facets(&self) -> &[IntVector] {
        &self.facets
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_rank
    }

    pub fn to_ambient(&self, coords: &[BigInt]) -> IntVector {
        self.lattice.left_mul(coords)
    }

    /// Rational coordinates with respect to the lattice basis, if `v` lies in its span.
    pub fn rational_coords(&self, v: &[BigInt]) -> Option<Vec<Rat>> {
        if v.len() != self.ambient_rank {
            return None;
        }
        linalg::solve_left(&self.lattice.to_rat(), self.ambient_rank, &to_rat_vec(v))
    }

    /// Integer coordinates, if `v` is a lattice point.
    pub fn lattice_coords(&self, v: &[BigInt]) -> Option<IntVector> {
        if v.len() != self.ambient_rank {
            return None;
        }
        solve_integer(&self.lattice, v)
    }

    pub fn contains_coords(&self, c: &[BigInt]) -> bool {
        self.facets.iter().all(|f| !dot(f, c).is_negative())
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        match self.rational_coords(v) {
            Some(c) => self
                .facets
                .iter()
                .all(|f| !f.iter().zip(&c).map(|(a, b)| Rat::from_integer(a.clone()) * b).sum::<Rat>().is_negative()),
            None => false,
        }
    }

    /// The dual cone in the dual lattice. Its ambient space is ℤᵏ, k the
    /// lattice rank, with functionals written as values on the lattice basis.
    pub fn dual(&self) -> Result<Cone, GeomError> {
        Cone::new(self.dim(), &self.facets)
    }

    /// Sum of the facet functionals; strictly positive on the cone minus the origin.
    fn grading(&self, c: &[BigInt]) -> BigInt {
        self.facets.iter().map(|f| dot(f, c)).sum()
    }

    /// Hilbert basis in lattice coordinates, sorted like the rays.
    pub fn hilbert_basis_coords(&self) -> Vec<IntVector> {
        let k = self.dim();
        if k == 0 {
            return Vec::new();
        }
        let mut candidates: BTreeSet<IntVector> = self.ray_coords.iter().cloned().collect();
        let all: Vec<usize> = (0..self.ray_coords.len()).collect();
        for simplex in self.triangulate(&all, k) {
            let rows: Vec<IntVector> = simplex.iter().map(|&i| self.ray_coords[i].clone()).collect();
            for p in parallelepiped_points(&rows) {
                candidates.insert(p);
            }
        }
        let mut by_degree: Vec<(BigInt, IntVector)> =
            candidates.into_iter().map(|c| (self.grading(&c), c)).collect();
        by_degree.sort();
        let mut basis: Vec<(BigInt, IntVector)> = Vec::new();
        for (deg, c) in by_degree {
            let reducible = basis.iter().any(|(hd, h)| {
                hd < &deg && {
                    let diff: IntVector = c.iter().zip(h).map(|(a, b)| a - b).collect();
                    self.contains_coords(&diff)
                }
            });
            if !reducible {
                basis.push((deg, c));
            }
        }
        let mut out: Vec<IntVector> = basis.into_iter().map(|(_, c)| c).collect();
        out.sort_by(|a, b| lex_desc(&self.to_ambient(a), &self.to_ambient(b)));
        out
    }

    /// Minimal generating set of the monoid of lattice points in the cone.
    pub fn hilbert_basis(&self) -> Vec<IntVector> {
        self.hilbert_basis_coords().iter().map(|c| self.to_ambient(c)).collect()
    }

    fn rank_of(&self, idx: &[usize]) -> usize {
        let rows: Vec<Vec<Rat>> = idx.iter().map(|&i| to_rat_vec(&self.ray_coords[i])).collect();
        linalg::rank(&rows, self.dim())
    }

    /// Facets of the face spanned by `face` (of dimension `d`), as ray index sets.
    fn sub_facets(&self, face: &[usize], d: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for f in &self.facets {
            let sub: Vec<usize> = face
                .iter()
                .copied()
                .filter(|&i| dot(f, &self.ray_coords[i]).is_zero())
                .collect();
            if sub.len() == face.len() || out.contains(&sub) {
                continue;
            }
            if self.rank_of(&sub) + 1 == d {
                out.push(sub);
            }
        }
        out
    }

    /// Pulling triangulation: cone the first ray over the facets not containing it.
    fn triangulate(&self, face: &[usize], d: usize) -> Vec<Vec<usize>> {
        if face.len() == d {
            return vec![face.to_vec()];
        }
        let apex = face[0];
        let mut out = Vec::new();
        for sub in self.sub_facets(face, d) {
            if sub.contains(&apex) {
                continue;
            }
            for mut s in self.triangulate(&sub, d - 1) {
                s.push(apex);
                out.push(s);
            }
        }
        out
    }
}

/// Nonzero lattice points of the half-open parallelepiped spanned by the
/// linearly independent rows.
fn parallelepiped_points(rows: &[IntVector]) -> Vec<IntVector> {
    let k = rows.len();
    let v = IntMatrix::new(rows.to_vec());
    let (s, _, w) = snf(&v);
    let w_inv = linalg::inverse(&w.to_rat()).expect("unimodular");
    let v_inv = linalg::inverse(&v.to_rat()).expect("independent rows");
    let v_rat = v.to_rat();
    let moduli: Vec<BigInt> = (0..k).map(|i| s.get(i, i).clone()).collect();
    let mut out = Vec::new();
    let mut c: Vec<BigInt> = vec![BigInt::zero(); k];
    loop {
        let x = linalg::vec_mat(&to_rat_vec(&c), &w_inv, k);
        let lambda = linalg::vec_mat(&x, &v_inv, k);
        let frac: Vec<Rat> = lambda.iter().map(|l| l - l.floor()).collect();
        let p = linalg::vec_mat(&frac, &v_rat, k);
        if p.iter().any(|x| !x.is_zero()) {
            out.push(p.iter().map(|x| x.to_integer()).collect());
        }
        // odometer over ∏ [0, s_i)
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            c[i] += 1;
            if c[i] < moduli[i] {
                break;
            }
            c[i] = BigInt::zero();
            i += 1;
        }
    }
}

/// Extreme rays of `{f : f·a ≥ 0 for every constraint a}` by the double
/// description method. The constraints must span ℚᵏ.
fn dd_dual(constraints: &[IntVector], k: usize) -> Vec<IntVector> {
    let rat_rows: Vec<Vec<Rat>> = constraints.iter().map(|c| to_rat_vec(c)).collect();
    let mut basis_idx = Vec::new();
    let mut basis_rows: Vec<Vec<Rat>> = Vec::new();
    for (i, r) in rat_rows.iter().enumerate() {
        basis_rows.push(r.clone());
        if linalg::rank(&basis_rows, k) == basis_rows.len() {
            basis_idx.push(i);
        } else {
            basis_rows.pop();
        }
        if basis_idx.len() == k {
            break;
        }
    }
    assert_eq!(basis_idx.len(), k, "constraints must span the space");
    let inv = linalg::inverse(&basis_rows).expect("independent constraints");
    let mut rays: Vec<(IntVector, BTreeSet<usize>)> = (0..k)
        .map(|j| {
            let col: Vec<Rat> = inv.iter().map(|r| r[j].clone()).collect();
            let zeros = basis_idx.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &c)| c).collect();
            (primitive_from_rat(&col), zeros)
        })
        .collect();

    for (ci, a) in constraints.iter().enumerate() {
        if basis_idx.contains(&ci) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|(f, _)| dot(f, a)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut next: Vec<(IntVector, BTreeSet<usize>)> = Vec::new();
        for (i, (f, z)) in rays.iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            let mut z = z.clone();
            if vals[i].is_zero() {
                z.insert(ci);
            }
            next.push((f.clone(), z));
        }
        for &p in &pos {
            for &n in &neg {
                let common: BTreeSet<usize> = rays[p].1.intersection(&rays[n].1).copied().collect();
                if common.len() + 2 < k {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&r| r != p && r != n)
                    .all(|r| !common.is_subset(&rays[r].1));
                if !adjacent {
                    continue;
                }
                let combo: IntVector = rays[n]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(x, y)| &vals[p] * x - &vals[n] * y)
                    .collect();
                let mut z = common;
                z.insert(ci);
                next.push((primitive(&combo), z));
            }
        }
        rays = next;
    }
    rays.into_iter().map(|(f, _)| f).collect()
}
