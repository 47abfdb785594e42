use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::monoid::{is_saturated, AffineMonoid};
use super::search::enumerate_sums;
use super::MonoidError;
use crate::exactgeom::{left_kernel, linalg, solve_integer, to_rat_vec, IntMatrix, IntVector, Rat};

/// The embedding `Γ → ℤʳ_{≥0}` given by the primitive edge generators of the
/// dual cone.
///
/// Functionals are stored by their values on the rows of the group basis of
/// the monoid. An ambient representative is kept for each one: the shortest
/// integral extension to ℤⁿ when one exists, otherwise the rational extension
/// vanishing on the orthogonal complement of `L`. Rows are sorted by these
/// representatives, larger first, so coordinate functionals come out as
/// `e₁, e₂, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorTheory {
    monoid: AffineMonoid,
    functionals: IntMatrix,
    ambient: Vec<Vec<Rat>>,
    images: Vec<IntVector>,
}

pub fn divisor_theory(m: &AffineMonoid) -> Result<DivisorTheory, MonoidError> {
    let sat = is_saturated(m);
    if let Some(witness) = sat.witness {
        return Err(MonoidError::NotSaturated { witness });
    }
    let basis = m.group_basis();
    let mut rows: Vec<(Vec<Rat>, IntVector)> = m
        .cone()
        .facets()
        .iter()
        .map(|f| (ambient_lift(basis, f), f.clone()))
        .collect();
    rows.sort_by(|a, b| b.0.cmp(&a.0));
    let (ambient, facets): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    let functionals = IntMatrix::from_rows(m.rank(), facets).expect("facets have lattice length");
    let images = m
        .generators()
        .iter()
        .map(|g| {
            let c = m.coords(g).expect("generator in L");
            functionals.apply(&c)
        })
        .collect();
    Ok(DivisorTheory {
        monoid: m.clone(),
        functionals,
        ambient,
        images,
    })
}

/// Extension of a functional on the row lattice of `basis` to ℤⁿ.
fn ambient_lift(basis: &IntMatrix, f: &IntVector) -> Vec<Rat> {
    let bt = basis.transpose();
    if let Some(x0) = solve_integer(&bt, f) {
        let kernel = left_kernel(&bt);
        return to_rat_vec(&shorten(x0, kernel.rows()));
    }
    let b = basis.to_rat();
    let n = basis.ncols();
    let k = basis.nrows();
    let gram: Vec<Vec<Rat>> = (0..k)
        .map(|i| (0..k).map(|j| b[i].iter().zip(&b[j]).map(|(x, y)| x * y).sum()).collect())
        .collect();
    let inv = linalg::inverse(&gram).expect("basis rows are independent");
    let lambda = linalg::vec_mat(&to_rat_vec(f), &inv, k);
    linalg::vec_mat(&lambda, &b, n)
}

/// Minimizes the ℓ¹ norm of `x + Σ tᵢ kᵢ` over a small box of coefficients,
/// preferring the lexicographically larger vector among ties.
fn shorten(x: IntVector, kernel: &[IntVector]) -> IntVector {
    const RADIUS: i64 = 2;
    if kernel.is_empty() || kernel.len() > 3 {
        return x;
    }
    let norm = |v: &IntVector| v.iter().map(|a| a.abs()).sum::<BigInt>();
    let mut best = x.clone();
    let mut t = vec![-RADIUS; kernel.len()];
    loop {
        let mut v = x.clone();
        for (ti, k) in t.iter().zip(kernel) {
            for (a, b) in v.iter_mut().zip(k) {
                *a += b * ti;
            }
        }
        let (nv, nb) = (norm(&v), norm(&best));
        if nv < nb || (nv == nb && v > best) {
            best = v;
        }
        let Some(i) = t.iter().position(|&c| c < RADIUS) else {
            return best;
        };
        t[i] += 1;
        for c in &mut t[..i] {
            *c = -RADIUS;
        }
    }
}

impl DivisorTheory {
    pub fn monoid(&self) -> &AffineMonoid {
        &self.monoid
    }

    pub fn free_rank(&self) -> usize {
        self.functionals.nrows()
    }

    /// Functionals by their values on the group basis rows.
    pub fn functionals(&self) -> &IntMatrix {
        &self.functionals
    }

    /// Ambient representatives of the functionals, possibly rational.
    pub fn ambient_functionals_rat(&self) -> &[Vec<Rat>] {
        &self.ambient
    }

    /// Ambient representatives, if they are all integral.
    pub fn ambient_functionals(&self) -> Option<IntMatrix> {
        let rows: Option<Vec<IntVector>> = self
            .ambient
            .iter()
            .map(|r| r.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect())
            .collect();
        IntMatrix::from_rows(self.monoid.ambient_rank(), rows?).ok()
    }

    /// Images of the generators in ℤʳ_{≥0}.
    pub fn images(&self) -> &[IntVector] {
        &self.images
    }

    /// Image of an element of `L`.
    pub fn apply(&self, v: &[BigInt]) -> Option<IntVector> {
        self.monoid.coords(v).map(|c| self.functionals.apply(&c))
    }

    pub fn embedding(&self) -> FreeEmbedding {
        FreeEmbedding {
            monoid: self.monoid.clone(),
            images: self.images.clone(),
            rank: self.free_rank(),
        }
    }
}

/// A monoid homomorphism `Γ → ℤʳ_{≥0}` given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeEmbedding {
    monoid: AffineMonoid,
    images: Vec<IntVector>,
    rank: usize,
}

impl FreeEmbedding {
    pub fn new(monoid: AffineMonoid, rank: usize, images: Vec<IntVector>) -> Result<FreeEmbedding, MonoidError> {
        if images.len() != monoid.generators().len() {
            return Err(MonoidError::ImageCount {
                expected: monoid.generators().len(),
                found: images.len(),
            });
        }
        for (i, im) in images.iter().enumerate() {
            if im.len() != rank {
                return Err(MonoidError::ImageLength);
            }
            if im.iter().any(|x| x.is_negative()) {
                return Err(MonoidError::NegativeImage(i));
            }
            if im.iter().all(Zero::is_zero) {
                return Err(MonoidError::ZeroImage(i));
            }
        }
        Ok(FreeEmbedding { monoid, images, rank })
    }

    /// The embedding `a ↦ M·a` for an `r × n` matrix.
    pub fn from_matrix(monoid: AffineMonoid, matrix: &IntMatrix) -> Result<FreeEmbedding, MonoidError> {
        if matrix.ncols() != monoid.ambient_rank() {
            return Err(MonoidError::ImageLength);
        }
        let images = monoid.generators().iter().map(|g| matrix.apply(g)).collect();
        Self::new(monoid, matrix.nrows(), images)
    }

    pub fn monoid(&self) -> &AffineMonoid {
        &self.monoid
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[IntVector] {
        &self.images
    }

    /// Elements as `(ambient vector, image)` with image coordinate sum at most `bound`.
    pub(crate) fn elements(&self, bound: u64) -> Vec<(IntVector, IntVector)> {
        let n = self.monoid.ambient_rank();
        let gens: Vec<IntVector> = self
            .monoid
            .generators()
            .iter()
            .zip(&self.images)
            .map(|(g, im)| g.iter().chain(im).cloned().collect())
            .collect();
        enumerate_sums(&gens, n, |v| v[n..].iter().sum(), &BigInt::from(bound))
            .into_iter()
            .map(|mut v| {
                let im = v.split_off(n);
                (v, im)
            })
            .collect()
    }

    /// Checks both divisibility axioms up to `depth`.
    ///
    /// The first axiom is tested on all pairs of elements whose images have
    /// coordinate sum at most `depth`; this is exact within the bound. The
    /// second compares the sets of elements divisible by `d₁` and `d₂` for all
    /// `d` of coordinate sum at most `depth`, restricted to elements of image
    /// sum at most `(depth + 1)·s`, `s` the largest generator image sum.
    pub fn verify_axioms(&self, depth: u32) -> AxiomReport {
        let depth = depth as u64;
        let small = self.elements(depth);
        let images: HashSet<&IntVector> = small.iter().map(|(_, im)| im).collect();
        for (a, ta) in &small {
            for (b, tb) in &small {
                let c: IntVector = ta.iter().zip(tb).map(|(x, y)| x - y).collect();
                if c.iter().any(|x| x.is_negative()) {
                    continue;
                }
                if !images.contains(&c) {
                    return AxiomReport::FailsFirst {
                        a: a.clone(),
                        b: b.clone(),
                        c1: c,
                    };
                }
            }
        }

        let max_gen: u64 = self
            .images
            .iter()
            .map(|im| im.iter().sum::<BigInt>().try_into().unwrap_or(u64::MAX))
            .max()
            .unwrap_or(0);
        let small_int = |v: &IntVector| -> Vec<i64> { v.iter().map(|x| x.to_i64().expect("bounded coordinate")).collect() };
        let big: Vec<Vec<i64>> = self.elements((depth + 1) * max_gen).iter().map(|(_, im)| small_int(im)).collect();
        let divisors = bounded_vectors(self.rank, depth);
        let mut seen: HashMap<Vec<bool>, usize> = HashMap::new();
        for (idx, d) in divisors.iter().enumerate() {
            let d64 = small_int(d);
            let signature: Vec<bool> = big.iter().map(|im| im.iter().zip(&d64).all(|(x, y)| x >= y)).collect();
            if let Some(&first) = seen.get(&signature) {
                return AxiomReport::FailsSecond {
                    d1: divisors[first].clone(),
                    d2: d.clone(),
                };
            }
            seen.insert(signature, idx);
        }
        AxiomReport::Pass {
            elements: small.len(),
            divisors: divisors.len(),
        }
    }
}

/// Nonnegative vectors of length `r` with coordinate sum at most `bound`,
/// by sum and then larger first.
fn bounded_vectors(r: usize, bound: u64) -> Vec<IntVector> {
    fn rec(prefix: &mut Vec<u64>, r: usize, left: u64, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == r {
            out.push(prefix.clone());
            return;
        }
        for x in (0..=left).rev() {
            prefix.push(x);
            rec(prefix, r, left - x, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(&mut Vec::new(), r, bound, &mut raw);
    raw.sort_by_key(|v| v.iter().sum::<u64>());
    raw.into_iter().map(|v| v.into_iter().map(BigInt::from).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomReport {
    Pass { elements: usize, divisors: usize },
    /// `τ(a) = τ(b) + c₁` with `c₁` outside `τ(Γ)`.
    FailsFirst { a: IntVector, b: IntVector, c1: IntVector },
    /// Distinct `d₁, d₂` dividing the same elements.
    FailsSecond { d1: IntVector, d2: IntVector },
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomReport::Pass { .. })
    }
}

pub fn verify_divisor_axioms(dt: &DivisorTheory, depth: u32) -> AxiomReport {
    dt.embedding().verify_axioms(depth)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::int_vec;

    fn ids(n: usize) -> IntMatrix {
        IntMatrix::identity(n)
    }

    #[test]
    fn theory_of_469() {
        let m = AffineMonoid::from_i64(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        let dt = divisor_theory(&m).unwrap();
        assert_eq!(dt.free_rank(), 2);
        assert_eq!(dt.ambient_functionals(), Some(ids(2)));
        assert_eq!(dt.images(), &[int_vec(&[2, 0]), int_vec(&[1, 1]), int_vec(&[0, 2])]);
        assert!(verify_divisor_axioms(&dt, 6).passed());
    }

    #[test]
    fn theory_of_10_14_15_21() {
        let m = AffineMonoid::from_i64(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]).unwrap();
        let dt = divisor_theory(&m).unwrap();
        assert_eq!(dt.free_rank(), 4);
        assert_eq!(dt.ambient_functionals(), Some(ids(4)));
        assert_eq!(dt.images(), m.generators());
        assert!(verify_divisor_axioms(&dt, 4).passed());
    }

    #[test]
    fn orthant_identity() {
        let m = AffineMonoid::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap();
        let dt = divisor_theory(&m).unwrap();
        assert_eq!(dt.ambient_functionals(), Some(ids(2)));
        assert!(verify_divisor_axioms(&dt, 4).passed());
    }

    #[test]
    fn redundant_third_coordinate_fails_second_axiom() {
        let m = AffineMonoid::from_i64(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap();
        let e = FreeEmbedding::from_matrix(m, &IntMatrix::from_i64(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        match e.verify_axioms(6) {
            AxiomReport::FailsSecond { d1, d2 } => {
                // a₁ ≥ 1 already forces a₁ + a₂ ≥ 1
                assert_eq!(d1, int_vec(&[1, 0, 0]));
                assert_eq!(d2, int_vec(&[1, 0, 1]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_saturated_rejected() {
        let m = AffineMonoid::from_i64(1, &[&[2], &[3]]).unwrap();
        assert_eq!(divisor_theory(&m), Err(MonoidError::NotSaturated { witness: int_vec(&[1]) }));
    }

    #[test]
    fn rational_lift_for_sparse_lattice() {
        let m = AffineMonoid::with_lattice(2, vec![int_vec(&[2, 0]), int_vec(&[0, 2])], &IntMatrix::from_i64(&[&[2, 0], &[0, 2]])).unwrap();
        let dt = divisor_theory(&m).unwrap();
        assert_eq!(dt.ambient_functionals(), None);
        assert_eq!(dt.images(), &[int_vec(&[1, 0]), int_vec(&[0, 1])]);
    }
}
