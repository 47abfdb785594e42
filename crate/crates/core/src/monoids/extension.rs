use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::monoid::AffineMonoid;
use super::search::{enumerate_sums, nonneg_combination};
use super::theory::DivisorTheory;
use super::MonoidError;
use crate::exactgeom::{left_kernel, linalg, to_rat_vec, IntMatrix, IntVector, Rat};

/// A homomorphism from a monoid into `ℤᵐ_{≥0}`, stored as generator images.
///
/// Images must respect every integer relation among the generators, so the
/// map extends uniquely to a group homomorphism on `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidHom {
    target_rank: usize,
    images: Vec<IntVector>,
}

impl MonoidHom {
    pub fn from_images(monoid: &AffineMonoid, target_rank: usize, images: Vec<IntVector>) -> Result<MonoidHom, MonoidError> {
        let gens = monoid.generators();
        if images.len() != gens.len() {
            return Err(MonoidError::ImageCount {
                expected: gens.len(),
                found: images.len(),
            });
        }
        for (i, im) in images.iter().enumerate() {
            if im.len() != target_rank {
                return Err(MonoidError::ImageLength);
            }
            if im.iter().any(|x| x.is_negative()) {
                return Err(MonoidError::NegativeImage(i));
            }
        }
        let g = IntMatrix::from_rows(monoid.ambient_rank(), gens.to_vec())?;
        let a = IntMatrix::from_rows(target_rank, images.clone())?;
        for z in left_kernel(&g).rows() {
            if a.left_mul(z).iter().any(|x| !x.is_zero()) {
                return Err(MonoidError::InconsistentImages { relation: z.clone() });
            }
        }
        Ok(MonoidHom { target_rank, images })
    }

    /// The map `a ↦ M·a` for an `m × n` matrix.
    pub fn from_matrix(monoid: &AffineMonoid, matrix: &IntMatrix) -> Result<MonoidHom, MonoidError> {
        if matrix.ncols() != monoid.ambient_rank() {
            return Err(MonoidError::ImageLength);
        }
        let images = monoid.generators().iter().map(|g| matrix.apply(g)).collect();
        Self::from_images(monoid, matrix.nrows(), images)
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    pub fn images(&self) -> &[IntVector] {
        &self.images
    }

    /// Image of an element of the group of `monoid`, if it is integral.
    pub fn apply(&self, monoid: &AffineMonoid, v: &[BigInt]) -> Option<IntVector> {
        let g: Vec<Vec<Rat>> = monoid.generators().iter().map(|x| to_rat_vec(x)).collect();
        let lambda = linalg::solve_left(&g, monoid.ambient_rank(), &to_rat_vec(v))?;
        let a: Vec<Vec<Rat>> = self.images.iter().map(|x| to_rat_vec(x)).collect();
        let image = linalg::vec_mat(&lambda, &a, self.target_rank);
        image.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtensionResult {
    /// The `m × r` matrix of `β`, with `β(τ(g)) = α(g)` for every generator.
    Beta(IntMatrix),
    /// `α(a) = α(b) + s` with `s ∉ α(Γ)`.
    ViolationStar { a: IntVector, b: IntVector, s: IntVector },
    /// Elements without a common prime factor in the divisor theory whose
    /// images are all divisible by the prime `common_prime_index`.
    ViolationStarStar { witness_set: Vec<IntVector>, common_prime_index: usize },
    /// Distinct elements with equal images.
    NotAnEmbedding { a: IntVector, b: IntVector },
}

/// Extends `α` through the divisor theory, or reports why it cannot be extended.
///
/// Injectivity is decided exactly. The first condition is searched over pairs
/// of elements whose divisor-theory images have coordinate sum at most
/// `depth`, in breadth-first order. The second condition is decided exactly:
/// the elements whose image is divisible by a prime `p` of the target are the
/// multiples of the generators with that property, and these have a common
/// prime divisor in the divisor theory iff those generators do. Finally `β`
/// is found by enumerating all nonnegative integral solutions of
/// `β·τ(g) = α(g)` and keeping the injective ones.
pub fn extend_embedding(dt: &DivisorTheory, alpha: &MonoidHom, depth: u32) -> Result<ExtensionResult, MonoidError> {
    let monoid = dt.monoid();
    let gens = monoid.generators();
    if alpha.images().len() != gens.len() {
        return Err(MonoidError::ImageCount {
            expected: gens.len(),
            found: alpha.images().len(),
        });
    }
    let m = alpha.target_rank();
    let a_rows: Vec<Vec<Rat>> = alpha.images().iter().map(|x| to_rat_vec(x)).collect();
    if linalg::rank(&a_rows, m) < monoid.generator_rank() {
        let a = IntMatrix::from_rows(m, alpha.images().to_vec())?;
        let g = IntMatrix::from_rows(monoid.ambient_rank(), gens.to_vec())?;
        let z = left_kernel(&a)
            .into_rows()
            .into_iter()
            .find(|z| g.left_mul(z).iter().any(|x| !x.is_zero()))
            .expect("rank drop gives a relation not among the generators");
        let pos: IntVector = z.iter().map(|x| if x.is_positive() { x.clone() } else { BigInt::zero() }).collect();
        let neg: IntVector = z.iter().map(|x| if x.is_negative() { -x } else { BigInt::zero() }).collect();
        return Ok(ExtensionResult::NotAnEmbedding {
            a: g.left_mul(&pos),
            b: g.left_mul(&neg),
        });
    }

    if let Some(v) = star_violation(dt, alpha, depth) {
        return Ok(v);
    }
    if let Some(v) = star_star_violation(dt, alpha) {
        return Ok(v);
    }
    match solve_beta(dt.images(), alpha.images(), dt.free_rank(), m) {
        Some(beta) => Ok(ExtensionResult::Beta(beta)),
        None => Err(MonoidError::DepthInsufficient { depth }),
    }
}

fn star_violation(dt: &DivisorTheory, alpha: &MonoidHom, depth: u32) -> Option<ExtensionResult> {
    let monoid = dt.monoid();
    let n = monoid.ambient_rank();
    let r = dt.free_rank();
    let gens: Vec<IntVector> = monoid
        .generators()
        .iter()
        .zip(dt.images())
        .zip(alpha.images())
        .map(|((g, t), a)| g.iter().chain(t).chain(a).cloned().collect())
        .collect();
    let elements = enumerate_sums(&gens, n, |v| v[n..n + r].iter().sum(), &BigInt::from(depth));
    let alpha_gens = alpha.images();
    let mut member: HashMap<IntVector, bool> = HashMap::new();
    for a in &elements {
        for b in &elements {
            let s: IntVector = a[n + r..].iter().zip(&b[n + r..]).map(|(x, y)| x - y).collect();
            if s.iter().any(|x| x.is_negative()) || s.iter().all(Zero::is_zero) {
                continue;
            }
            let ok = *member
                .entry(s.clone())
                .or_insert_with(|| nonneg_combination(alpha_gens, &s).is_some());
            if !ok {
                return Some(ExtensionResult::ViolationStar {
                    a: a[..n].to_vec(),
                    b: b[..n].to_vec(),
                    s,
                });
            }
        }
    }
    None
}

fn star_star_violation(dt: &DivisorTheory, alpha: &MonoidHom) -> Option<ExtensionResult> {
    let gens = dt.monoid().generators();
    for j in 0..alpha.target_rank() {
        let idx: Vec<usize> = (0..gens.len()).filter(|&i| alpha.images()[i][j].is_positive()).collect();
        if idx.is_empty() {
            continue;
        }
        let coprime = (0..dt.free_rank()).all(|q| idx.iter().any(|&i| dt.images()[i][q].is_zero()));
        if coprime {
            return Some(ExtensionResult::ViolationStarStar {
                witness_set: idx.iter().map(|&i| gens[i].clone()).collect(),
                common_prime_index: j,
            });
        }
    }
    None
}

const MAX_COMBINATIONS: usize = 100_000;

/// The unique injective nonnegative integral `β` with `β·τ(g) = α(g)`, if there is exactly one.
fn solve_beta(tau: &[IntVector], alpha: &[IntVector], r: usize, m: usize) -> Option<IntMatrix> {
    let mut per_row = Vec::with_capacity(m);
    for i in 0..m {
        let target: IntVector = alpha.iter().map(|a| a[i].clone()).collect();
        let sols = row_solutions(tau, &target, r);
        if sols.is_empty() {
            return None;
        }
        per_row.push(sols);
    }
    let total = per_row.iter().try_fold(1usize, |acc, s| acc.checked_mul(s.len()))?;
    if total > MAX_COMBINATIONS {
        return None;
    }
    let mut found: Option<IntMatrix> = None;
    let mut choice = vec![0usize; m];
    for _ in 0..total {
        let rows: Vec<IntVector> = choice.iter().enumerate().map(|(i, &c)| per_row[i][c].clone()).collect();
        let rat: Vec<Vec<Rat>> = rows.iter().map(|x| to_rat_vec(x)).collect();
        if linalg::rank(&rat, r) == r {
            if found.is_some() {
                return None;
            }
            found = Some(IntMatrix::from_rows(r, rows).expect("rows of length r"));
        }
        for i in (0..m).rev() {
            choice[i] += 1;
            if choice[i] < per_row[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
    found
}

/// All `x ∈ ℤʳ_{≥0}` with `x·τ(g) = target[g]` for every generator `g`.
fn row_solutions(tau: &[IntVector], target: &[BigInt], r: usize) -> Vec<IntVector> {
    fn rec(tau: &[IntVector], j: usize, rem: &mut Vec<BigInt>, x: &mut IntVector, out: &mut Vec<IntVector>) {
        if j == x.len() {
            if rem.iter().all(Zero::is_zero) {
                out.push(x.clone());
            }
            return;
        }
        let bound = tau
            .iter()
            .zip(rem.iter())
            .filter(|(t, _)| t[j].is_positive())
            .map(|(t, r)| r / &t[j])
            .min();
        let Some(bound) = bound else {
            return;
        };
        let mut k = BigInt::zero();
        while k <= bound {
            for (rg, t) in rem.iter_mut().zip(tau) {
                *rg -= &k * &t[j];
            }
            x[j] = k.clone();
            rec(tau, j + 1, rem, x, out);
            for (rg, t) in rem.iter_mut().zip(tau) {
                *rg += &k * &t[j];
            }
            k += 1;
        }
        x[j] = BigInt::zero();
    }
    let mut out = Vec::new();
    let mut rem = target.to_vec();
    let mut x = vec![BigInt::zero(); r];
    rec(tau, 0, &mut rem, &mut x, &mut out);
    out
}

/// Re-checks a first-condition witness against the definition: `a, b ∈ Γ`,
/// `α(a) = α(b) + s` with `s ≥ 0`, and `s` is not the image of any element.
pub fn check_star_witness(dt: &DivisorTheory, alpha: &MonoidHom, a: &[BigInt], b: &[BigInt], s: &[BigInt]) -> bool {
    let monoid = dt.monoid();
    if !monoid.contains(a) || !monoid.contains(b) || s.iter().any(|x| x.is_negative()) {
        return false;
    }
    let (Some(aa), Some(ab)) = (alpha.apply(monoid, a), alpha.apply(monoid, b)) else {
        return false;
    };
    if aa.iter().zip(&ab).zip(s).any(|((x, y), z)| x != &(y + z)) {
        return false;
    }
    nonneg_combination(alpha.images(), s).is_none()
}

/// Re-checks a second-condition witness: the elements lie in `Γ`, have no
/// common prime divisor in the divisor theory, and all their images are
/// divisible by prime `j` of the target.
pub fn check_star_star_witness(dt: &DivisorTheory, alpha: &MonoidHom, set: &[IntVector], j: usize) -> bool {
    let monoid = dt.monoid();
    if set.is_empty() || j >= alpha.target_rank() || !set.iter().all(|x| monoid.contains(x)) {
        return false;
    }
    let Some(tau): Option<Vec<IntVector>> = set.iter().map(|x| dt.apply(x)).collect() else {
        return false;
    };
    let coprime = (0..dt.free_rank()).all(|q| tau.iter().any(|t| t[q].is_zero()));
    let divisible = set
        .iter()
        .all(|x| alpha.apply(monoid, x).is_some_and(|im| im[j].is_positive()));
    coprime && divisible
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::int_vec;
    use crate::monoids::divisor_theory;

    fn m469() -> AffineMonoid {
        AffineMonoid::from_i64(2, &[&[2, 0], &[1, 1], &[0, 2]]).unwrap()
    }

    fn m10() -> AffineMonoid {
        AffineMonoid::from_i64(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]).unwrap()
    }

    #[test]
    fn star_violation_10_2_15_3() {
        let m = m10();
        let dt = divisor_theory(&m).unwrap();
        // 10, 2, 15, 3 over the primes 2, 3, 5, 7
        let images = vec![int_vec(&[1, 0, 1, 0]), int_vec(&[1, 0, 0, 0]), int_vec(&[0, 1, 1, 0]), int_vec(&[0, 1, 0, 0])];
        let alpha = MonoidHom::from_images(&m, 4, images).unwrap();
        let res = extend_embedding(&dt, &alpha, 8).unwrap();
        let ExtensionResult::ViolationStar { a, b, s } = res else {
            panic!("expected a first-condition violation, got {res:?}");
        };
        assert_eq!(a, int_vec(&[1, 0, 1, 0]));
        assert_eq!(b, int_vec(&[1, 0, 0, 1]));
        assert_eq!(s, int_vec(&[0, 0, 1, 0]));
        assert!(check_star_witness(&dt, &alpha, &a, &b, &s));
    }

    #[test]
    fn star_star_violation_20_30_45() {
        let m = m469();
        let dt = divisor_theory(&m).unwrap();
        let images = vec![int_vec(&[2, 0, 1]), int_vec(&[1, 1, 1]), int_vec(&[0, 2, 1])];
        let alpha = MonoidHom::from_images(&m, 3, images).unwrap();
        let res = extend_embedding(&dt, &alpha, 8).unwrap();
        let ExtensionResult::ViolationStarStar { witness_set, common_prime_index } = res else {
            panic!("expected a second-condition violation, got {res:?}");
        };
        assert_eq!(witness_set, m.generators());
        assert_eq!(common_prime_index, 2);
        assert!(check_star_star_witness(&dt, &alpha, &witness_set, common_prime_index));
    }

    #[test]
    fn identity_extension() {
        for m in [m469(), m10()] {
            let dt = divisor_theory(&m).unwrap();
            let alpha = MonoidHom::from_images(&m, dt.free_rank(), dt.images().to_vec()).unwrap();
            let res = extend_embedding(&dt, &alpha, 8).unwrap();
            assert_eq!(res, ExtensionResult::Beta(IntMatrix::identity(dt.free_rank())));
        }
    }

    #[test]
    fn doubled_embedding_extends() {
        let m = m469();
        let dt = divisor_theory(&m).unwrap();
        // primes 2 and 3 each split into two primes of the target
        let alpha = MonoidHom::from_matrix(&m, &IntMatrix::from_i64(&[&[1, 0], &[1, 0], &[0, 1], &[0, 2]])).unwrap();
        let res = extend_embedding(&dt, &alpha, 8).unwrap();
        assert_eq!(res, ExtensionResult::Beta(IntMatrix::from_i64(&[&[1, 0], &[1, 0], &[0, 1], &[0, 2]])));
    }

    #[test]
    fn collapsing_map_is_not_an_embedding() {
        let m = m469();
        let dt = divisor_theory(&m).unwrap();
        let alpha = MonoidHom::from_matrix(&m, &IntMatrix::from_i64(&[&[1, 1]])).unwrap();
        let ExtensionResult::NotAnEmbedding { a, b } = extend_embedding(&dt, &alpha, 8).unwrap() else {
            panic!("expected NotAnEmbedding");
        };
        assert_ne!(a, b);
        assert!(m.contains(&a) && m.contains(&b));
        assert_eq!(alpha.apply(&m, &a), alpha.apply(&m, &b));
    }

    #[test]
    fn inconsistent_images_rejected() {
        let m = m469();
        let images = vec![int_vec(&[1]), int_vec(&[1]), int_vec(&[2])];
        assert!(matches!(MonoidHom::from_images(&m, 1, images), Err(MonoidError::InconsistentImages { .. })));
    }
}
