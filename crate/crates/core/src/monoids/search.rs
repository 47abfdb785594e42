use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::exactgeom::IntVector;

/// Multiplicities `m ≥ 0` with `Σ mᵢ·vectors[i] = target`, if any.
///
/// All vectors must be componentwise nonnegative and nonzero, which makes the
/// search finite. The first solution in the order "larger multiplicity of
/// earlier vectors first" is returned.
pub fn nonneg_combination(vectors: &[IntVector], target: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(
        vectors.iter().all(|v| v.len() == target.len() && v.iter().all(|x| !x.is_negative()) && v.iter().any(|x| !x.is_zero())),
        "vectors must be nonnegative, nonzero and of the target length"
    );
    if target.iter().any(|x| x.is_negative()) {
        return None;
    }
    // support[i][j]: some vector with index ≥ i is positive in coordinate j
    let n = target.len();
    let mut support = vec![vec![false; n]; vectors.len() + 1];
    for i in (0..vectors.len()).rev() {
        for j in 0..n {
            support[i][j] = support[i + 1][j] || vectors[i][j].is_positive();
        }
    }
    let mut failed = HashSet::new();
    let mut mult = vec![BigInt::zero(); vectors.len()];
    if dfs(vectors, &support, 0, target.to_vec(), &mut mult, &mut failed) {
        Some(mult)
    } else {
        None
    }
}

fn dfs(
    vectors: &[IntVector],
    support: &[Vec<bool>],
    i: usize,
    rem: IntVector,
    mult: &mut [BigInt],
    failed: &mut HashSet<(usize, IntVector)>,
) -> bool {
    if rem.iter().all(Zero::is_zero) {
        for m in &mut mult[i..] {
            *m = BigInt::zero();
        }
        return true;
    }
    if i == vectors.len() || rem.iter().zip(&support[i]).any(|(r, s)| r.is_positive() && !s) {
        return false;
    }
    if failed.contains(&(i, rem.clone())) {
        return false;
    }
    let v = &vectors[i];
    let max = v
        .iter()
        .zip(&rem)
        .filter(|(x, _)| x.is_positive())
        .map(|(x, r)| r / x)
        .min()
        .expect("vector is nonzero");
    let mut k = max;
    while !k.is_negative() {
        let next: IntVector = rem.iter().zip(v).map(|(r, x)| r - &k * x).collect();
        if dfs(vectors, support, i + 1, next, mult, failed) {
            mult[i] = k;
            return true;
        }
        k -= 1;
    }
    failed.insert((i, rem));
    false
}

/// Distinct sums of the generator vectors whose weight is at most `bound`,
/// in breadth-first order from zero. Vectors are compared on their first
/// `key_len` entries; every generator must have positive weight.
pub(crate) fn enumerate_sums(
    gens: &[IntVector],
    key_len: usize,
    weight: impl Fn(&IntVector) -> BigInt,
    bound: &BigInt,
) -> Vec<IntVector> {
    assert!(gens.iter().all(|g| weight(g).is_positive()), "generators must have positive weight");
    let Some(len) = gens.first().map(|g| g.len()) else {
        return Vec::new();
    };
    let zero = vec![BigInt::zero(); len];
    let mut seen: HashSet<IntVector> = HashSet::new();
    seen.insert(zero[..key_len].to_vec());
    let mut queue = VecDeque::from([zero]);
    let mut out = Vec::new();
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: IntVector = x.iter().zip(g).map(|(a, b)| a + b).collect();
            if &weight(&y) <= bound && seen.insert(y[..key_len].to_vec()) {
                queue.push_back(y);
            }
        }
        out.push(x);
    }
    out
}
