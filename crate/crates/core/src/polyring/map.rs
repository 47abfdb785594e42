use std::collections::HashMap;

use super::{Poly, PolyError};

/// A polynomial map given by the images of the source variables, all living
/// in one target ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMap {
    target_vars: usize,
    images: Vec<Poly>,
}

impl PolyMap {
    pub fn new(target_vars: usize, images: Vec<Poly>) -> Result<PolyMap, PolyError> {
        if let Some(p) = images.iter().find(|p| p.nvars() != target_vars) {
            return Err(PolyError::DimensionMismatch {
                expected: target_vars,
                found: p.nvars(),
            });
        }
        Ok(PolyMap { target_vars, images })
    }

    pub fn identity(n: usize) -> PolyMap {
        PolyMap {
            target_vars: n,
            images: (0..n).map(|i| Poly::var(n, i)).collect(),
        }
    }

    pub fn source_vars(&self) -> usize {
        self.images.len()
    }

    pub fn target_vars(&self) -> usize {
        self.target_vars
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Poly {
        &self.images[i]
    }

    pub fn into_images(self) -> Vec<Poly> {
        self.images
    }

    pub fn is_identity(&self) -> bool {
        self.source_vars() == self.target_vars && (0..self.target_vars).all(|i| self.images[i] == Poly::var(self.target_vars, i))
    }

    /// Same map with `extra` variables appended to both rings and fixed.
    pub fn extend_identity(&self, extra: usize) -> PolyMap {
        let n = self.target_vars + extra;
        let mut images: Vec<Poly> = self.images.iter().map(|p| p.extend_vars(extra)).collect();
        images.extend((self.target_vars..n).map(|i| Poly::var(n, i)));
        PolyMap { target_vars: n, images }
    }

    /// First index where two maps of the same shape differ.
    pub fn first_difference(&self, other: &PolyMap) -> Option<usize> {
        (0..self.images.len().min(other.images.len())).find(|&i| self.images[i] != other.images[i])
    }
}

/// Substitutes the images of `m` for the variables of `p`.
pub fn substitute(p: &Poly, m: &PolyMap) -> Result<Poly, PolyError> {
    if p.nvars() != m.source_vars() {
        return Err(PolyError::DimensionMismatch {
            expected: m.source_vars(),
            found: p.nvars(),
        });
    }
    if m.source_vars() == 0 {
        // constant polynomial in zero variables
        return Ok(Poly::constant(m.target_vars(), p.coeff(&[])));
    }
    Ok(p.eval_polys(m.images()))
}

/// `(f ∘ g)(v) = f(v)` with the images of `g` substituted. As maps of
/// coordinate tuples this applies `g` first and then `f`.
pub fn compose(f: &PolyMap, g: &PolyMap) -> Result<PolyMap, PolyError> {
    if f.target_vars() != g.source_vars() {
        return Err(PolyError::DimensionMismatch {
            expected: g.source_vars(),
            found: f.target_vars(),
        });
    }
    let images = f.images().iter().map(|p| substitute(p, g)).collect::<Result<Vec<_>, _>>()?;
    PolyMap::new(g.target_vars(), images)
}

/// Composite of a sequence of endomorphisms applied in order: the result of
/// `[φ₁, φ₂, …, φₙ]` is `φₙ ∘ ⋯ ∘ φ₁`.
pub fn compose_sequence(n: usize, seq: &[PolyMap]) -> Result<PolyMap, PolyError> {
    seq.iter().try_fold(PolyMap::identity(n), |acc, step| compose(step, &acc))
}

/// Entry `(i, j)` is the partial derivative of image `i` with respect to target variable `j`.
pub fn jacobian(m: &PolyMap) -> Vec<Vec<Poly>> {
    m.images()
        .iter()
        .map(|p| (0..m.target_vars()).map(|j| p.derivative(j)).collect())
        .collect()
}

/// Determinant by cofactor expansion along rows, memoized on the set of
/// remaining columns.
pub fn poly_det(m: &[Vec<Poly>]) -> Result<Poly, PolyError> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(PolyError::NonSquare);
    }
    if n == 0 {
        return Err(PolyError::NonSquare);
    }
    assert!(n < 64, "determinant size out of range");
    let nvars = m[0][0].nvars();
    let mut memo: HashMap<u64, Poly> = HashMap::new();
    Ok(minor(m, 0, (1u64 << n) - 1, nvars, &mut memo))
}

fn minor(m: &[Vec<Poly>], row: usize, cols: u64, nvars: usize, memo: &mut HashMap<u64, Poly>) -> Poly {
    if row == m.len() {
        return Poly::one(nvars);
    }
    if let Some(p) = memo.get(&cols) {
        return p.clone();
    }
    let mut acc = Poly::zero(nvars);
    let mut sign_negative = false;
    for j in 0..m.len() {
        if cols & (1 << j) == 0 {
            continue;
        }
        if !m[row][j].is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << j), nvars, memo);
            let term = &m[row][j] * &sub;
            acc = if sign_negative { &acc - &term } else { &acc + &term };
        }
        sign_negative = !sign_negative;
    }
    memo.insert(cols, acc.clone());
    acc
}
