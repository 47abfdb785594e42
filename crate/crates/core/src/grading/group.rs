use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::GradingError;
use crate::exactgeom::{IntMatrix, IntVector};

/// `ℤᵃ ⊕ ℤ/d₁ ⊕ ⋯ ⊕ ℤ/d_b` with `2 ≤ d₁ | d₂ | ⋯ | d_b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

/// An element of an [`AbGroup`], torsion residues reduced into `[0, dᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem {
    pub free: IntVector,
    pub torsion: IntVector,
}

impl AbGroup {
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Result<AbGroup, GradingError> {
        let two = BigInt::from(2);
        if torsion.iter().any(|d| d < &two) {
            return Err(GradingError::InvalidGroup("torsion orders must be at least 2".into()));
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(GradingError::InvalidGroup("torsion orders must form a divisibility chain".into()));
        }
        Ok(AbGroup { free_rank, torsion })
    }

    pub fn free(rank: usize) -> AbGroup {
        AbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(n: u64) -> Result<AbGroup, GradingError> {
        Self::new(0, vec![BigInt::from(n)])
    }

    /// Cokernel data from the invariant factors of a presentation with
    /// `ngens` generators: zeros and ones drop out, units are skipped.
    pub fn from_invariant_factors(ngens: usize, factors: &[BigInt]) -> AbGroup {
        let nonzero: Vec<BigInt> = factors.iter().filter(|d| !d.is_zero()).cloned().collect();
        let torsion = nonzero.iter().filter(|d| !d.is_one()).cloned().collect();
        AbGroup {
            free_rank: ngens - nonzero.len(),
            torsion,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of standard generators, free ones first.
    pub fn ngens(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn elem(&self, free: IntVector, torsion: IntVector) -> Result<GroupElem, GradingError> {
        if free.len() != self.free_rank || torsion.len() != self.torsion.len() {
            return Err(GradingError::InvalidGroup("element shape does not match the group".into()));
        }
        Ok(self.reduce(GroupElem { free, torsion }))
    }

    pub fn zero(&self) -> GroupElem {
        GroupElem {
            free: vec![BigInt::zero(); self.free_rank],
            torsion: vec![BigInt::zero(); self.torsion.len()],
        }
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElem {
        let mut v = vec![BigInt::zero(); self.ngens()];
        v[i] = BigInt::one();
        self.from_vector(&v)
    }

    pub fn reduce(&self, mut e: GroupElem) -> GroupElem {
        for (x, d) in e.torsion.iter_mut().zip(&self.torsion) {
            *x = x.mod_floor(d);
        }
        e
    }

    pub fn add(&self, a: &GroupElem, b: &GroupElem) -> GroupElem {
        self.reduce(GroupElem {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: a.torsion.iter().zip(&b.torsion).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElem) -> GroupElem {
        self.reduce(GroupElem {
            free: a.free.iter().map(|x| k * x).collect(),
            torsion: a.torsion.iter().map(|x| k * x).collect(),
        })
    }

    pub fn neg(&self, a: &GroupElem) -> GroupElem {
        self.scale(&-BigInt::one(), a)
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = (&'a BigInt, &'a GroupElem)>) -> GroupElem {
        items.into_iter().fold(self.zero(), |acc, (k, e)| self.add(&acc, &self.scale(k, e)))
    }

    /// Representative in `ℤ^{ngens}`.
    pub fn to_vector(&self, e: &GroupElem) -> IntVector {
        e.free.iter().chain(&e.torsion).cloned().collect()
    }

    pub fn from_vector(&self, v: &[BigInt]) -> GroupElem {
        self.reduce(GroupElem {
            free: v[..self.free_rank].to_vec(),
            torsion: v[self.free_rank..].to_vec(),
        })
    }

    /// Rows `dᵢ·e_{a+i}` generating the relations of the standard presentation.
    pub fn relations(&self) -> Vec<IntVector> {
        (0..self.torsion.len())
            .map(|i| {
                let mut r = vec![BigInt::zero(); self.ngens()];
                r[self.free_rank + i] = self.torsion[i].clone();
                r
            })
            .collect()
    }

    /// Matrix with the given elements as rows followed by the relations.
    pub(crate) fn stacked(&self, elems: &[GroupElem]) -> IntMatrix {
        let mut rows: Vec<IntVector> = elems.iter().map(|e| self.to_vector(e)).collect();
        rows.extend(self.relations());
        IntMatrix::from_rows(self.ngens(), rows).expect("rows have the group width")
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".to_string());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::int_vec;

    #[test]
    fn validation() {
        assert!(AbGroup::new(1, vec![BigInt::from(2), BigInt::from(4)]).is_ok());
        assert!(AbGroup::new(0, vec![BigInt::from(2), BigInt::from(3)]).is_err());
        assert!(AbGroup::new(0, vec![BigInt::from(1)]).is_err());
    }

    #[test]
    fn arithmetic_reduces() {
        let g = AbGroup::new(1, vec![BigInt::from(3)]).unwrap();
        let a = g.elem(int_vec(&[2]), int_vec(&[2])).unwrap();
        let b = g.add(&a, &a);
        assert_eq!(b, g.elem(int_vec(&[4]), int_vec(&[1])).unwrap());
        assert_eq!(g.neg(&a).torsion, int_vec(&[1]));
        assert_eq!(g.add(&a, &g.neg(&a)), g.zero());
        assert_eq!(g.to_string(), "Z + Z/3");
    }

    #[test]
    fn from_factors() {
        let g = AbGroup::from_invariant_factors(4, &[BigInt::from(1), BigInt::from(1), BigInt::from(2)]);
        assert_eq!(g.free_rank(), 1);
        assert_eq!(g.torsion(), &[BigInt::from(2)]);
    }
}
