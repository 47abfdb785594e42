use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{CycloMatrix, QuotientError};
use crate::exactgeom::{invariant_factors, IntMatrix, IntVector};

pub const DEFAULT_CAP: usize = 10_000;

/// A finite matrix group with its elements in breadth-first order from the
/// identity.
#[derive(Clone, Debug)]
pub struct MatGroup {
    dim: usize,
    conductor: u32,
    generators: Vec<CycloMatrix>,
    gen_index: Vec<usize>,
    elements: Vec<CycloMatrix>,
    index: HashMap<CycloMatrix, usize>,
}

pub fn close_group(generators: Vec<CycloMatrix>, cap: usize) -> Result<MatGroup, QuotientError> {
    let Some(first) = generators.first() else {
        return Err(QuotientError::NoGenerators);
    };
    let (dim, n) = (first.dim(), first.conductor());
    for (i, g) in generators.iter().enumerate() {
        if g.dim() != dim {
            return Err(QuotientError::Dimension { expected: dim, found: g.dim() });
        }
        if g.conductor() != n {
            return Err(QuotientError::ConductorMismatch);
        }
        if g.rank() < dim {
            return Err(QuotientError::NotInvertible { index: i });
        }
    }
    let id = CycloMatrix::identity(n, dim);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut i = 0;
    while i < elements.len() {
        for g in &generators {
            let p = elements[i].mul(g);
            if !index.contains_key(&p) {
                if elements.len() == cap {
                    return Err(QuotientError::ClosureCapExceeded { cap });
                }
                index.insert(p.clone(), elements.len());
                elements.push(p);
            }
        }
        i += 1;
    }
    let gen_index = generators.iter().map(|g| index[g]).collect();
    Ok(MatGroup {
        dim,
        conductor: n,
        generators,
        gen_index,
        elements,
        index,
    })
}

impl MatGroup {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[CycloMatrix] {
        &self.generators
    }

    pub fn elements(&self) -> &[CycloMatrix] {
        &self.elements
    }

    pub fn index_of(&self, m: &CycloMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn inverse(&self, a: usize) -> usize {
        let mut prev = 0;
        let mut cur = a;
        while cur != 0 {
            prev = cur;
            cur = self.mul(cur, a);
        }
        prev
    }

    /// Elements `A` with `rank(A − I) = 1`.
    pub fn pseudoreflections(&self) -> Vec<usize> {
        let id = CycloMatrix::identity(self.conductor, self.dim);
        (0..self.order()).filter(|&i| self.elements[i].sub(&id).rank() == 1).collect()
    }

    /// Subgroup generated by the given elements.
    pub fn subgroup(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([0]);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut gens = gens.to_vec();
        let mut sub = self.subgroup(&gens);
        loop {
            let mut added = false;
            for &g in &self.gen_index {
                let gi = self.inverse(g);
                for k in 0..gens.len() {
                    let c = self.mul(self.mul(g, gens[k]), gi);
                    if !sub.contains(&c) {
                        gens.push(c);
                        sub = self.subgroup(&gens);
                        added = true;
                    }
                }
            }
            if !added {
                return sub;
            }
        }
    }

    pub fn is_normal(&self, sub: &BTreeSet<usize>) -> bool {
        self.gen_index.iter().all(|&g| {
            let gi = self.inverse(g);
            sub.iter().all(|&h| sub.contains(&self.mul(self.mul(g, h), gi)))
        })
    }

    /// Coset index of every element modulo a normal subgroup, cosets numbered
    /// by first appearance.
    pub fn cosets(&self, sub: &BTreeSet<usize>) -> (Vec<usize>, usize) {
        let mut id = vec![usize::MAX; self.order()];
        let mut count = 0;
        for g in 0..self.order() {
            if id[g] != usize::MAX {
                continue;
            }
            for &h in sub {
                id[self.mul(g, h)] = count;
            }
            count += 1;
        }
        (id, count)
    }

    /// Invariant factors of `G/K` for a normal `K` containing the commutator
    /// subgroup, from the Schreier relations on the generator images.
    pub fn abelian_quotient_invariants(&self, sub: &BTreeSet<usize>) -> Vec<BigInt> {
        let (coset, count) = self.cosets(sub);
        let k = self.gen_index.len();
        let mut rep: Vec<Option<(usize, IntVector)>> = vec![None; count];
        rep[coset[0]] = Some((0, vec![BigInt::zero(); k]));
        let mut queue = VecDeque::from([coset[0]]);
        let mut relations = Vec::new();
        while let Some(c) = queue.pop_front() {
            let (elem, vec) = rep[c].clone().expect("visited coset has a representative");
            for (i, &g) in self.gen_index.iter().enumerate() {
                let e = self.mul(elem, g);
                let mut v = vec.clone();
                v[i] += BigInt::one();
                match &rep[coset[e]] {
                    None => {
                        rep[coset[e]] = Some((e, v));
                        queue.push_back(coset[e]);
                    }
                    Some((_, w)) => relations.push(v.iter().zip(w).map(|(a, b)| a - b).collect()),
                }
            }
        }
        let m = IntMatrix::from_rows(k, relations).expect("relation rows have one entry per generator");
        invariant_factors(&m).into_iter().filter(|d| !d.is_one()).collect()
    }
}

/// Subgroups attached to a finite linear group `G`: the subgroup `H`
/// generated by pseudoreflections, `F = G/H`, the preimage `H̃` of `[F, F]`
/// and `N = G/H̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientReport {
    pub order_g: usize,
    pub num_pseudoreflections: usize,
    pub order_h: usize,
    pub order_htilde: usize,
    pub f_abelian: bool,
    /// `|[F, F]|`.
    pub commutant_order: usize,
    pub n_invariants: Vec<BigInt>,
    pub is_toric: bool,
}

pub fn quotient_report(g: &MatGroup) -> QuotientReport {
    let refl = g.pseudoreflections();
    let h = g.normal_closure(&refl);
    let mut gens = refl.clone();
    for &a in &g.gen_index {
        for &b in &g.gen_index {
            let c = g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b)));
            gens.push(c);
        }
    }
    let htilde = g.normal_closure(&gens);
    let f_abelian = htilde.len() == h.len();
    QuotientReport {
        order_g: g.order(),
        num_pseudoreflections: refl.len(),
        order_h: h.len(),
        order_htilde: htilde.len(),
        f_abelian,
        commutant_order: htilde.len() / h.len(),
        n_invariants: g.abelian_quotient_invariants(&htilde),
        is_toric: f_abelian,
    }
}
