use std::collections::BTreeMap;

use super::matrix::row_reduce;
use super::{CycloMatrix, CycloNum, MatGroup, QuotientError};
use crate::exactgeom::Rat;
use crate::polyring::{grlex_desc, Exponent};

/// Polynomial with coefficients in `ℚ(ζₙ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloPoly {
    pub nvars: usize,
    pub terms: BTreeMap<Exponent, CycloNum>,
}

impl CycloPoly {
    /// Terms in decreasing graded lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &CycloNum)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| grlex_desc(a.0, b.0));
        t
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let mon: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { names[i].clone() } else { format!("{}^{}", names[i], k) })
                    .collect();
                let coeff = if c.is_one() && !mon.is_empty() { None } else { Some(format!("({c})")) };
                coeff.into_iter().chain(mon).collect::<Vec<_>>().join("*")
            })
            .collect();
        parts.join(" + ")
    }
}

/// Exponent vectors of total degree `d` in `n` variables, decreasing in
/// graded lexicographic order.
pub fn monomials(n: usize, d: u32) -> Vec<Exponent> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Exponent>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// `m(A·x)`: each `xᵢ` replaced by `Σⱼ Aᵢⱼ xⱼ`.
fn act(a: &CycloMatrix, m: &[u32]) -> BTreeMap<Exponent, CycloNum> {
    let n = a.dim();
    let mut acc: BTreeMap<Exponent, CycloNum> = BTreeMap::from([(vec![0; n], CycloNum::one(a.conductor()))]);
    for (i, &k) in m.iter().enumerate() {
        for _ in 0..k {
            let mut next: BTreeMap<Exponent, CycloNum> = BTreeMap::new();
            for (e, c) in &acc {
                for j in 0..n {
                    let aij = a.get(i, j);
                    if aij.is_zero() {
                        continue;
                    }
                    let mut e2 = e.clone();
                    e2[j] += 1;
                    let t = c.mul(aij);
                    let entry = next.entry(e2).or_insert_with(|| CycloNum::zero(a.conductor()));
                    *entry = entry.add(&t);
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
    }
    acc
}

/// Basis of the degree-`d` invariants `p(A·x) = p(x)`, obtained by averaging
/// monomials over the group; rows of the reduced echelon form on the
/// monomial basis.
pub fn reynolds_invariants(g: &MatGroup, d: u32) -> Result<Vec<CycloPoly>, QuotientError> {
    if d == 0 {
        return Err(QuotientError::DegreeZero);
    }
    let n = g.dim();
    let cond = g.conductor();
    let basis = monomials(n, d);
    let pos: BTreeMap<&Exponent, usize> = basis.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let inv_order = Rat::new(1.into(), g.order().into());
    let mut rows = Vec::with_capacity(basis.len());
    for m in &basis {
        let mut row = vec![CycloNum::zero(cond); basis.len()];
        for a in g.elements() {
            for (e, c) in act(a, m) {
                let k = pos[&e];
                row[k] = row[k].add(&c);
            }
        }
        rows.push(row.into_iter().map(|c| c.scale(&inv_order)).collect());
    }
    Ok(row_reduce(rows, basis.len())
        .into_iter()
        .map(|row| CycloPoly {
            nvars: n,
            terms: basis.iter().cloned().zip(row).filter(|(_, c)| !c.is_zero()).collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactgeom::rat;
    use crate::finite_quotient::{close_group, DEFAULT_CAP};

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(2, 3), vec![vec![3, 0], vec![2, 1], vec![1, 2], vec![0, 3]]);
    }

    #[test]
    fn invariant_dimensions() {
        let pm = close_group(vec![CycloMatrix::diagonal(1, &vec![CycloNum::from_rat(1, rat(-1)); 2])], DEFAULT_CAP).unwrap();
        assert_eq!(reynolds_invariants(&pm, 2).unwrap().len(), 3);
        assert_eq!(reynolds_invariants(&pm, 1).unwrap().len(), 0);
        let triv = close_group(vec![CycloMatrix::identity(1, 3)], DEFAULT_CAP).unwrap();
        assert_eq!(reynolds_invariants(&triv, 3).unwrap().len(), 10);
        let z3 = close_group(
            vec![CycloMatrix::diagonal(3, &[CycloNum::root_of_unity(3, 1), CycloNum::root_of_unity(3, 2)])],
            DEFAULT_CAP,
        )
        .unwrap();
        let inv = reynolds_invariants(&z3, 2).unwrap();
        assert_eq!(inv.len(), 1);
        assert_eq!(inv[0].to_string_with(&["x1".into(), "x2".into()]), "x1*x2");
        assert_eq!(reynolds_invariants(&z3, 0), Err(QuotientError::DegreeZero));
    }
}
