//! Brute-force oracles shared by the integration and acceptance suites.
//! None of these call into the code paths they are used to check.
#![allow(dead_code)]

use std::collections::HashSet;

/// Facets of the cone spanned by `rays` (full-dimensional in ℤⁿ, n ≤ 3),
/// by testing every hyperplane through n-1 of the rays.
pub fn brute_force_facets(rays: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = rays[0].len();
    let mut out: Vec<Vec<i64>> = Vec::new();
    let idx: Vec<usize> = (0..rays.len()).collect();
    for subset in subsets(&idx, n - 1) {
        let normal = match n {
            1 => vec![1],
            2 => {
                let r = &rays[subset[0]];
                vec![-r[1], r[0]]
            }
            3 => {
                let (a, b) = (&rays[subset[0]], &rays[subset[1]]);
                vec![a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
            }
            _ => unimplemented!("oracle only handles rank <= 3"),
        };
        if normal.iter().all(|&x| x == 0) {
            continue;
        }
        for sign in [1, -1] {
            let f: Vec<i64> = normal.iter().map(|x| x * sign).collect();
            let vals: Vec<i64> = rays.iter().map(|r| dot(&f, r)).collect();
            if vals.iter().all(|&v| v >= 0) && vals.iter().any(|&v| v > 0) {
                let f = primitive(&f);
                if !out.contains(&f) {
                    out.push(f);
                }
            }
        }
    }
    out.sort();
    out
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g <= 1 { v.to_vec() } else { v.iter().map(|x| x / g).collect() }
}

pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut out = Vec::new();
    for mut s in subsets(&items[1..], k - 1) {
        s.insert(0, items[0]);
        out.push(s);
    }
    out.extend(subsets(&items[1..], k));
    out
}

/// Lattice points of the box `[0, bound]ⁿ` satisfying all facet inequalities.
pub fn box_points(facets: &[Vec<i64>], n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut p = vec![0i64; n];
    loop {
        if facets.iter().all(|f| dot(f, &p) >= 0) {
            out.push(p.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            p[i] += 1;
            if p[i] <= bound {
                break;
            }
            p[i] = 0;
            i += 1;
        }
    }
}

/// Irreducible elements of a box-bounded monoid in the nonnegative orthant:
/// nonzero points that are not a sum of two nonzero points of the set.
pub fn box_irreducibles(points: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let set: HashSet<&Vec<i64>> = points.iter().collect();
    let nonzero: Vec<&Vec<i64>> = points.iter().filter(|p| p.iter().any(|&x| x != 0)).collect();
    let mut out: Vec<Vec<i64>> = nonzero
        .iter()
        .filter(|p| {
            !nonzero.iter().any(|q| {
                q != *p && {
                    let d: Vec<i64> = p.iter().zip(q.iter()).map(|(a, b)| a - b).collect();
                    d.iter().all(|&x| x >= 0) && set.contains(&d)
                }
            })
        })
        .map(|p| (*p).clone())
        .collect();
    out.sort();
    out
}

/// Points of the box reachable as nonnegative sums of `gens` without leaving the box.
pub fn box_span(gens: &[Vec<i64>], n: usize, bound: i64) -> HashSet<Vec<i64>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut stack = vec![vec![0i64; n]];
    while let Some(p) = stack.pop() {
        if !seen.insert(p.clone()) {
            continue;
        }
        for g in gens {
            let q: Vec<i64> = p.iter().zip(g).map(|(a, b)| a + b).collect();
            if q.iter().all(|&x| (0..=bound).contains(&x)) && !seen.contains(&q) {
                stack.push(q);
            }
        }
    }
    seen
}
