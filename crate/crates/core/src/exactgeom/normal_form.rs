//! Hermite and Smith normal forms over the integers, and the lattice
//! routines built on them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::linalg;
use super::matrix::{primitive_from_rat, to_rat_vec, IntMatrix, IntVector};

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and
/// `U·A = H`. Nonzero rows of `H` come first, pivots are positive and entries
/// above each pivot lie in `[0, pivot)`.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.nrows();
    let n = a.ncols();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let piv = (r..m)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&i, &j| h.get(i, c).abs().cmp(&h.get(j, c).abs()));
            let Some(p) = piv else { break };
            h.swap_rows(r, p);
            u.swap_rows(r, p);
            let mut clean = true;
            for i in r + 1..m {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = -h.get(i, c).div_floor(h.get(r, c));
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                if !h.get(i, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h.get(i, c).div_floor(h.get(r, c));
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form: returns `(S, U, V)` with `U·A·V = S`, `S` diagonal,
/// nonnegative, and each diagonal entry dividing the next.
pub fn snf(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let m = a.nrows();
    let n = a.ncols();
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = s.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return (s, u, v);
            };
            s.swap_rows(t, pi);
            u.swap_rows(t, pi);
            s.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = -s.get(i, t).div_floor(s.get(t, t));
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= s.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = -s.get(t, j).div_floor(s.get(t, t));
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= s.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            let pivot = s.get(t, t).clone();
            let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| !s.get(i, j).is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    (s, u, v)
}

/// The diagonal of a Smith form.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    let (s, _, _) = snf(a);
    (0..s.nrows().min(s.ncols())).map(|i| s.get(i, i).clone()).collect()
}

/// Basis (rows) of the lattice `{z ∈ ℤᵐ : z·A = 0}`.
pub fn left_kernel(a: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf(a);
    let rows: Vec<IntVector> = (0..h.nrows())
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .map(|i| u.row(i).clone())
        .collect();
    IntMatrix::from_rows(a.nrows(), rows).expect("kernel rows have the row count of A")
}

/// Integer coefficients `c` with `c·B = v`, if the system is solvable over ℤ.
pub fn solve_integer(b: &IntMatrix, v: &[BigInt]) -> Option<IntVector> {
    assert_eq!(v.len(), b.ncols());
    let (h, u) = hnf(b);
    let mut rem = v.to_vec();
    let mut d = vec![BigInt::zero(); b.nrows()];
    for (row, di) in h.rows().iter().zip(d.iter_mut()) {
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            break;
        };
        let p = &row[pc];
        if !rem[pc].is_multiple_of(p) {
            return None;
        }
        let q = &rem[pc] / p;
        for (r, x) in rem.iter_mut().zip(row) {
            *r -= &q * x;
        }
        *di = q;
    }
    if rem.iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(u.left_mul(&d))
}

/// Nonzero rows of the Hermite form: a canonical basis of the row lattice.
pub fn lattice_basis(rows: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf(rows);
    let kept: Vec<IntVector> = h.into_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    IntMatrix::from_rows(rows.ncols(), kept).unwrap()
}

/// Basis of `span_ℚ(rows) ∩ ℤⁿ`, in Hermite form.
pub fn saturated_span(rows: &IntMatrix) -> IntMatrix {
    let n = rows.ncols();
    let rat_rows: Vec<_> = rows.rows().iter().map(|r| to_rat_vec(r)).collect();
    let kernel: Vec<IntVector> = linalg::right_kernel(&rat_rows, n).iter().map(|k| primitive_from_rat(k)).collect();
    if kernel.is_empty() {
        return IntMatrix::identity(n);
    }
    if kernel.len() == n {
        return IntMatrix::zeros(0, n);
    }
    // columns of `cols` are the kernel vectors
    let cols = IntMatrix::new(kernel).transpose();
    lattice_basis(&left_kernel(&cols))
}
