//! Dense linear algebra over the rationals. Matrices are row lists; every
//! routine takes the column count explicitly so that empty row lists work.

use num_traits::{One, Zero};

use super::matrix::Rat;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Rat>], ncols: usize) -> (Vec<Vec<Rat>>, Vec<usize>) {
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let k = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &k * p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(rows: &[Vec<Rat>], ncols: usize) -> usize {
    rref(rows, ncols).1.len()
}

/// Basis of `{x : rows · x = 0}`.
pub fn right_kernel(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); ncols];
            x[f] = Rat::one();
            for (row, &p) in r.iter().zip(&pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

/// Some `c` with `c · rows = v`, if one exists.
pub fn solve_left(rows: &[Vec<Rat>], ncols: usize, v: &[Rat]) -> Option<Vec<Rat>> {
    // transpose: rowsᵀ c = v
    let m = rows.len();
    let aug: Vec<Vec<Rat>> = (0..ncols)
        .map(|j| {
            let mut r: Vec<Rat> = rows.iter().map(|row| row[j].clone()).collect();
            r.push(v[j].clone());
            r
        })
        .collect();
    if aug.is_empty() {
        return Some(vec![Rat::zero(); m]);
    }
    let (red, pivots) = rref(&aug, m + 1);
    if pivots.contains(&m) {
        return None;
    }
    let mut c = vec![Rat::zero(); m];
    for (row, &p) in red.iter().zip(&pivots) {
        c[p] = row[m].clone();
    }
    Some(c)
}

pub fn inverse(rows: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = rows.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let aug: Vec<Vec<Rat>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            assert_eq!(r.len(), n, "inverse of a non-square matrix");
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    let (red, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>], bcols: usize) -> Vec<Vec<Rat>> {
    a.iter()
        .map(|r| {
            let mut out = vec![Rat::zero(); bcols];
            for (x, brow) in r.iter().zip(b) {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(brow) {
                    *o += x * y;
                }
            }
            out
        })
        .collect()
}

pub fn vec_mat(v: &[Rat], b: &[Vec<Rat>], bcols: usize) -> Vec<Rat> {
    mat_mul(&[v.to_vec()], b, bcols).pop().unwrap()
}
