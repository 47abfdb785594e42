use super::{CycloNum, QuotientError};

/// Square matrix over `ℚ(ζₙ)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycloMatrix {
    dim: usize,
    n: u32,
    entries: Vec<CycloNum>,
}

impl CycloMatrix {
    pub fn from_rows(n: u32, rows: Vec<Vec<CycloNum>>) -> Result<CycloMatrix, QuotientError> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(QuotientError::Dimension { expected: dim, found: row.len() });
            }
            for x in row {
                if x.conductor() != n {
                    return Err(QuotientError::ConductorMismatch);
                }
                entries.push(x);
            }
        }
        Ok(CycloMatrix { dim, n, entries })
    }

    pub fn identity(n: u32, dim: usize) -> CycloMatrix {
        Self::diagonal(n, &vec![CycloNum::one(n); dim])
    }

    pub fn diagonal(n: u32, diag: &[CycloNum]) -> CycloMatrix {
        let dim = diag.len();
        let mut entries = vec![CycloNum::zero(n); dim * dim];
        for (i, d) in diag.iter().enumerate() {
            entries[i * dim + i] = d.clone();
        }
        CycloMatrix { dim, n, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &CycloNum {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> Vec<Vec<CycloNum>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, o: &CycloMatrix) -> CycloMatrix {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = CycloNum::zero(self.n);
                for k in 0..d {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc = acc.add(&a.mul(o.get(k, j)));
                    }
                }
                entries.push(acc);
            }
        }
        CycloMatrix { dim: d, n: self.n, entries }
    }

    pub fn sub(&self, o: &CycloMatrix) -> CycloMatrix {
        CycloMatrix {
            dim: self.dim,
            n: self.n,
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn trace(&self) -> CycloNum {
        (0..self.dim).fold(CycloNum::zero(self.n), |acc, i| acc.add(self.get(i, i)))
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n, self.dim)
    }

    /// Rank over `ℚ(ζₙ)`.
    pub fn rank(&self) -> usize {
        rank(self.rows(), self.dim)
    }
}

/// Rank of a list of rows of length `ncols` over `ℚ(ζₙ)`.
pub fn rank(rows: Vec<Vec<CycloNum>>, ncols: usize) -> usize {
    row_reduce(rows, ncols).len()
}

/// Nonzero rows of the reduced row echelon form.
pub fn row_reduce(mut rows: Vec<Vec<CycloNum>>, ncols: usize) -> Vec<Vec<CycloNum>> {
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}
