use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::GeomError;

pub type Rat = BigRational;
pub type IntVector = Vec<BigInt>;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn int_vec(v: &[i64]) -> IntVector {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn to_rat_vec(v: &[BigInt]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

/// Gcd of all entries; zero for the zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides out the content. The zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> IntVector {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Clears denominators and divides out the content, keeping the direction.
pub fn primitive_from_rat(v: &[Rat]) -> IntVector {
    let l = v
        .iter()
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let scaled: IntVector = v.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    primitive(&scaled)
}

/// Lexicographic comparison of integer vectors with the larger vector first.
pub fn lex_desc(a: &IntVector, b: &IntVector) -> std::cmp::Ordering {
    b.cmp(a)
}

/// Dense integer matrix with explicit column count, so a matrix with no rows
/// still knows its width.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: Vec<IntVector>,
    ncols: usize,
}

impl IntMatrix {
    pub fn from_rows(ncols: usize, rows: Vec<IntVector>) -> Result<Self, GeomError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(GeomError::Dimension {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(IntMatrix { rows, ncols })
    }

    /// Panics on ragged or empty input; use `from_rows` for fallible construction.
    pub fn new(rows: Vec<IntVector>) -> Self {
        let ncols = rows.first().map(|r| r.len()).expect("IntMatrix::new needs at least one row");
        Self::from_rows(ncols, rows).expect("ragged matrix")
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| int_vec(r)).collect())
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            rows: vec![vec![BigInt::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.rows[i][i] = e.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[IntVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &IntVector {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<IntVector> {
        self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.rows[i][j] = v;
    }

    pub fn column(&self, j: usize) -> IntVector {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zeros(self.ncols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                t.rows[j][i] = x.clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    /// Row vector times matrix.
    pub fn left_mul(&self, v: &[BigInt]) -> IntVector {
        assert_eq!(v.len(), self.nrows());
        let mut out = vec![BigInt::zero(); self.ncols];
        for (c, r) in v.iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(r) {
                *o += c * x;
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[BigInt]) -> IntVector {
        assert_eq!(v.len(), self.ncols);
        self.rows.iter().map(|r| dot(r, v)).collect()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        self.rows.swap(a, b);
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.rows {
            r.swap(a, b);
        }
    }

    /// row[dst] += k * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        let src_row = self.rows[src].clone();
        for (d, s) in self.rows[dst].iter_mut().zip(&src_row) {
            *d += k * s;
        }
    }

    /// col[dst] += k * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for r in &mut self.rows {
            let s = r[src].clone();
            r[dst] += k * s;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for x in &mut self.rows[i] {
            *x = -x.clone();
        }
    }

    pub fn to_rat(&self) -> Vec<Vec<Rat>> {
        self.rows.iter().map(|r| to_rat_vec(r)).collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt, GeomError> {
        let n = self.nrows();
        if n != self.ncols {
            return Err(GeomError::NotSquare);
        }
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), Ok(d) if d.abs().is_one())
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, rhs.nrows(), "matrix product dimension mismatch");
        IntMatrix {
            rows: self.rows.iter().map(|r| rhs.left_mul(r)).collect(),
            ncols: rhs.ncols,
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
