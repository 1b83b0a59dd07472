//! Dense integer matrices and exact elimination helpers.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::BigRat;

/// Integer vector; coordinates of lattice points and normals.
pub type IntVec = Vec<BigInt>;

pub fn int_vec(values: &[i64]) -> IntVec {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub_vec(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vec(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Row-major rectangular integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must share one length.
    pub fn from_rows(rows: &[IntVec]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMat {
            rows: r,
            cols: c,
            data: rows.iter().flatten().cloned().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<IntVec> = rows.iter().map(|r| int_vec(r)).collect();
        Self::from_rows(&rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> IntVec {
        self.row(i).to_vec()
    }

    pub fn column(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<IntVec> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += k * row[src]`
    pub fn add_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * k;
            self[(dst, j)] += v;
        }
    }

    /// `col[dst] += k * col[src]`
    pub fn add_col_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, src)] * k;
            self[(i, dst)] += v;
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = -std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = v;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * &a[(n - 1, n - 1)]
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rank_of_rows(&self.to_rows())
    }

    /// Exact inverse over the rationals, or `None` if singular.
    pub fn rational_inverse(&self) -> Option<Vec<Vec<BigRat>>> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<BigRat>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRat> = self.row(i).iter().map(|v| BigRat::from_integer(v.clone())).collect();
                row.extend((0..n).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }));
                row
            })
            .collect();
        for k in 0..n {
            let p = (k..n).find(|&i| !a[i][k].is_zero())?;
            a.swap(p, k);
            let inv = a[k][k].recip();
            for v in a[k].iter_mut() {
                *v *= &inv;
            }
            for i in 0..n {
                if i != k && !a[i][k].is_zero() {
                    let f = a[i][k].clone();
                    for j in 0..2 * n {
                        let t = &f * &a[k][j];
                        a[i][j] -= t;
                    }
                }
            }
        }
        Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
    }

    /// Inverse of a unimodular matrix as an integer matrix.
    pub fn unimodular_inverse(&self) -> Option<IntMat> {
        let inv = self.rational_inverse()?;
        let mut out = IntMat::zeros(self.rows, self.cols);
        for (i, row) in inv.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_integer() {
                    return None;
                }
                out[(i, j)] = v.to_integer();
            }
        }
        Some(out)
    }
}

impl Index<(usize, usize)> for IntMat {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect::<Vec<_>>()))
            .finish()
    }
}

/// Rank of a list of integer vectors (all of one length) over the rationals.
pub fn rank_of_rows(rows: &[IntVec]) -> usize {
    let mut work: Vec<IntVec> = rows.to_vec();
    let cols = work.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..work.len()).find(|&i| !work[i][c].is_zero()) else {
            continue;
        };
        work.swap(p, rank);
        let pivot = work[rank][c].clone();
        for i in rank + 1..work.len() {
            if work[i][c].is_zero() {
                continue;
            }
            let f = work[i][c].clone();
            for j in c..cols {
                let v = &work[i][j] * &pivot - &work[rank][j] * &f;
                work[i][j] = v;
            }
        }
        rank += 1;
    }
    rank
}

/// Affine dimension of a point set; `-1` for the empty set.
pub fn affine_dimension(points: &[&IntVec]) -> isize {
    let Some((first, rest)) = points.split_first() else {
        return -1;
    };
    let diffs: Vec<IntVec> = rest.iter().map(|p| sub_vec(p, first)).collect();
    rank_of_rows(&diffs) as isize
}

/// Sign of `v` as -1, 0 or 1.
pub fn signum(v: &BigInt) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        assert_eq!(IntMat::from_i64(&[&[2, 1], &[1, 1]]).determinant(), 1.into());
        assert_eq!(IntMat::from_i64(&[&[1, 2], &[3, 4]]).determinant(), (-2).into());
        assert_eq!(
            IntMat::from_i64(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]).determinant(),
            (-2).into()
        );
        assert_eq!(IntMat::from_i64(&[&[1, 2], &[2, 4]]).determinant(), 0.into());
        assert_eq!(IntMat::zeros(0, 0).determinant(), 1.into());
    }

    #[test]
    fn rank_and_affine_dimension() {
        let m = IntMat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let pts = [int_vec(&[0, 0]), int_vec(&[1, 1]), int_vec(&[2, 2])];
        let refs: Vec<&IntVec> = pts.iter().collect();
        assert_eq!(affine_dimension(&refs), 1);
        assert_eq!(affine_dimension(&refs[..1]), 0);
        assert_eq!(affine_dimension(&[]), -1);
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let m = IntMat::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.unimodular_inverse().unwrap();
        assert_eq!(m.mul(&inv), IntMat::identity(2));
        assert!(IntMat::from_i64(&[&[2, 0], &[0, 1]]).unimodular_inverse().is_none());
    }
}
