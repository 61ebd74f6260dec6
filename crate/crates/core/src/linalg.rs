//! Exact Gaussian elimination over the rationals.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        let n = rows.len();
        Matrix { rows: n, cols, data: rows.into_iter().flatten().collect() }
    }

    /// Columns given as vectors.
    pub fn from_columns(columns: &[Vec<Scalar>]) -> Self {
        let rows = columns.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged matrix columns");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(i, l)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(l, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| dot(self.row(i), v))
            .collect()
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let x = &m[(r, j)] * &inv;
                m[(r, j)] = x;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let factor = m[(i, c)].clone();
                for j in c..m.cols {
                    if m[(r, j)].is_zero() {
                        continue;
                    }
                    let delta = &factor * &m[(r, j)];
                    m[(i, j)] -= delta;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        let mut span = SpanBasis::new(self.cols);
        for i in 0..self.rows {
            span.insert(self.row(i).to_vec());
        }
        span.rank()
    }

    /// Basis of `{x : self · x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut x = vec![Scalar::zero(); self.cols];
                x[free] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    x[p] = -r[(row, free)].clone();
                }
                x
            })
            .collect()
    }

    /// Some solution of `self · x = b`, or `None` if inconsistent. Free
    /// variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "right-hand side has the wrong length");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }

    /// Panics on a non-square matrix.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = Scalar::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det *= &pivot;
            for i in c + 1..m.rows {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let factor = &m[(i, c)] / &pivot;
                for j in c..m.cols {
                    let delta = &factor * &m[(c, j)];
                    m[(i, j)] -= delta;
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// Incrementally maintained echelon basis of a subspace of `Q^n`.
///
/// Every stored row is zero at the pivots of all earlier rows, so reducing
/// a vector against the rows in insertion order is exact.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    len: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn new(len: usize) -> Self {
        SpanBasis { len, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    /// The vector minus its projection along the stored pivots.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.len, "vector length differs from the ambient space");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Whether `other` spans a subspace of this span.
    pub fn contains_span(&self, other: &SpanBasis) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }
}

/// Rank of a family of vectors of equal length.
pub fn rank_of(vectors: &[Vec<Scalar>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut span = SpanBasis::new(first.len());
    for v in vectors {
        span.insert(v.clone());
    }
    span.rank()
}

/// Whether two families span the same subspace.
pub fn same_span(a: &[Vec<Scalar>], b: &[Vec<Scalar>], len: usize) -> bool {
    let mut sa = SpanBasis::new(len);
    let mut sb = SpanBasis::new(len);
    for v in a {
        sa.insert(v.clone());
    }
    for v in b {
        sb.insert(v.clone());
    }
    sa.rank() == sb.rank() && sa.contains_span(&sb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Zero::is_zero));
        assert_eq!(Matrix::zeros(2, 3).nullspace().len(), 3);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1]]);
        assert_eq!(a.solve(&[int(3), int(1)]).unwrap(), vec![int(2), int(1)]);
        let singular = m(&[&[1, 1], &[2, 2]]);
        assert!(singular.solve(&[int(1), int(3)]).is_none());
        assert!(singular.solve(&[int(1), int(2)]).is_some());
    }

    #[test]
    fn determinants() {
        assert_eq!(m(&[&[2, 1], &[1, 1]]).determinant(), int(1));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).determinant(), int(0));
        let v = m(&[&[1, 1, 1], &[1, 2, 4], &[1, 3, 9]]);
        assert_eq!(v.determinant(), int(2));
    }

    #[test]
    fn rref_pivots() {
        let (r, pivots) = m(&[&[0, 2, 4], &[0, 1, 3]]).rref();
        assert_eq!(pivots, vec![1, 2]);
        assert_eq!(r.row(0), &[int(0), int(1), int(0)]);
    }

    #[test]
    fn span_basis_membership() {
        let mut s = SpanBasis::new(3);
        assert!(s.insert(vec![int(1), int(1), int(0)]));
        assert!(s.insert(vec![int(0), int(1), int(1)]));
        assert!(!s.insert(vec![int(1), int(2), int(1)]));
        assert!(s.contains(&[int(2), ratio(5, 2), ratio(1, 2)]));
        assert!(!s.contains(&[int(0), int(0), int(1)]));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn span_equality() {
        let a = vec![vec![int(1), int(0)], vec![int(1), int(1)]];
        let b = vec![vec![int(0), int(3)], vec![int(2), int(0)]];
        assert!(same_span(&a, &b, 2));
        assert!(!same_span(&a[..1], &b[..1], 2));
    }
}
