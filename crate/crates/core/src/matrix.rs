//! Dense exact matrices over any [`Scalar`] field, with reduced-row-echelon
//! solving, rank, determinant and inverse.
//!
//! The same code serves both instantiations used by the crate:
//! plain rationals ([`crate::QMatrix`]) and Q(w) ([`crate::EisMatrix`]).

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Matrix unit: single 1 at `(i, j)`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        m[(i, j)] = T::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row_slice(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (rhs.rows, rhs.cols),
            "matrix addition shape mismatch"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&(-T::one())))
    }

    pub fn scale(&self, k: &T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    /// Ordinary matrix product; shapes are the caller's responsibility.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product shape mismatch: {}x{} times {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        let mut out: Matrix<T> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let term = a.clone() * rhs[(k, j)].clone();
                    let cur = out[(i, j)].clone();
                    out[(i, j)] = cur + term;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self[(i, j)].clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    /// Precomputed row reduction, reusable across many right-hand sides.
    pub fn solver(&self) -> Solver<T> {
        Solver::new(self)
    }

    pub fn rank(&self) -> usize {
        self.solver().rank()
    }

    /// A solution `X` of `self * X = rhs` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>> {
        self.solver().solve(rhs)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "inverse of a non-square matrix".into(),
            ));
        }
        match self.solve(&Matrix::identity(self.rows))? {
            Some(inv) => Ok(inv),
            None => Err(Error::SingularMatrix),
        }
    }

    /// Determinant by elimination; errors on non-square input.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "determinant of a non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut w = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !w[(r, col)].is_zero()) {
                Some(r) => r,
                None => return Ok(T::zero()),
            };
            if pivot_row != col {
                w.swap_rows(pivot_row, col);
                det = -det;
            }
            let pivot = w[(col, col)].clone();
            det = det * pivot.clone();
            for r in col + 1..n {
                let factor = w[(r, col)].clone() / pivot.clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let sub = factor.clone() * w[(col, c)].clone();
                    let cur = w[(r, c)].clone();
                    w[(r, c)] = cur - sub;
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Reduced row echelon form of a matrix `A`, stored together with the row
/// transform `E` (so `E * A` is the reduced form). Solving a new right-hand
/// side is then a matrix-vector product plus a consistency scan.
pub struct Solver<T> {
    n_rows: usize,
    n_cols: usize,
    /// pivot column for each of the first `rank` reduced rows
    pivots: Vec<usize>,
    transform: Matrix<T>,
}

impl<T: Scalar> Solver<T> {
    fn new(a: &Matrix<T>) -> Self {
        let m = a.rows;
        let n = a.cols;
        // work on [A | I]
        let mut w = Matrix::from_fn(m, n + m, |i, j| {
            if j < n {
                a[(i, j)].clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..n {
            let Some(r) = (row..m).find(|&r| !w[(r, col)].is_zero()) else {
                continue;
            };
            w.swap_rows(r, row);
            let pivot = w[(row, col)].clone();
            for c in col..n + m {
                let cur = w[(row, c)].clone();
                w[(row, c)] = cur / pivot.clone();
            }
            for r2 in 0..m {
                if r2 == row || w[(r2, col)].is_zero() {
                    continue;
                }
                let factor = w[(r2, col)].clone();
                for c in col..n + m {
                    let sub = factor.clone() * w[(row, c)].clone();
                    let cur = w[(r2, c)].clone();
                    w[(r2, c)] = cur - sub;
                }
            }
            pivots.push(col);
            row += 1;
            if row == m {
                break;
            }
        }
        let transform = Matrix::from_fn(m, m, |i, j| w[(i, n + j)].clone());
        Solver {
            n_rows: m,
            n_cols: n,
            pivots,
            transform,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Solves `A x = b` for one column, or `None` if inconsistent.
    pub fn solve_vec(&self, b: &[T]) -> Result<Option<Vec<T>>> {
        if b.len() != self.n_rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} entries, system has {} rows",
                b.len(),
                self.n_rows
            )));
        }
        let c = self.transform.matvec(b);
        if c[self.rank()..].iter().any(|v| !v.is_zero()) {
            return Ok(None);
        }
        let mut x = vec![T::zero(); self.n_cols];
        for (p, &col) in self.pivots.iter().enumerate() {
            x[col] = c[p].clone();
        }
        Ok(Some(x))
    }

    /// Column-wise solve of `A X = B`; `None` when any column is inconsistent.
    pub fn solve(&self, rhs: &Matrix<T>) -> Result<Option<Matrix<T>>> {
        if rhs.rows() != self.n_rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side has {} rows, system has {}",
                rhs.rows(),
                self.n_rows
            )));
        }
        let mut out = Matrix::zeros(self.n_cols, rhs.cols());
        for j in 0..rhs.cols() {
            match self.solve_vec(&rhs.col(j))? {
                Some(x) => {
                    for (i, v) in x.into_iter().enumerate() {
                        out[(i, j)] = v;
                    }
                }
                None => return Ok(None),
            }
        }
        Ok(Some(out))
    }

    /// True when `b` lies in the column span of the solved matrix.
    pub fn contains(&self, b: &[T]) -> Result<bool> {
        Ok(self.solve_vec(b)?.is_some())
    }
}
