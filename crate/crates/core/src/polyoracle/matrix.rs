use std::fmt;

use crate::error::{Error, Result};
use crate::Scalar;

/// Dense row-major matrix over a [`Scalar`] field.
#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// An inconsistent system `A x = b`, certified by `y` with `yᵀA = 0` and
/// `yᵀb ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct NoSolution<T> {
    pub certificate: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: data.len(),
            });
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

    /// Stacks rows; all must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&v| T::from_int(v)).collect())
            .collect();
        Matrix::from_rows(cols, data).expect("rectangular rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| dot(self.row(i), x))
            .collect()
    }

    /// Rank by fraction-free (Bareiss) elimination: every update
    /// `(p·a_ij - a_ik·a_kj) / prev` divides exactly, so over an integral
    /// representation the entries stay minors of the input.
    pub fn rank(&self) -> usize {
        let mut m = self.data.clone();
        let cols = self.cols;
        let mut prev = T::one();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.swap(p * cols + j, r * cols + j);
                }
            }
            let pivot = m[r * cols + c].clone();
            for i in r + 1..self.rows {
                let factor = m[i * cols + c].clone();
                for j in c + 1..cols {
                    let updated = (pivot.clone() * m[i * cols + j].clone()
                        - factor.clone() * m[r * cols + j].clone())
                        / prev.clone();
                    m[i * cols + j] = updated;
                }
                m[i * cols + c] = T::zero();
            }
            prev = pivot;
            r += 1;
        }
        r
    }

    /// Reduced row echelon form and the pivot column of each non-zero row.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.reduce_in_place(self.cols);
        (m, pivots)
    }

    /// Gauss-Jordan on the first `limit` columns; returns pivot columns.
    fn reduce_in_place(&mut self, limit: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(p, r);
            let inv = T::one() / self[(r, c)].clone();
            for j in 0..self.cols {
                let v = self[(r, j)].clone() * inv.clone();
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in 0..self.cols {
                    let v = self[(i, j)].clone() - factor.clone() * self[(r, j)].clone();
                    self[(i, j)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// A solution of `self · x = b` (free variables set to zero), or a
    /// certificate of inconsistency.
    pub fn solve(&self, b: &[T]) -> Result<std::result::Result<Vec<T>, NoSolution<T>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                got: b.len(),
            });
        }
        // [A | b | I] tracks which row combination produced each reduced row
        let width = self.cols + 1 + self.rows;
        let mut aug = Matrix::zeros(self.rows, width);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
            aug[(i, self.cols + 1 + i)] = T::one();
        }
        let pivots = aug.reduce_in_place(self.cols);
        for i in pivots.len()..self.rows {
            if !aug[(i, self.cols)].is_zero() {
                let certificate = aug.row(i)[self.cols + 1..].to_vec();
                return Ok(Err(NoSolution { certificate }));
            }
        }
        let mut x = vec![T::zero(); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = aug[(i, self.cols)].clone();
        }
        Ok(Ok(x))
    }

    /// A basis of `{ x : self · x = 0 }`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![T::zero(); self.cols];
                x[f] = T::one();
                for (i, &c) in pivots.iter().enumerate() {
                    x[c] = -r[(i, f)].clone();
                }
                x
            })
            .collect()
    }
}

pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use num_rational::Ratio;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn ranks() {
        assert_eq!(Matrix::<Rational>::identity(3).rank(), 3);
        assert_eq!(Matrix::<Rational>::zeros(3, 4).rank(), 0);
        let m = Matrix::<Rational>::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        // column skipping with a zero leading column
        let m = Matrix::<Rational>::from_int_rows(&[vec![0, 1, 2], vec![0, 2, 5], vec![0, 3, 7]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
        let m = Matrix::<Ratio<i64>>::from_int_rows(&[vec![2, 1], vec![4, 3]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn solving() {
        let id = Matrix::<Rational>::identity(3);
        let b = vec![q(1), q(-2), q(5)];
        assert_eq!(id.solve(&b).unwrap().unwrap(), b);

        let m = Matrix::<Rational>::from_int_rows(&[vec![1, 1], vec![1, 1]]);
        let no = m.solve(&[q(1), q(2)]).unwrap().unwrap_err();
        let y = &no.certificate;
        assert_eq!(dot(y, &[q(1), q(1)]), q(0));
        assert_ne!(dot(y, &[q(1), q(2)]), q(0));

        let m = Matrix::<Rational>::from_int_rows(&[vec![2, 1, 0], vec![0, 1, 1]]);
        let x = m.solve(&[q(3), q(2)]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), vec![q(3), q(2)]);
        assert!(m.solve(&[q(1)]).is_err());
    }

    #[test]
    fn kernels() {
        let m = Matrix::<Rational>::from_int_rows(&[vec![1, 1, 0, 0], vec![0, 0, 1, 1]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| *x == q(0)));
        }
        assert!(Matrix::<Rational>::identity(2).kernel().is_empty());
    }
}
