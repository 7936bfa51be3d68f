//! Dense matrices over an exact ring, with two independent determinant routes.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::arith::EuclideanDomain;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: EuclideanDomain> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged rows");
        Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal(entries: &[R]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(R::zero(), |acc, k| {
                acc + self[(i, k)].clone() * rhs[(k, j)].clone()
            })
        })
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

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Fraction-free (Bareiss) elimination; every division is exact.
    pub fn determinant(&self) -> Result<R> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(R::one());
        }
        let mut a = self.clone();
        let mut prev = R::one();
        let mut negate = false;
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Ok(R::zero());
                };
                a.swap_rows(k, p);
                negate = !negate;
            }
            let pivot = a[(k, k)].clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = pivot.clone() * a[(i, j)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v.exact_div(&prev)?;
                }
                a[(i, k)] = R::zero();
            }
            prev = pivot;
        }
        let det = a[(n - 1, n - 1)].clone();
        Ok(if negate { -det } else { det })
    }

    /// Laplace expansion along the first row. Exponential; meant as a
    /// cross-check for small orders.
    pub fn determinant_cofactor(&self) -> Result<R> {
        let n = self.require_square()?;
        let idx: Vec<usize> = (0..n).collect();
        Ok(self.cofactor_rec(&idx, &idx))
    }

    fn cofactor_rec(&self, rows: &[usize], cols: &[usize]) -> R {
        match rows.len() {
            0 => R::one(),
            1 => self[(rows[0], cols[0])].clone(),
            _ => {
                let mut acc = R::zero();
                for (k, &c) in cols.iter().enumerate() {
                    let e = &self[(rows[0], c)];
                    if e.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = e.clone() * self.cofactor_rec(&rows[1..], &rest);
                    acc = if k % 2 == 0 { acc + term } else { acc - term };
                }
                acc
            }
        }
    }

    pub fn map<S: EuclideanDomain>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;

    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[R]> = (0..self.rows)
            .map(|i| &self.data[i * self.cols..(i + 1) * self.cols])
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::QPoly;
    use num_traits::Zero;

    fn p(c: &[i64]) -> QPoly {
        QPoly::from_i64s(c)
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = Matrix::from_rows(vec![
            vec![p(&[0, 1]), p(&[1, 1]), p(&[2])],
            vec![p(&[1]), p(&[0, 0, 1]), p(&[-1, 1])],
            vec![p(&[3, 0, 1]), p(&[0]), p(&[0, 2])],
        ]);
        assert_eq!(m.determinant().unwrap(), m.determinant_cofactor().unwrap());
    }

    #[test]
    fn zero_pivot_needs_swap() {
        let m = Matrix::from_rows(vec![vec![p(&[0]), p(&[1])], vec![p(&[1]), p(&[0])]]);
        assert_eq!(m.determinant().unwrap(), p(&[-1]));
        let singular = Matrix::from_rows(vec![vec![p(&[0, 1]), p(&[0, 2])], vec![p(&[1]), p(&[2])]]);
        assert!(singular.determinant().unwrap().is_zero());
    }

    #[test]
    fn empty_determinant_is_one() {
        let m: Matrix<QPoly> = Matrix::zeros(0, 0);
        assert_eq!(m.determinant().unwrap(), p(&[1]));
        assert!(Matrix::<QPoly>::zeros(2, 3).determinant().is_err());
    }
}
