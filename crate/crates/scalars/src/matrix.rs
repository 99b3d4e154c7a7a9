//! Small dense matrices over cyclotomic numbers.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::{Cyclotomic, ScalarError};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Cyclotomic::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Cyclotomic::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn scalar(x: Cyclotomic) -> Self {
        Matrix { rows: 1, cols: 1, data: vec![x] }
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

    pub fn row(&self, r: usize) -> &[Cyclotomic] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn scale(&self, k: &Cyclotomic) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix, ScalarError> {
        if !self.is_square() {
            return Err(ScalarError::Singular);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let piv = (c..n).find(|&r| !a[(r, c)].is_zero()).ok_or(ScalarError::Singular)?;
            if piv != c {
                a.swap_rows(piv, c);
                inv.swap_rows(piv, c);
            }
            let p = a[(c, c)].inv()?;
            for k in 0..n {
                a[(c, k)] = &a[(c, k)] * &p;
                inv[(c, k)] = &inv[(c, k)] * &p;
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for k in 0..n {
                    let t = &a[(c, k)] * &f;
                    a[(r, k)] -= &t;
                    let t = &inv[(c, k)] * &f;
                    inv[(r, k)] -= &t;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for k in 0..self.cols {
            self.data.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    /// Rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let (m, n) = (a.rows, a.cols);
        let mut prev = Cyclotomic::one();
        let mut rank = 0;
        for c in 0..n {
            if rank == m {
                break;
            }
            let Some(piv) = (rank..m).find(|&r| !a[(r, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(piv, rank);
            let p = a[(rank, c)].clone();
            let prev_inv = prev.inv().expect("Bareiss pivots are nonzero");
            for r in rank + 1..m {
                let f = a[(r, c)].clone();
                for k in c..n {
                    let v = (&a[(r, k)] * &p - &a[(rank, k)] * &f) * &prev_inv;
                    a[(r, k)] = v;
                }
                for k in 0..c {
                    a[(r, k)] = Cyclotomic::zero();
                }
            }
            prev = p;
            rank += 1;
        }
        rank
    }

    pub fn determinant(&self) -> Cyclotomic {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Cyclotomic::one();
        for c in 0..n {
            let Some(piv) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return Cyclotomic::zero();
            };
            if piv != c {
                a.swap_rows(piv, c);
                det = -det;
            }
            let p = a[(c, c)].clone();
            det = &det * &p;
            let pinv = p.inv().unwrap();
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = &a[(r, c)] * &pinv;
                for k in c..n {
                    let t = &a[(c, k)] * &f;
                    a[(r, k)] -= &t;
                }
            }
        }
        det
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Cyclotomic;
    fn index(&self, (r, c): (usize, usize)) -> &Cyclotomic {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Cyclotomic {
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = &rhs[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        write!(f, "]")
    }
}
