use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix. Entry `(j, k)` is row `j`, column `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from a list of rows. An empty list is the 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n_cols {
                return Err(Error::shape(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Self {
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Result<Self> {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (k, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::shape(format!(
                    "column {k} has {} entries, expected {rows}",
                    c.len()
                )));
            }
            for (j, v) in c.iter().enumerate() {
                m[(j, k)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_diagonal_blocks(blocks: &[Matrix<T>]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(n, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for j in 0..b.rows {
                for k in 0..b.cols {
                    m[(r0 + j, c0 + k)] = b[(j, k)].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
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

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, j: usize) -> &[T] {
        &self.data[j * self.cols..(j + 1) * self.cols]
    }

    pub fn column(&self, k: usize) -> Vec<T> {
        (0..self.rows).map(|j| self[(j, k)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|j| self.row(j).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for j in 0..self.rows {
            for k in 0..self.cols {
                t[(k, j)] = self[(j, k)].clone();
            }
        }
        t
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.clone() * c.clone())
    }

    /// Exact product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for j in 0..self.rows {
            for l in 0..self.cols {
                let a = &self[(j, l)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.cols {
                    let prod = a.clone() * other[(l, k)].clone();
                    let slot = &mut out[(j, k)];
                    *slot = slot.clone() + prod;
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "add", |a, b| a.clone() + b.clone())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "subtract", |a, b| a.clone() - b.clone())
    }

    fn zip_with(&self, other: &Self, what: &str, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::shape(format!(
                "cannot {what} {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    /// `self^k` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, mut k: u32) -> Result<Self> {
        self.require_square("power")?;
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> Result<T> {
        self.require_square("trace")?;
        Ok((0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, i)].clone()))
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &j in rows {
            data.extend_from_slice(self.row(j));
        }
        Self {
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    pub(crate) fn require_square(&self, what: &str) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::shape(format!(
                "{what} requires a square matrix, got {}x{}",
                self.rows, self.cols
            )))
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.cols {
            self.data.swap(a * self.cols + k, b * self.cols + k);
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (j, k): (usize, usize)) -> &T {
        assert!(j < self.rows && k < self.cols, "index ({j}, {k}) out of bounds");
        &self.data[j * self.cols + k]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (j, k): (usize, usize)) -> &mut T {
        assert!(j < self.rows && k < self.cols, "index ({j}, {k}) out of bounds");
        &mut self.data[j * self.cols + k]
    }
}

impl Matrix<BigInt> {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> Matrix<BigRational> {
        self.map(|x| BigRational::from_integer(x.clone()))
    }
}

impl Matrix<BigRational> {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        Ok(Matrix::<BigInt>::from_i64_rows(rows)?.to_rational())
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.denom().is_one())
    }

    /// The integer matrix with the same entries, or a domain error if any
    /// entry has a nontrivial denominator.
    pub fn to_integer(&self) -> Result<Matrix<BigInt>> {
        if let Some((i, x)) = self.data.iter().enumerate().find(|(_, x)| !x.denom().is_one()) {
            return Err(Error::domain(format!(
                "entry ({}, {}) = {x} is not an integer",
                i / self.cols.max(1),
                i % self.cols.max(1)
            )));
        }
        Ok(self.map(|x| x.numer().clone()))
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    /// One row per line, entries right-aligned to a common width.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows == 0 || self.cols == 0 {
            return write!(f, "[]");
        }
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for j in 0..self.rows {
            if j > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for k in 0..self.cols {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", cells[j * self.cols + k])?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntMatrix;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let a = m(&[vec![1, -1], vec![1, -1]]);
        assert_eq!(IntMatrix::identity(2).mul(&a).unwrap(), a);
    }

    #[test]
    fn horseshoe_squares_to_zero() {
        let a = m(&[vec![1, -1], vec![1, -1]]);
        assert!(a.mul(&a).unwrap().is_zero());
    }

    #[test]
    fn torus_block_square() {
        let a = m(&[vec![0, 1], vec![-1, 1]]);
        assert_eq!(a.pow(2).unwrap(), m(&[vec![-1, 1], vec![-1, 0]]));
        assert_eq!(a.pow(6).unwrap(), IntMatrix::identity(2));
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let a = m(&[vec![1, 2, 3]]);
        assert!(matches!(a.mul(&a), Err(Error::Shape(_))));
        assert!(IntMatrix::from_i64_rows(&[vec![1], vec![1, 2]]).is_err());
    }

    #[test]
    fn empty_matrix() {
        let e = IntMatrix::from_rows(vec![]).unwrap();
        assert_eq!((e.rows(), e.cols()), (0, 0));
        assert_eq!(e.pow(3).unwrap(), e);
        assert_eq!(e.trace().unwrap(), BigInt::from(0));
    }

    #[test]
    fn display_aligns_columns() {
        let a = m(&[vec![1, -10], vec![0, 1]]);
        assert_eq!(a.to_string(), "[  1 -10]\n[  0   1]");
    }

    #[test]
    fn rational_to_integer_rejects_fractions() {
        let mut r = crate::RationalMatrix::identity(2);
        r[(0, 1)] = BigRational::new(1.into(), 2.into());
        assert!(matches!(r.to_integer(), Err(Error::Domain(_))));
    }
}
