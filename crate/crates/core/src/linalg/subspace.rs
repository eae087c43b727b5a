use super::{rref, Matrix};
use crate::error::{Error, Result};
use crate::scalar::Field;

/// Subspace of `T^n` stored by a canonical basis.
///
/// The basis is the transpose of the reduced row echelon form of any
/// spanning set, i.e. column-reduced echelon form: basis vector `i` has a 1
/// in row `pivots[i]`, zeros above it, and every other basis vector is zero
/// in that row. Equal subspaces therefore compare equal structurally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace<T> {
    ambient_dim: usize,
    basis: Matrix<T>,
    pivots: Vec<usize>,
}

impl<T: Field> Subspace<T> {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::zeros(ambient_dim, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given vectors, each of length `ambient_dim`.
    pub fn from_spanning(ambient_dim: usize, vectors: &[Vec<T>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::shape(format!(
                "vector of length {} in a space of dimension {ambient_dim}",
                v.len()
            )));
        }
        let rows = Matrix::from_rows(vectors.to_vec())?;
        if rows.rows() == 0 {
            return Ok(Self::zero(ambient_dim));
        }
        let (r, pivots) = rref(&rows);
        Ok(Self {
            ambient_dim,
            basis: r.transpose(),
            pivots,
        })
    }

    pub fn column_space(m: &Matrix<T>) -> Self {
        let cols: Vec<Vec<T>> = (0..m.cols()).map(|k| m.column(k)).collect();
        Self::from_spanning(m.rows(), &cols).expect("columns have the row count as length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// `ambient_dim x dim` matrix whose columns are the basis vectors.
    pub fn basis(&self) -> &Matrix<T> {
        &self.basis
    }

    /// Ambient coordinate holding the leading 1 of each basis vector.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` lies
    /// outside the subspace.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coords: Vec<T> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = (0..self.ambient_dim).map(|j| {
            coords
                .iter()
                .enumerate()
                .fold(T::zero(), |acc, (i, c)| acc + self.basis[(j, i)].clone() * c.clone())
        });
        rebuilt.zip(v).all(|(a, b)| (a - b.clone()).is_zero()).then_some(coords)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }
}
