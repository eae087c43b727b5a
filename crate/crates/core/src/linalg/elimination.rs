//! Fraction-free (Bareiss) row reduction and the routines built on it.
//!
//! After eliminating with pivot `p_k`, every entry below the active row is a
//! `(k+1)`-minor of the input, so the division by the previous pivot is
//! exact in any integral domain and integer inputs never leave the integers.

use super::{Matrix, Subspace};
use crate::scalar::{Field, Scalar};

/// Row echelon form produced by fraction-free elimination.
#[derive(Clone, Debug, PartialEq)]
pub struct Echelon<T> {
    /// Same shape as the input; rows past `pivots.len()` are zero.
    pub matrix: Matrix<T>,
    /// Pivot column of each nonzero row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl<T> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn fraction_free_echelon<T: Scalar>(a: &Matrix<T>) -> Echelon<T> {
    let mut m = a.clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut prev = T::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(p, r);
        let pivot = m[(r, c)].clone();
        for i in r + 1..rows {
            let lead = m[(i, c)].clone();
            for j in c + 1..cols {
                let v = pivot.clone() * m[(i, j)].clone() - lead.clone() * m[(r, j)].clone();
                m[(i, j)] = v / prev.clone();
            }
            m[(i, c)] = T::zero();
        }
        // Columns left of the pivot in lower rows are already zero; entries
        // in skipped columns were scaled through by earlier steps.
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    Echelon { matrix: m, pivots }
}

pub fn rank<T: Scalar>(a: &Matrix<T>) -> usize {
    fraction_free_echelon(a).rank()
}

/// Reduced row echelon form, keeping only the nonzero rows.
///
/// Returns the `rank x cols` reduced matrix and its pivot columns. The
/// result is unique for the row space of `a`.
pub fn rref<T: Field>(a: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let Echelon { matrix, pivots } = fraction_free_echelon(a);
    let r = pivots.len();
    let cols = matrix.cols();
    let keep: Vec<usize> = (0..r).collect();
    let mut m = matrix.select_rows(&keep);
    for i in (0..r).rev() {
        let p = pivots[i];
        let inv = m[(i, p)].inv();
        for j in p..cols {
            m[(i, j)] = m[(i, j)].clone() * inv.clone();
        }
        for h in 0..i {
            let f = m[(h, p)].clone();
            if f.is_zero() {
                continue;
            }
            for j in p..cols {
                let v = m[(h, j)].clone() - f.clone() * m[(i, j)].clone();
                m[(h, j)] = v;
            }
        }
    }
    (m, pivots)
}

/// Null space `{v : a v = 0}` with its canonical basis.
pub fn kernel_basis<T: Field>(a: &Matrix<T>) -> Subspace<T> {
    let n = a.cols();
    let (r, pivots) = rref(a);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<Vec<T>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![T::zero(); n];
            v[f] = T::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect();
    Subspace::from_spanning(n, &vectors).expect("kernel vectors have ambient length")
}
