//! Invariant factors from the Smith normal form of `tI - a` over `K[t]`.

use crate::error::Result;
use crate::linalg::Matrix;
use crate::poly::Polynomial;
use crate::scalar::Field;
use crate::{IntPolynomial, RationalMatrix};

type PolyMatrix<T> = Vec<Vec<Polynomial<T>>>;

fn characteristic_matrix<T: Field>(a: &Matrix<T>) -> PolyMatrix<T> {
    let n = a.rows();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|k| {
                    let c = -a[(j, k)].clone();
                    if j == k {
                        Polynomial::new(vec![c, T::one()])
                    } else {
                        Polynomial::constant(c)
                    }
                })
                .collect()
        })
        .collect()
}

/// Diagonalizes `m` in place by Euclidean row/column operations and returns
/// the monic diagonal. Each diagonal entry divides the next.
// Row operations read one row while writing another, so index loops stay.
#[allow(clippy::needless_range_loop)]
fn smith_diagonal<T: Field>(mut m: PolyMatrix<T>) -> Vec<Polynomial<T>> {
    let n = m.len();
    let mut diag = Vec::with_capacity(n);
    for k in 0..n {
        loop {
            // Smallest-degree nonzero entry of the trailing block becomes the pivot.
            let best = (k..n)
                .flat_map(|i| (k..n).map(move |j| (i, j)))
                .filter_map(|(i, j)| m[i][j].degree().map(|d| (d, i, j)))
                .min();
            let Some((_, pi, pj)) = best else {
                diag.extend(std::iter::repeat_n(Polynomial::zero(), n - k));
                return diag;
            };
            m.swap(k, pi);
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            let pivot = m[k][k].clone();
            let mut clean = true;
            for i in k + 1..n {
                if m[i][k].is_zero() {
                    continue;
                }
                let (q, r) = m[i][k].div_rem(&pivot).expect("pivot is nonzero");
                for j in k..n {
                    let v = &m[i][j] - &(&q * &m[k][j]);
                    m[i][j] = v;
                }
                clean &= r.is_zero();
            }
            for j in k + 1..n {
                if m[k][j].is_zero() {
                    continue;
                }
                let (q, r) = m[k][j].div_rem(&pivot).expect("pivot is nonzero");
                for row in m.iter_mut().skip(k) {
                    let v = &row[j] - &(&q * &row[k]);
                    row[j] = v;
                }
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // Row and column k are clear; the pivot must divide the rest.
            let offender = (k + 1..n).find(|&i| {
                (k + 1..n).any(|j| !m[i][j].rem(&pivot).expect("pivot is nonzero").is_zero())
            });
            match offender {
                Some(i) => {
                    for j in k..n {
                        let v = &m[k][j] + &m[i][j];
                        m[k][j] = v;
                    }
                }
                None => break,
            }
        }
        diag.push(m[k][k].monic());
    }
    diag
}

/// Nontrivial invariant factors `d_1 | d_2 | ... | d_m` of `a`, monic.
///
/// Their product is the characteristic polynomial; two matrices over a
/// field are similar iff these lists agree.
pub fn invariant_factors_monic<T: Field>(a: &Matrix<T>) -> Result<Vec<Polynomial<T>>> {
    a.require_square("invariant factors")?;
    Ok(smith_diagonal(characteristic_matrix(a))
        .into_iter()
        .filter(|d| !d.is_one())
        .collect())
}

/// Invariant factors of a rational matrix as primitive integer polynomials.
///
/// The monic factors divide the characteristic polynomial; for integer
/// matrices they are therefore already integral by Gauss's lemma.
pub fn invariant_factors(a: &RationalMatrix) -> Result<Vec<IntPolynomial>> {
    Ok(invariant_factors_monic(a)?
        .iter()
        .map(IntPolynomial::primitive_from_rational)
        .collect())
}

/// Similarity over `Q`. Matrices of different sizes, or non-square
/// matrices, are never similar.
pub fn is_similar(a: &RationalMatrix, b: &RationalMatrix) -> bool {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return false;
    }
    match (invariant_factors_monic(a), invariant_factors_monic(b)) {
        (Ok(x), Ok(y)) => x == y,
        _ => false,
    }
}
