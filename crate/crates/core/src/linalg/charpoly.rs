//! Characteristic polynomials by Faddeev-LeVerrier.
//!
//! Over the integers the divisions by `k` are exact: `c_k` is an integer
//! and `tr(A M_k) = -k c_k`.

use super::Matrix;
use crate::error::Result;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::{IntPolynomial, RationalMatrix};

/// Coefficients `c_0 = 1, c_1, ..., c_n` of `det(x I - a) = sum c_k x^(n-k)`.
fn leverrier<T: Scalar>(a: &Matrix<T>) -> Result<Vec<T>> {
    a.require_square("characteristic polynomial")?;
    let n = a.rows();
    let mut c = Vec::with_capacity(n + 1);
    c.push(T::one());
    let mut m = Matrix::identity(n);
    for k in 1..=n {
        let am = a.mul(&m)?;
        let ck = -(am.trace()? / T::from_usize(k).expect("dimension fits the scalar"));
        m = am.add(&Matrix::identity(n).scale(&ck))?;
        c.push(ck);
    }
    Ok(c)
}

/// Monic characteristic polynomial `det(t I - a)`.
pub fn char_poly<T: Scalar>(a: &Matrix<T>) -> Result<Polynomial<T>> {
    let mut c = leverrier(a)?;
    c.reverse();
    Ok(Polynomial::new(c))
}

/// `det(I - a t)`, the reversal of the characteristic polynomial.
pub fn reversed_char_poly<T: Scalar>(a: &Matrix<T>) -> Result<Polynomial<T>> {
    Ok(Polynomial::new(leverrier(a)?))
}

/// `det(I - a t)` for a square matrix with integer entries.
///
/// Rational entries are rejected with a domain error so that the result,
/// and every zeta function built from it, stays in `Z[t]`.
pub fn char_reversed(a: &RationalMatrix) -> Result<IntPolynomial> {
    a.require_square("det(I - a t)")?;
    reversed_char_poly(&a.to_integer()?)
}
