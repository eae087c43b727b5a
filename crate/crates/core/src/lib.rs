//! Exact computation of the reduced homological Conley index of
//! zero-dimensional basic sets from their structure matrices.
//!
//! The linear algebra is generic over a [`Scalar`] (any `num_traits::Num`
//! ring) and, where division is needed, a [`Field`]. Everything the
//! dynamics layer does runs over the rationals; the aliases below name the
//! concrete instantiations used throughout.

pub mod dynamics;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use poly::{Polynomial, RationalFunction};
pub use scalar::{Field, Scalar};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rational number with arbitrary-precision parts.
pub type Rational = BigRational;
/// Dense matrix of exact rationals.
pub type RationalMatrix = Matrix<BigRational>;
/// Dense matrix of arbitrary-precision integers.
pub type IntMatrix = Matrix<BigInt>;
/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPolynomial = Polynomial<BigInt>;
/// Polynomial with exact rational coefficients.
pub type RationalPolynomial = Polynomial<BigRational>;
/// Subspace of `Q^n` with a canonical basis.
pub type RationalSubspace = Subspace<BigRational>;
