//! Numeric traits the generic linear algebra is written against.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};


/// A commutative ring element.
///
/// Division is only ever applied where the quotient is known to be exact
/// (fraction-free elimination, Faddeev-LeVerrier), so integer types are
/// valid scalars.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}

/// A scalar whose nonzero elements are invertible.
///
/// Zero tests are exact comparisons, so only exact fields give exact
/// results; the float impls exist for experimentation.
pub trait Field: Scalar {
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed,
    Ratio<T>: Scalar,
{
}
impl Field for f32 {}
impl Field for f64 {}

/// Lifts an integer into a rational.
pub fn rational(n: impl Into<BigInt>) -> Ratio<BigInt> {
    Ratio::from_integer(n.into())
}
