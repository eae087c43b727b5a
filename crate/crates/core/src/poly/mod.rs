//! Polynomials and rational functions in one variable `t`.

mod integer;
mod polynomial;
mod ratfunc;

pub use integer::reassemble;
pub use polynomial::Polynomial;
pub use ratfunc::RationalFunction;
