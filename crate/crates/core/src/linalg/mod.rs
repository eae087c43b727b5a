//! Dense exact matrices, fraction-free elimination and subspaces.

mod charpoly;
mod elimination;
mod matrix;
mod subspace;

pub use charpoly::{char_poly, char_reversed, reversed_char_poly};
pub use elimination::{fraction_free_echelon, kernel_basis, rank, rref, Echelon};
pub use matrix::Matrix;
pub use subspace::Subspace;
