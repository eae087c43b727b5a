//! Symbolic dynamics of zero-dimensional basic sets: structure matrices,
//! periodic points, Conley indices, zeta functions and the Morse check.

mod conley;
mod morse;
mod oracle;
mod shift;
mod system;
mod zeta;

pub use conley::{conley_index, ConleyIndex, IndexEntry};
pub use morse::{morse_split_check, MorseReport};
pub use oracle::{enumerate_periodic_oracle, enumerate_signed_periodic, EnumerationCaps};
pub use shift::{build_structure_matrix, count_periodic, StructureMatrix, VertexShiftSpec};
pub use system::{BasicSetSpec, ManifoldDims, SystemSpec};
pub use zeta::{lefschetz_series, zeta_basic_set, zeta_from_index};
