use std::collections::BTreeMap;

use super::BasicSetSpec;
use crate::error::{Error, Result};
use crate::spectral::{invariant_factors, nonnilpotent_part};
use crate::{IntPolynomial, RationalMatrix};

/// One nontrivial degree of the index: `CH_k` has dimension `dim` and
/// `chi` is the automorphism `chi_k` on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexEntry {
    pub dim: usize,
    pub chi: RationalMatrix,
    /// Similarity class of `chi`.
    pub invariant_factors: Vec<IntPolynomial>,
}

/// Reduced homological Conley index. Absent degrees are `(0, 0)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConleyIndex {
    pub graded: BTreeMap<usize, IndexEntry>,
}

impl ConleyIndex {
    pub fn degree(&self, k: usize) -> Option<&IndexEntry> {
        self.graded.get(&k)
    }

    /// True when every degree is `(0, 0)`.
    pub fn is_trivial(&self) -> bool {
        self.graded.is_empty()
    }
}

/// Conley index of a zero-dimensional basic set from its structure matrix.
///
/// Only degree `u` can be nontrivial; there `chi_u` is the nonnilpotent
/// part of the structure matrix. A nilpotent structure matrix gives the
/// trivial index.
pub fn conley_index(basic: &BasicSetSpec, ambient_dim: usize) -> Result<ConleyIndex> {
    if basic.index_u > ambient_dim {
        return Err(Error::validation(format!(
            "basic set {:?} has index {} above the ambient dimension {ambient_dim}",
            basic.name, basic.index_u
        )));
    }
    let a = basic.structure.matrix().to_rational();
    let plus = nonnilpotent_part(&a)?;
    let mut graded = BTreeMap::new();
    if !plus.is_empty() {
        let invariant_factors = invariant_factors(&plus.matrix)?;
        graded.insert(
            basic.index_u,
            IndexEntry {
                dim: plus.dim(),
                chi: plus.matrix,
                invariant_factors,
            },
        );
    }
    Ok(ConleyIndex { graded })
}
