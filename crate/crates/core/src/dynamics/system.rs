use std::collections::{BTreeMap, BTreeSet};

use super::{build_structure_matrix, StructureMatrix, VertexShiftSpec};
use crate::error::{Error, Result};
use crate::IntMatrix;

/// A named zero-dimensional basic set with Morse index `index_u` (the
/// fiber dimension of its unstable bundle).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSetSpec {
    pub name: String,
    pub structure: StructureMatrix,
    /// The vertex shift the structure matrix was built from, if any.
    pub shift: Option<VertexShiftSpec>,
    pub index_u: usize,
    /// `dim W^u` and `dim W^s`, if the user knows them. Carried as
    /// metadata; they cannot be derived from the structure matrix.
    pub manifold_dims: ManifoldDims,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ManifoldDims {
    pub unstable: Option<usize>,
    pub stable: Option<usize>,
}

impl BasicSetSpec {
    pub fn from_shift(name: impl Into<String>, shift: VertexShiftSpec, index_u: usize) -> Self {
        Self {
            name: name.into(),
            structure: build_structure_matrix(&shift),
            shift: Some(shift),
            index_u,
            manifold_dims: ManifoldDims::default(),
        }
    }

    pub fn from_matrix(name: impl Into<String>, matrix: IntMatrix, index_u: usize) -> Result<Self> {
        Ok(Self {
            name: name.into(),
            structure: StructureMatrix::raw(matrix)?,
            shift: None,
            index_u,
            manifold_dims: ManifoldDims::default(),
        })
    }

    /// The vertex shift behind this basic set: the one supplied, or one
    /// recovered from a signed 0/±1 structure matrix.
    pub fn vertex_shift(&self) -> Option<VertexShiftSpec> {
        self.shift.clone().or_else(|| self.structure.to_shift())
    }
}

/// All the basic sets of a diffeomorphism, with optional ambient data.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SystemSpec {
    pub basic_sets: Vec<BasicSetSpec>,
    /// `dim M`.
    pub ambient_dim: Option<usize>,
    /// Action of the diffeomorphism on `H_k(M; R)`, keyed by degree. Trusted.
    pub ambient_maps: BTreeMap<usize, IntMatrix>,
    /// Degree at which the user asserts the basic sets are homologically
    /// split. Recorded, not verified.
    pub split_at: Option<usize>,
}

impl SystemSpec {
    pub fn new(
        basic_sets: Vec<BasicSetSpec>,
        ambient_dim: Option<usize>,
        ambient_maps: BTreeMap<usize, IntMatrix>,
        split_at: Option<usize>,
    ) -> Result<Self> {
        let spec = Self {
            basic_sets,
            ambient_dim,
            ambient_maps,
            split_at,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        let mut seen = BTreeSet::new();
        for b in &self.basic_sets {
            if !seen.insert(b.name.as_str()) {
                problems.push(format!("duplicate basic set name {:?}", b.name));
            }
            if let Some(d) = self.ambient_dim {
                if b.index_u > d {
                    problems.push(format!(
                        "basic set {:?} has index {} above the ambient dimension {d}",
                        b.name, b.index_u
                    ));
                }
            }
        }
        for (k, m) in &self.ambient_maps {
            if let Some(d) = self.ambient_dim {
                if *k > d {
                    problems.push(format!("homology map in degree {k} above the ambient dimension {d}"));
                }
            }
            if !m.is_square() {
                problems.push(format!(
                    "homology map in degree {k} is {}x{}, not square",
                    m.rows(),
                    m.cols()
                ));
            }
        }
        if let (Some(q), Some(d)) = (self.split_at, self.ambient_dim) {
            if q > d {
                problems.push(format!("split_at {q} above the ambient dimension {d}"));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Validation(problems))
        }
    }

    /// `dim M` if given, else the largest index among the basic sets.
    pub fn effective_dim(&self) -> usize {
        self.ambient_dim.unwrap_or_else(|| {
            self.basic_sets.iter().map(|b| b.index_u).max().unwrap_or(0)
        })
    }

    /// Basic sets ordered by name.
    pub fn sorted_basic_sets(&self) -> Vec<&BasicSetSpec> {
        let mut v: Vec<_> = self.basic_sets.iter().collect();
        v.sort_by(|a, b| a.name.cmp(&b.name));
        v
    }
}
