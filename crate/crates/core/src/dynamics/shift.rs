use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::IntMatrix;

/// Vertex shift on `n` symbols with an orientation sign per symbol.
///
/// `adjacency[j][k] = 1` iff `j -> k` is an allowed transition;
/// `orientation[k]` is +1 or -1 according to whether the unstable bundle
/// over the cylinder of symbol `k` keeps or flips orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexShiftSpec {
    adjacency: Vec<Vec<bool>>,
    orientation: Vec<i8>,
}

impl VertexShiftSpec {
    /// Validates entries, reporting every offending position.
    pub fn new(adjacency: &[Vec<i64>], orientation: &[i64]) -> Result<Self> {
        let n = adjacency.len();
        let mut problems = Vec::new();
        for (j, row) in adjacency.iter().enumerate() {
            if row.len() != n {
                problems.push(format!("adjacency row {j} has {} entries, expected {n}", row.len()));
                continue;
            }
            for (k, &x) in row.iter().enumerate() {
                if x != 0 && x != 1 {
                    problems.push(format!("adjacency[{j}][{k}] = {x} is not 0 or 1"));
                }
            }
        }
        if orientation.len() != n {
            problems.push(format!(
                "orientation has {} entries, expected {n}",
                orientation.len()
            ));
        }
        for (k, &s) in orientation.iter().enumerate() {
            if s != 1 && s != -1 {
                problems.push(format!("orientation[{k}] = {s} is not +1 or -1"));
            }
        }
        if !problems.is_empty() {
            return Err(Error::Validation(problems));
        }
        Ok(Self {
            adjacency: adjacency
                .iter()
                .map(|r| r.iter().map(|&x| x == 1).collect())
                .collect(),
            orientation: orientation.iter().map(|&s| s as i8).collect(),
        })
    }

    /// All symbols orientation-preserving.
    pub fn unsigned(adjacency: &[Vec<i64>]) -> Result<Self> {
        Self::new(adjacency, &vec![1; adjacency.len()])
    }

    pub fn symbols(&self) -> usize {
        self.adjacency.len()
    }

    pub fn allows(&self, j: usize, k: usize) -> bool {
        self.adjacency[j][k]
    }

    pub fn orientation(&self) -> &[i8] {
        &self.orientation
    }

    pub fn adjacency_rows(&self) -> Vec<Vec<i64>> {
        self.adjacency
            .iter()
            .map(|r| r.iter().map(|&b| i64::from(b)).collect())
            .collect()
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_i64_rows(&self.adjacency_rows()).expect("square by construction")
    }
}

/// Square integer structure matrix of a basic set.
///
/// Matrices built from a vertex shift have entries in {-1, 0, 1}. Matrices
/// supplied directly are accepted with any integer entries and marked raw.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureMatrix {
    matrix: IntMatrix,
    raw: bool,
}

impl StructureMatrix {
    pub fn raw(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::validation(format!(
                "structure matrix must be square, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { matrix, raw: true })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_raw(&self) -> bool {
        self.raw
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// Recovers `(G, delta)` when every entry is in {-1, 0, 1} and the
    /// nonzero entries of each column share a sign. Zero columns get +1.
    pub fn to_shift(&self) -> Option<VertexShiftSpec> {
        let n = self.size();
        let mut adjacency = vec![vec![0i64; n]; n];
        let mut orientation = vec![1i64; n];
        for k in 0..n {
            let mut sign = None;
            for (j, row) in adjacency.iter_mut().enumerate() {
                let x = &self.matrix[(j, k)];
                if x.is_zero() {
                    continue;
                }
                if x.abs() != BigInt::one() {
                    return None;
                }
                let s = if x.is_positive() { 1 } else { -1 };
                if sign.is_some_and(|t| t != s) {
                    return None;
                }
                sign = Some(s);
                row[k] = 1;
            }
            orientation[k] = sign.unwrap_or(1);
        }
        VertexShiftSpec::new(&adjacency, &orientation).ok()
    }
}

/// `A[j][k] = orientation[k] * adjacency[j][k]`: column `k` carries the
/// sign of symbol `k`.
pub fn build_structure_matrix(shift: &VertexShiftSpec) -> StructureMatrix {
    let n = shift.symbols();
    let mut m = IntMatrix::zeros(n, n);
    for j in 0..n {
        for k in 0..n {
            if shift.allows(j, k) {
                m[(j, k)] = BigInt::from(shift.orientation[k]);
            }
        }
    }
    StructureMatrix { matrix: m, raw: false }
}

/// Points of period dividing `n` under the shift: `trace(G^n)`.
pub fn count_periodic(shift: &VertexShiftSpec, n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::domain("period must be at least 1"));
    }
    let n = u32::try_from(n).map_err(|_| Error::domain("period too large"))?;
    shift.adjacency_matrix().pow(n)?.trace()
}
