use crate::linalg::{kernel_basis, rank, Matrix, Subspace};
use crate::error::{Error, Result};
use crate::scalar::Field;

fn power_to_size<T: Field>(a: &Matrix<T>) -> Result<Matrix<T>> {
    a.require_square("generalized kernel/image")?;
    a.pow(a.rows() as u32)
}

/// `gKer(a) = ker a^n`, the vectors killed by some power of `a`.
///
/// The chain `ker a ⊆ ker a^2 ⊆ ...` is stationary from step `n` on, so a
/// single power suffices.
pub fn generalized_kernel<T: Field>(a: &Matrix<T>) -> Result<Subspace<T>> {
    Ok(kernel_basis(&power_to_size(a)?))
}

/// `gIm(a) = im a^n`, the eventual image.
pub fn generalized_image<T: Field>(a: &Matrix<T>) -> Result<Subspace<T>> {
    Ok(Subspace::column_space(&power_to_size(a)?))
}

/// `dim ker a^k` for `k = 0, ..., len - 1`.
pub fn kernel_chain<T: Field>(a: &Matrix<T>, len: usize) -> Result<Vec<usize>> {
    a.require_square("kernel chain")?;
    let n = a.rows();
    let mut dims = Vec::with_capacity(len);
    let mut p = Matrix::identity(n);
    for _ in 0..len {
        dims.push(n - rank(&p));
        p = p.mul(a)?;
    }
    Ok(dims)
}

/// The map a square matrix induces on its eventual image.
///
/// `V / gKer(a)` is canonically isomorphic to `gIm(a)`, and `a` restricts
/// to an automorphism of `gIm(a)`. `matrix` is that automorphism in the
/// canonical basis of `image_basis`, so `source * B = B * matrix` where `B`
/// is the basis matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedMap<T> {
    pub matrix: Matrix<T>,
    pub image_basis: Subspace<T>,
    pub source: Matrix<T>,
}

impl<T: Field> InducedMap<T> {
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.dim() == 0
    }

    pub fn ambient_dim(&self) -> usize {
        self.source.rows()
    }

    /// Rechecks the intertwining identity and invertibility exactly.
    pub fn verify(&self) -> Result<()> {
        let b = self.image_basis.basis();
        if self.source.mul(b)? != b.mul(&self.matrix)? {
            return Err(Error::Invariant(
                "restriction to the eventual image does not intertwine".into(),
            ));
        }
        if rank(&self.matrix) != self.dim() {
            return Err(Error::Invariant(
                "nonnilpotent part is not invertible".into(),
            ));
        }
        Ok(())
    }
}

/// Nonnilpotent part `a+`: the restriction of `a` to `gIm(a)`. Empty when
/// `a` is nilpotent.
pub fn nonnilpotent_part<T: Field>(a: &Matrix<T>) -> Result<InducedMap<T>> {
    let image = generalized_image(a)?;
    let b = image.basis();
    // Pivot rows of the canonical basis form an identity block, so the
    // coordinates of a*B are just those rows.
    let matrix = a.mul(b)?.select_rows(image.pivots());
    let map = InducedMap {
        matrix,
        image_basis: image,
        source: a.clone(),
    };
    map.verify()?;
    Ok(map)
}
