use num_bigint::BigInt;

use super::{BasicSetSpec, ConleyIndex};
use crate::error::{Error, Result};
use crate::linalg::{char_reversed, reversed_char_poly};
use crate::poly::RationalFunction;
use crate::IntPolynomial;

fn sign_exponent(k: usize) -> i32 {
    if k.is_multiple_of(2) {
        -1
    } else {
        1
    }
}

/// Homology zeta function `Z = det(I - A t)^((-1)^(u+1))`, straight from
/// the structure matrix. The nilpotent part of `A` contributes a factor of
/// 1, so this agrees with the index-based product.
pub fn zeta_basic_set(basic: &BasicSetSpec, ambient_dim: usize) -> Result<RationalFunction> {
    if basic.index_u > ambient_dim {
        return Err(Error::validation(format!(
            "basic set {:?} has index {} above the ambient dimension {ambient_dim}",
            basic.name, basic.index_u
        )));
    }
    let p = char_reversed(&basic.structure.matrix().to_rational())?;
    RationalFunction::from_polynomial(p).powi(sign_exponent(basic.index_u))
}

/// `prod_k det(I - chi_k t)^((-1)^(k+1))` over the degrees of an index.
pub fn zeta_from_index(index: &ConleyIndex) -> Result<RationalFunction> {
    let mut z = RationalFunction::one();
    for (&k, entry) in &index.graded {
        let p = IntPolynomial::try_from_rational(&reversed_char_poly(&entry.chi)?)?;
        z = z.mul(&RationalFunction::from_polynomial(p).powi(sign_exponent(k))?);
    }
    Ok(z)
}

/// `trace(A^k)` for `k = 1..=m`, the signed fixed-point counts of the
/// iterates.
pub fn lefschetz_series(basic: &BasicSetSpec, m: usize) -> Result<Vec<BigInt>> {
    let a = basic.structure.matrix();
    let mut p = a.clone();
    let mut out = Vec::with_capacity(m);
    for k in 1..=m {
        if k > 1 {
            p = p.mul(a)?;
        }
        out.push(p.trace()?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::conley_index;
    use crate::IntMatrix;

    fn basic(rows: &[Vec<i64>], u: usize) -> BasicSetSpec {
        BasicSetSpec::from_matrix("b", IntMatrix::from_i64_rows(rows).unwrap(), u).unwrap()
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(IntPolynomial::from_i64(n), IntPolynomial::from_i64(d)).unwrap()
    }

    #[test]
    fn torus_zetas() {
        assert_eq!(zeta_basic_set(&basic(&[vec![1]], 0), 2).unwrap(), rf(&[1], &[1, -1]));
        assert_eq!(
            zeta_basic_set(&basic(&[vec![0, 1], vec![-1, 1]], 1), 2).unwrap(),
            rf(&[1, -1, 1], &[1])
        );
        assert_eq!(zeta_basic_set(&basic(&[vec![1]], 2), 2).unwrap(), rf(&[1], &[1, -1]));
    }

    #[test]
    fn index_route_agrees() {
        for (rows, u) in [
            (vec![vec![1, -1], vec![1, -1]], 1),
            (vec![vec![1, 0, -1, -1], vec![0, 1, 0, 0], vec![0, 1, 0, 0], vec![0, 1, 0, 0]], 1),
            (vec![vec![0, 1], vec![-1, 1]], 1),
            (vec![vec![1]], 2),
        ] {
            let b = basic(&rows, u);
            let idx = conley_index(&b, 2).unwrap();
            assert_eq!(zeta_from_index(&idx).unwrap(), zeta_basic_set(&b, 2).unwrap());
        }
    }

    #[test]
    fn horseshoe_zeta_is_one() {
        assert!(zeta_basic_set(&basic(&[vec![1, -1], vec![1, -1]], 1), 2).unwrap().is_one());
    }

    #[test]
    fn lefschetz() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(lefschetz_series(&basic(&[vec![1, -1], vec![1, -1]], 1), 4).unwrap(), ints(&[0, 0, 0, 0]));
        assert_eq!(lefschetz_series(&basic(&[vec![1]], 0), 3).unwrap(), ints(&[1, 1, 1]));
        assert_eq!(
            lefschetz_series(&basic(&[vec![0, 1], vec![-1, 1]], 1), 12).unwrap(),
            ints(&[1, -1, -2, -1, 1, 2, 1, -1, -2, -1, 1, 2])
        );
    }
}
