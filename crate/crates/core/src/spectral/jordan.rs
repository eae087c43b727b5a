//! Jordan block structure per irreducible factor of the characteristic
//! polynomial, computed without leaving `Q`.
//!
//! For a factor `p` of degree `d` and `r_k = rank p(a)^k`, the number of
//! Jordan blocks of size at least `k` belonging to each root of `p` is
//! `(r_(k-1) - r_k) / d`. Block sizes follow by partition duality.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{char_poly, rank};
use crate::spectral::invariant_factors_monic;
use crate::{IntPolynomial, RationalMatrix, RationalPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EigenKind {
    /// Linear factor `s t - r`: the eigenvalue `r / s`.
    RationalEigenvalue,
    /// Irreducible quadratic with negative discriminant, i.e. `a ± bi` with
    /// the real 2x2 block `[[a, -b], [b, a]]`.
    ComplexPair,
    /// Irreducible quadratic with positive discriminant: two irrational
    /// real eigenvalues sharing one block structure.
    RealPair,
    /// Factor of degree >= 3 without rational roots. It may still be
    /// reducible, but every root of it has the same block sizes.
    Unresolved,
}

impl EigenKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EigenKind::RationalEigenvalue => "rational_eigenvalue",
            EigenKind::ComplexPair => "complex_pair",
            EigenKind::RealPair => "real_pair",
            EigenKind::Unresolved => "unresolved",
        }
    }
}

/// Block data for one factor. Multiplicities count each root of `factor`
/// once, so a complex pair of algebraic multiplicity 2 occupies 4
/// dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EigenClass {
    pub factor: IntPolynomial,
    pub kind: EigenKind,
    /// Non-increasing.
    pub block_sizes: Vec<usize>,
    pub algebraic_multiplicity: usize,
    pub geometric_multiplicity: usize,
}

impl EigenClass {
    pub fn degree(&self) -> usize {
        self.factor.degree().unwrap_or(0)
    }

    /// Dimension of the generalized eigenspace of all roots of `factor`.
    pub fn dimension(&self) -> usize {
        self.degree() * self.algebraic_multiplicity
    }

    pub fn eigenvalue(&self) -> Option<BigRational> {
        (self.kind == EigenKind::RationalEigenvalue).then(|| {
            BigRational::new(-self.factor.coeff(0), self.factor.coeff(1))
        })
    }

    pub fn is_zero_eigenvalue(&self) -> bool {
        self.eigenvalue().is_some_and(|l| l.is_zero())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct JordanProfile {
    pub entries: Vec<EigenClass>,
}

impl JordanProfile {
    pub fn dimension(&self) -> usize {
        self.entries.iter().map(EigenClass::dimension).sum()
    }

    pub fn class(&self, factor: &IntPolynomial) -> Option<&EigenClass> {
        self.entries.iter().find(|c| &c.factor == factor)
    }

    /// The profile with the eigenvalue-0 blocks removed: the profile of
    /// the nonnilpotent part.
    pub fn without_zero(&self) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|c| !c.is_zero_eigenvalue())
                .cloned()
                .collect(),
        }
    }
}

fn classify(factor: &IntPolynomial) -> EigenKind {
    match factor.degree() {
        Some(1) => EigenKind::RationalEigenvalue,
        Some(2) => {
            let (c, b, a) = (factor.coeff(0), factor.coeff(1), factor.coeff(2));
            let disc: BigInt = &b * &b - BigInt::from(4) * a * c;
            if disc.is_negative() {
                EigenKind::ComplexPair
            } else {
                EigenKind::RealPair
            }
        }
        _ => EigenKind::Unresolved,
    }
}

/// Splits the squarefree `p` along the exponent pattern of its roots in the
/// invariant factors, so every piece has a single block structure.
fn refine(p: &IntPolynomial, invariants: &[RationalPolynomial], mult: usize) -> Result<Vec<IntPolynomial>> {
    let p = p.to_rational().monic();
    let mut pieces = vec![p.clone()];
    for d in invariants {
        let mut prev = RationalPolynomial::one();
        let mut power = RationalPolynomial::one();
        for _ in 0..mult {
            power = &power * &p;
            let g = d.gcd(&power);
            let level = g.exact_div(&prev)?;
            if level.degree() == Some(0) {
                break;
            }
            pieces = pieces
                .into_iter()
                .flat_map(|piece| {
                    let a = piece.gcd(&level);
                    match a.degree() {
                        Some(da) if da > 0 && Some(da) < piece.degree() => {
                            let b = piece.exact_div(&a).expect("gcd divides");
                            vec![a, b]
                        }
                        _ => vec![piece],
                    }
                })
                .collect();
            prev = g;
        }
    }
    Ok(pieces.iter().map(IntPolynomial::primitive_from_rational).collect())
}

fn blocks_for(a: &RationalMatrix, factor: &IntPolynomial, mult: usize) -> Result<EigenClass> {
    let n = a.rows();
    let deg = factor.degree().expect("nonconstant factor");
    let pa = factor.to_rational().eval_matrix(a)?;
    let mut ranks = vec![n];
    let mut power = RationalMatrix::identity(n);
    for _ in 0..mult {
        power = power.mul(&pa)?;
        ranks.push(rank(&power));
    }
    // at_least[k - 1] = number of blocks of size >= k.
    let mut at_least = Vec::with_capacity(mult);
    for k in 1..=mult {
        let drop = ranks[k - 1] - ranks[k];
        if drop % deg != 0 {
            return Err(Error::Invariant(format!(
                "rank drop {drop} of {factor} at power {k} is not a multiple of its degree"
            )));
        }
        at_least.push(drop / deg);
    }
    let mut block_sizes = Vec::new();
    for k in (1..=mult).rev() {
        let exact = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
        block_sizes.extend(std::iter::repeat_n(k, exact));
    }
    let total: usize = block_sizes.iter().sum();
    if total != mult {
        return Err(Error::Invariant(format!(
            "blocks of {factor} sum to {total}, multiplicity is {mult}"
        )));
    }
    Ok(EigenClass {
        factor: factor.clone(),
        kind: classify(factor),
        geometric_multiplicity: block_sizes.len(),
        block_sizes,
        algebraic_multiplicity: mult,
    })
}

fn order(x: &EigenClass, y: &EigenClass) -> Ordering {
    x.degree().cmp(&y.degree()).then_with(|| match (x.eigenvalue(), y.eigenvalue()) {
        (Some(a), Some(b)) => a.cmp(&b),
        _ => x.factor.coeffs().cmp(y.factor.coeffs()),
    })
}

/// Jordan profile over the `Q`-irreducible factors of the characteristic
/// polynomial, including eigenvalue 0.
///
/// Factors come from the squarefree decomposition followed by rational
/// root extraction; what remains of degree 2 or 3 is irreducible, and
/// larger remainders are split only as far as the invariant factors
/// distinguish their roots.
pub fn jordan_profile(a: &RationalMatrix) -> Result<JordanProfile> {
    a.require_square("Jordan profile")?;
    if a.rows() == 0 {
        return Ok(JordanProfile::default());
    }
    let cp = IntPolynomial::primitive_from_rational(&char_poly(a)?);
    let mut invariants: Option<Vec<RationalPolynomial>> = None;
    let mut entries = Vec::new();
    for (f, mult) in cp.squarefree_decomposition()? {
        let mut rest = f.clone();
        for root in f.rational_roots()? {
            let lin = IntPolynomial::linear_factor(&root);
            rest = rest.exact_div_z(&lin)?;
            entries.push(blocks_for(a, &lin, mult)?);
        }
        let rest = rest.primitive();
        match rest.degree() {
            None | Some(0) => {}
            Some(1..=3) => entries.push(blocks_for(a, &rest, mult)?),
            Some(_) => {
                if invariants.is_none() {
                    invariants = Some(invariant_factors_monic(a)?);
                }
                let invs = invariants.as_deref().expect("just computed");
                for piece in refine(&rest, invs, mult)? {
                    entries.push(blocks_for(a, &piece, mult)?);
                }
            }
        }
    }
    entries.sort_by(order);
    let profile = JordanProfile { entries };
    if profile.dimension() != a.rows() {
        return Err(Error::Invariant(format!(
            "Jordan profile covers {} of {} dimensions",
            profile.dimension(),
            a.rows()
        )));
    }
    Ok(profile)
}
