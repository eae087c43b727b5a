//! Integer polynomials treated as elements of `Q[t]`.
//!
//! Results are canonicalized as primitive integer polynomials with a
//! positive leading coefficient, so they compare structurally.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Polynomial;
use crate::error::{Error, Result};
use crate::{IntPolynomial, RationalPolynomial};

impl Polynomial<BigInt> {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self` divided by its content, sign fixed so the leading coefficient
    /// is positive.
    pub fn primitive(&self) -> Self {
        let Some(lead) = self.leading() else {
            return Self::zero();
        };
        let mut c = self.content();
        if lead.is_negative() {
            c = -c;
        }
        Self::new(self.coeffs().iter().map(|x| x / &c).collect())
    }

    pub fn to_rational(&self) -> RationalPolynomial {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// The canonical primitive integer polynomial associated to `p`.
    pub fn primitive_from_rational(p: &RationalPolynomial) -> Self {
        let lcm = p
            .coeffs()
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
                .collect(),
        )
        .primitive()
    }

    /// `p` as an integer polynomial, or a domain error if any coefficient
    /// is fractional.
    pub fn try_from_rational(p: &RationalPolynomial) -> Result<Self> {
        if p.coeffs().iter().any(|c| !c.is_integer()) {
            return Err(Error::domain(format!("polynomial {p} has non-integer coefficients")));
        }
        Ok(Self::new(p.coeffs().iter().map(|c| c.to_integer()).collect()))
    }

    /// Euclidean division over `Q`.
    pub fn div_rem_q(&self, d: &Self) -> Result<(RationalPolynomial, RationalPolynomial)> {
        self.to_rational().div_rem(&d.to_rational())
    }

    /// Quotient by a divisor over `Q`; the quotient must be integral.
    pub fn exact_div_z(&self, d: &Self) -> Result<Self> {
        Self::try_from_rational(&self.to_rational().exact_div(&d.to_rational())?)
    }

    /// Greatest common divisor over `Q`, as a primitive polynomial with
    /// positive leading coefficient.
    pub fn gcd_q(&self, other: &Self) -> Self {
        Self::primitive_from_rational(&self.to_rational().gcd(&other.to_rational()))
    }

    /// Squarefree decomposition by Yun's algorithm over `Q`.
    ///
    /// Returns pairwise coprime squarefree primitive factors `f_i` with
    /// distinct multiplicities `m_i` such that `prod f_i^m_i` equals `self`
    /// up to a rational unit. Constants decompose to the empty list.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::domain("squarefree decomposition of the zero polynomial"));
        }
        let f = self.to_rational().monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_div(&a0)?;
        let mut c = df.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree().is_some_and(|deg| deg > 0) {
            let a = b.gcd(&d);
            b = b.exact_div(&a)?;
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            if a.degree().is_some_and(|deg| deg > 0) {
                out.push((Self::primitive_from_rational(&a), i));
            }
            i += 1;
        }
        Ok(out)
    }

    /// Distinct rational roots, ascending.
    ///
    /// Uses the rational root theorem on the lowest and highest nonzero
    /// coefficients, so the cost is dominated by factoring those two
    /// integers by trial division.
    pub fn rational_roots(&self) -> Result<Vec<BigRational>> {
        let Some(v) = self.t_adic_valuation() else {
            return Err(Error::domain("roots of the zero polynomial"));
        };
        let mut roots = Vec::new();
        if v > 0 {
            roots.push(BigRational::zero());
        }
        let shifted = Self::new(self.coeffs()[v..].to_vec());
        if shifted.degree() == Some(0) {
            return Ok(roots);
        }
        let low = shifted.coeff(0);
        let high = shifted.leading().cloned().expect("nonzero");
        let nums = divisors(&low)?;
        let dens = divisors(&high)?;
        let q = shifted.to_rational();
        for n in &nums {
            for d in &dens {
                if !n.gcd(d).is_one() {
                    continue;
                }
                for s in [n.clone(), -n.clone()] {
                    let r = BigRational::new(s, d.clone());
                    if q.eval(&r).is_zero() && !roots.contains(&r) {
                        roots.push(r);
                    }
                }
            }
        }
        roots.sort();
        Ok(roots)
    }

    /// `s t - r`, the primitive linear factor vanishing at `r/s`.
    pub fn linear_factor(root: &BigRational) -> Self {
        Self::new(vec![-root.numer().clone(), root.denom().clone()]).primitive()
    }
}

/// Positive divisors of a nonzero integer.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let n = n.abs();
    let Some(m) = n.to_u64() else {
        return Err(Error::Resource(format!(
            "integer {n} too large to factor for rational root search"
        )));
    };
    debug_assert!(n.sign() == Sign::Plus);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= m {
        if m % d == 0 {
            small.push(BigInt::from(d));
            if d != m / d {
                large.push(BigInt::from(m / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Product of factors raised to their multiplicities.
pub fn reassemble(factors: &[(IntPolynomial, usize)]) -> IntPolynomial {
    factors
        .iter()
        .fold(IntPolynomial::one(), |acc, (f, m)| &acc * &f.pow(*m as u32))
}
