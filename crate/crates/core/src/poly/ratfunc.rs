use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::IntPolynomial;

/// Quotient of integer polynomials in lowest terms.
///
/// Canonical form: numerator and denominator coprime over `Q`, the
/// denominator has a positive leading coefficient, and the two contents
/// share no common factor. Zero is `0 / 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    numerator: IntPolynomial,
    denominator: IntPolynomial,
}

impl RationalFunction {
    pub fn new(numerator: IntPolynomial, denominator: IntPolynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::domain("rational function with zero denominator"));
        }
        if numerator.is_zero() {
            return Ok(Self::zero());
        }
        let g = numerator.gcd_q(&denominator);
        let mut num = numerator.exact_div_z(&g)?;
        let mut den = denominator.exact_div_z(&g)?;
        let c = num.content().gcd(&den.content());
        let mut c = IntPolynomial::constant(c);
        if den.leading().is_some_and(Signed::is_negative) {
            c = -&c;
        }
        num = num.exact_div_z(&c)?;
        den = den.exact_div_z(&c)?;
        Ok(Self {
            numerator: num,
            denominator: den,
        })
    }

    pub fn zero() -> Self {
        Self {
            numerator: IntPolynomial::zero(),
            denominator: IntPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_polynomial(IntPolynomial::one())
    }

    pub fn from_polynomial(p: IntPolynomial) -> Self {
        Self::new(p, IntPolynomial::one()).expect("denominator is one")
    }

    pub fn numerator(&self) -> &IntPolynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &IntPolynomial {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.numerator.is_one() && self.denominator.is_one()
    }

    /// True when the denominator is the constant 1, i.e. the function is an
    /// element of `Z[t]`.
    pub fn is_integer_polynomial(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            &self.numerator * &other.numerator,
            &self.denominator * &other.denominator,
        )
        .expect("product of nonzero denominators")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("inverse of the zero rational function"));
        }
        Self::new(self.denominator.clone(), self.numerator.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert first.
    pub fn powi(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let e = k.unsigned_abs();
        Ok(Self {
            numerator: base.numerator.pow(e),
            denominator: base.denominator.pow(e),
        })
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a RationalFunction>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, f| acc.mul(f))
    }

    pub fn eval(&self, t: &BigInt) -> Option<num_rational::BigRational> {
        let d = self.denominator.eval(t);
        if d.is_zero() {
            return None;
        }
        Some(num_rational::BigRational::new(self.numerator.eval(t), d))
    }
}

/// Printed with a positive constant term in the denominator when it has
/// one, so `(1 - t)^-1` rather than `-1 / (-1 + t)`.
impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn wrap(p: &IntPolynomial) -> String {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        }
        let (num, den) = if self.denominator.coeff(0).is_negative() {
            (-&self.numerator, -&self.denominator)
        } else {
            (self.numerator.clone(), self.denominator.clone())
        };
        if den.is_one() {
            write!(f, "{num}")
        } else if num.is_one() {
            write!(f, "{}^-1", wrap(&den))
        } else {
            write!(f, "{} / {}", wrap(&num), wrap(&den))
        }
    }
}
