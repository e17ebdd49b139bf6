//! The fraction field Q(alpha, eps) of bivariate polynomials.

use std::fmt;

use num::Signed;

use super::gaussian::{GaussianRational, Rational};
use super::poly::{div_exact, poly_gcd, BivariatePolynomial};
use super::FieldError;

/// A reduced fraction of bivariate polynomials.
///
/// Canonical form: `gcd(num, den) = 1` and the denominator has coprime
/// integer coefficients with positive leading coefficient (graded lex,
/// `alpha > eps`), so derived equality is semantic equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    num: BivariatePolynomial,
    den: BivariatePolynomial,
}

impl RationalFunction {
    pub fn new(
        num: BivariatePolynomial,
        den: BivariatePolynomial,
    ) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: BivariatePolynomial, den: BivariatePolynomial) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RationalFunction {
                num,
                den: BivariatePolynomial::one(),
            };
        }
        let g = poly_gcd(&num, &den);
        let mut num = div_exact(&num, &g).expect("gcd divides numerator");
        let mut den = div_exact(&den, &g).expect("gcd divides denominator");
        // scale so the denominator is integer-primitive with positive lead
        let mut unit = den.rational_content();
        if den
            .leading_coefficient()
            .expect("nonzero denominator")
            .is_negative()
        {
            unit = -unit;
        }
        let inv_unit = unit.recip();
        num = num.scale(&inv_unit);
        den = den.scale(&inv_unit);
        RationalFunction { num, den }
    }

    pub fn from_poly(p: BivariatePolynomial) -> Self {
        RationalFunction {
            num: p,
            den: BivariatePolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(BivariatePolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BivariatePolynomial::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(BivariatePolynomial::constant(c))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_poly(BivariatePolynomial::from_integer(n))
    }

    /// The formal generator `alpha`.
    pub fn alpha() -> Self {
        Self::from_poly(BivariatePolynomial::alpha())
    }

    /// The formal generator `eps`.
    pub fn eps() -> Self {
        Self::from_poly(BivariatePolynomial::eps())
    }

    pub fn numerator(&self) -> &BivariatePolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &BivariatePolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Constant value when the function is free of both generators.
    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = self
            .num
            .mul(&rhs.den)
            .add(&rhs.num.mul(&self.den));
        let den = self.den.mul(&rhs.den);
        Self::reduced(num, den)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Exact substitution; errors when the denominator vanishes at the
    /// point, reporting the offending point.
    pub fn eval(
        &self,
        alpha: &GaussianRational,
        eps: &GaussianRational,
    ) -> Result<GaussianRational, FieldError> {
        let d = self.den.eval(alpha, eps);
        if d.is_zero() {
            return Err(FieldError::DenominatorVanishes {
                alpha: alpha.clone(),
                eps: eps.clone(),
            });
        }
        self.num.eval(alpha, eps).div(&d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    fn int(n: i64) -> RationalFunction {
        RationalFunction::from_integer(n)
    }

    #[test]
    fn reciprocal_product_is_one() {
        // (alpha/(1+eps)) * ((1+eps)/alpha) = 1
        let a = RationalFunction::new(
            BivariatePolynomial::alpha(),
            BivariatePolynomial::one().add(&BivariatePolynomial::eps()),
        )
        .unwrap();
        let b = a.inv().unwrap();
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn addition_reduces() {
        // alpha/(alpha+eps) + eps/(alpha+eps) = 1
        let den = BivariatePolynomial::alpha().add(&BivariatePolynomial::eps());
        let a = RationalFunction::new(BivariatePolynomial::alpha(), den.clone()).unwrap();
        let b = RationalFunction::new(BivariatePolynomial::eps(), den).unwrap();
        assert!(a.add(&b).is_one());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(BivariatePolynomial::one(), BivariatePolynomial::zero()),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn eval_simple() {
        // (alpha + 1)/(1 + eps) at alpha=1, eps=1 -> 1
        let p = RationalFunction::new(
            BivariatePolynomial::alpha().add(&BivariatePolynomial::one()),
            BivariatePolynomial::one().add(&BivariatePolynomial::eps()),
        )
        .unwrap();
        let v = p
            .eval(
                &GaussianRational::from_integer(1),
                &GaussianRational::from_integer(1),
            )
            .unwrap();
        assert_eq!(v, GaussianRational::from_integer(1));
    }

    #[test]
    fn eval_denominator_vanishes() {
        // 1/(1 + 3*eps) at eps = -1/3 vanishes
        let p = RationalFunction::new(
            BivariatePolynomial::one(),
            BivariatePolynomial::one()
                .add(&BivariatePolynomial::eps().scale(&Rational::from_integer(BigInt::from(3)))),
        )
        .unwrap();
        let err = p
            .eval(
                &GaussianRational::zero(),
                &GaussianRational::from_pair(-1, 3),
            )
            .unwrap_err();
        match err {
            FieldError::DenominatorVanishes { eps, .. } => {
                assert_eq!(eps, GaussianRational::from_pair(-1, 3));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn denominator_normalization() {
        // (2*alpha)/(-2*eps - 2) has canonical form (-alpha)/(eps + 1)
        let p = RationalFunction::new(
            BivariatePolynomial::alpha().scale(&Rational::from_integer(BigInt::from(2))),
            BivariatePolynomial::eps()
                .scale(&Rational::from_integer(BigInt::from(-2)))
                .sub(&BivariatePolynomial::from_integer(2)),
        )
        .unwrap();
        assert_eq!(p.to_string(), "(-alpha)/(eps + 1)");
        assert_eq!(p.denominator().to_string(), "eps + 1");
    }

    #[test]
    fn display_round_forms() {
        assert_eq!(int(-3).to_string(), "-3");
        assert_eq!(RationalFunction::zero().to_string(), "0");
        let q = RationalFunction::alpha()
            .div(&RationalFunction::eps().add(&int(1)))
            .unwrap();
        assert_eq!(q.to_string(), "(alpha)/(eps + 1)");
    }
}
