//! Exact scalar arithmetic: Gaussian rationals Q(i) and the rational
//! function field Q(alpha, eps), unified behind a tagged [`Scalar`].
//!
//! Every algebraic structure in this crate is homogeneous in one field mode;
//! binary operations across modes are rejected rather than coerced.

mod gaussian;
mod poly;
mod ratfunc;

pub use gaussian::{gaussian_sqrt, rational_sqrt, GaussianRational, Rational};
pub use poly::{div_exact, poly_gcd, BivariatePolynomial, Monomial};
pub use ratfunc::RationalFunction;

use std::fmt;

use num::bigint::BigInt;

/// Arithmetic errors raised by scalar operations.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("field mode mismatch: operands live in different scalar fields")]
    ModeMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at alpha={alpha}, eps={eps}")]
    DenominatorVanishes {
        alpha: GaussianRational,
        eps: GaussianRational,
    },
}

/// Which exact field a scalar (or a whole structure) lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldMode {
    /// Concrete parameters in Q(i).
    Gaussian,
    /// Formal parameters alpha, eps in Q(alpha, eps).
    Symbolic,
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Gaussian => write!(f, "gaussian"),
            FieldMode::Symbolic => write!(f, "symbolic"),
        }
    }
}

/// An exact scalar in one of the two supported fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Gaussian(GaussianRational),
    Symbolic(RationalFunction),
}

impl Scalar {
    pub fn mode(&self) -> FieldMode {
        match self {
            Scalar::Gaussian(_) => FieldMode::Gaussian,
            Scalar::Symbolic(_) => FieldMode::Symbolic,
        }
    }

    pub fn zero(mode: FieldMode) -> Self {
        match mode {
            FieldMode::Gaussian => Scalar::Gaussian(GaussianRational::zero()),
            FieldMode::Symbolic => Scalar::Symbolic(RationalFunction::zero()),
        }
    }

    pub fn one(mode: FieldMode) -> Self {
        match mode {
            FieldMode::Gaussian => Scalar::Gaussian(GaussianRational::one()),
            FieldMode::Symbolic => Scalar::Symbolic(RationalFunction::one()),
        }
    }

    pub fn integer(n: i64, mode: FieldMode) -> Self {
        match mode {
            FieldMode::Gaussian => Scalar::Gaussian(GaussianRational::from_integer(n)),
            FieldMode::Symbolic => Scalar::Symbolic(RationalFunction::from_integer(n)),
        }
    }

    pub fn rational(r: Rational, mode: FieldMode) -> Self {
        match mode {
            FieldMode::Gaussian => Scalar::Gaussian(GaussianRational::from_rational(r)),
            FieldMode::Symbolic => Scalar::Symbolic(RationalFunction::constant(r)),
        }
    }

    /// `num/den` as a scalar in the requested mode. Panics if `den` is zero.
    pub fn from_pair(num: i64, den: i64, mode: FieldMode) -> Self {
        Self::rational(Rational::new(BigInt::from(num), BigInt::from(den)), mode)
    }

    /// The formal generator alpha of the symbolic field.
    pub fn alpha() -> Self {
        Scalar::Symbolic(RationalFunction::alpha())
    }

    /// The formal generator eps of the symbolic field.
    pub fn eps() -> Self {
        Scalar::Symbolic(RationalFunction::eps())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Gaussian(g) => g.is_zero(),
            Scalar::Symbolic(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Gaussian(g) => g.is_one(),
            Scalar::Symbolic(r) => r.is_one(),
        }
    }

    pub fn as_gaussian(&self) -> Option<&GaussianRational> {
        match self {
            Scalar::Gaussian(g) => Some(g),
            Scalar::Symbolic(_) => None,
        }
    }

    pub fn as_symbolic(&self) -> Option<&RationalFunction> {
        match self {
            Scalar::Gaussian(_) => None,
            Scalar::Symbolic(r) => Some(r),
        }
    }

    /// The value as an element of Q(i) when it carries no formal parameter:
    /// a Gaussian scalar, or a symbolic scalar that happens to be constant.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self {
            Scalar::Gaussian(g) => Some(g.clone()),
            Scalar::Symbolic(r) => r.as_constant().map(GaussianRational::from_rational),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, FieldError> {
        match (self, rhs) {
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Ok(Scalar::Gaussian(a + b)),
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Ok(Scalar::Symbolic(a.add(b))),
            _ => Err(FieldError::ModeMismatch),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        match (self, rhs) {
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Ok(Scalar::Gaussian(a - b)),
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Ok(Scalar::Symbolic(a.sub(b))),
            _ => Err(FieldError::ModeMismatch),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        match (self, rhs) {
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Ok(Scalar::Gaussian(a * b)),
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Ok(Scalar::Symbolic(a.mul(b))),
            _ => Err(FieldError::ModeMismatch),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Scalar::Gaussian(a) => Scalar::Gaussian(-a),
            Scalar::Symbolic(a) => Scalar::Symbolic(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        match self {
            Scalar::Gaussian(a) => Ok(Scalar::Gaussian(a.inv()?)),
            Scalar::Symbolic(a) => Ok(Scalar::Symbolic(a.inv()?)),
        }
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.mul(&rhs.inv()?)
    }

    /// Multiply by an integer without constructing an intermediate scalar.
    pub fn scale_int(&self, n: i64) -> Self {
        self.mul(&Scalar::integer(n, self.mode()))
            .expect("same mode by construction")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Gaussian(g) => write!(f, "{g}"),
            Scalar::Symbolic(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_mismatch_is_rejected() {
        let a = Scalar::integer(1, FieldMode::Gaussian);
        let b = Scalar::integer(1, FieldMode::Symbolic);
        assert_eq!(a.add(&b), Err(FieldError::ModeMismatch));
        assert_eq!(a.mul(&b), Err(FieldError::ModeMismatch));
    }

    #[test]
    fn additive_identity_both_modes() {
        for mode in [FieldMode::Gaussian, FieldMode::Symbolic] {
            let x = Scalar::from_pair(-7, 3, mode);
            assert_eq!(x.add(&Scalar::zero(mode)).unwrap(), x);
        }
    }

    #[test]
    fn symbolic_constant_extraction() {
        let c = Scalar::alpha().div(&Scalar::alpha()).unwrap();
        assert_eq!(c.as_constant(), Some(GaussianRational::one()));
        assert_eq!(Scalar::alpha().as_constant(), None);
    }

    #[test]
    fn inverse_round_trip() {
        let x = Scalar::from_pair(2, 3, FieldMode::Gaussian);
        assert!(x.mul(&x.inv().unwrap()).unwrap().is_one());
        let y = Scalar::eps().add(&Scalar::one(FieldMode::Symbolic)).unwrap();
        assert!(y.mul(&y.inv().unwrap()).unwrap().is_one());
        assert_eq!(
            Scalar::zero(FieldMode::Symbolic).inv(),
            Err(FieldError::DivisionByZero)
        );
    }
}
