//! Gaussian rationals: complex numbers with rational real and imaginary parts.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use super::FieldError;

/// Exact rational number. The underlying representation is always reduced
/// (gcd of numerator and denominator is 1, denominator positive, zero is 0/1).
pub type Rational = BigRational;

/// An element of Q(i): `re + im*i` with exact rational components.
///
/// Both components are kept canonical by construction, so derived equality
/// is semantic equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        GaussianRational {
            re: Rational::from_integer(BigInt::from(n)),
            im: Rational::zero(),
        }
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    /// `num/den` as a real rational. Panics if `den` is zero.
    pub fn from_pair(num: i64, den: i64) -> Self {
        GaussianRational {
            re: Rational::new(BigInt::from(num), BigInt::from(den)),
            im: Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when the value lies in Z (real with denominator 1).
    pub fn is_integer(&self) -> bool {
        self.im.is_zero() && self.re.is_integer()
    }

    /// The value as a big integer, when it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.is_integer() {
            Some(self.re.to_integer())
        } else {
            None
        }
    }

    /// `re^2 + im^2`, the square of the complex modulus.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self, FieldError> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self * &rhs.inv()?)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: Self) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

/// Canonical literal form: `re` when the value is real, otherwise
/// `re{+|-}|im|i` with the real part always present (`0+1i` for the
/// imaginary unit). Round-trips through the literal parser.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}i", self.re, sign, self.im.abs())
    }
}

/// Exact square root of a non-negative rational, when it exists in Q.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let num = q.numer();
    let den = q.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// One square root of `z` in Q(i), when it exists. The other root is its
/// negation.
pub fn gaussian_sqrt(z: &GaussianRational) -> Option<GaussianRational> {
    if z.is_zero() {
        return Some(GaussianRational::zero());
    }
    if z.im.is_zero() {
        if z.re.is_negative() {
            let r = rational_sqrt(&-z.re.clone())?;
            return Some(GaussianRational::new(Rational::zero(), r));
        }
        let r = rational_sqrt(&z.re)?;
        return Some(GaussianRational::from_rational(r));
    }
    // (x + yi)^2 = a + bi: x^2 + y^2 = |z|, x^2 - y^2 = a, 2xy = b.
    let modulus = rational_sqrt(&z.norm_sqr())?;
    let two = Rational::from_integer(BigInt::from(2));
    let x2 = (&modulus + &z.re) / &two;
    let x = rational_sqrt(&x2)?;
    if x.is_zero() {
        return None;
    }
    let y = &z.im / &(&two * &x);
    Some(GaussianRational::new(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re_n: i64, re_d: i64, im_n: i64, im_d: i64) -> GaussianRational {
        GaussianRational::new(
            Rational::new(BigInt::from(re_n), BigInt::from(re_d)),
            Rational::new(BigInt::from(im_n), BigInt::from(im_d)),
        )
    }

    #[test]
    fn conjugate_product() {
        // (1/2 + i)(1/2 - i) = 1/4 + 1 = 5/4
        let a = g(1, 2, 1, 1);
        let b = g(1, 2, -1, 1);
        assert_eq!(&a * &b, g(5, 4, 0, 1));
    }

    #[test]
    fn inverse_of_i_is_minus_i() {
        let i = GaussianRational::i();
        assert_eq!(i.inv().unwrap(), g(0, 1, -1, 1));
        assert!((&i * &i.inv().unwrap()).is_one());
    }

    #[test]
    fn inverse_of_rational() {
        assert_eq!(g(2, 3, 0, 1).inv().unwrap(), g(3, 2, 0, 1));
    }

    #[test]
    fn inverse_of_zero_errors() {
        assert_eq!(
            GaussianRational::zero().inv(),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(3, 4, 0, 1).to_string(), "3/4");
        assert_eq!(g(-2, 1, 1, 3).to_string(), "-2+1/3i");
        assert_eq!(GaussianRational::i().to_string(), "0+1i");
        assert_eq!(g(0, 1, -5, 2).to_string(), "0-5/2i");
        assert_eq!(GaussianRational::zero().to_string(), "0");
    }

    #[test]
    fn sqrt_in_q_i() {
        // sqrt(-9/4) = (3/2)i
        let r = gaussian_sqrt(&g(-9, 4, 0, 1)).unwrap();
        assert_eq!(r, g(0, 1, 3, 2));
        // sqrt(2i) = 1 + i
        let r = gaussian_sqrt(&g(0, 1, 2, 1)).unwrap();
        assert_eq!(&r * &r, g(0, 1, 2, 1));
        // 2 is not a square in Q(i)
        assert!(gaussian_sqrt(&g(2, 1, 0, 1)).is_none());
        // i itself is not a square in Q(i): x^2+y^2 = 1, x^2-y^2 = 0 has no
        // rational solution
        assert!(gaussian_sqrt(&GaussianRational::i()).is_none());
    }
}
