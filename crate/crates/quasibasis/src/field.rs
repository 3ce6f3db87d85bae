//! Scalar fields with exact arithmetic.
//!
//! Every rank and support decision in this crate is an exact comparison with
//! zero, so the scalar type must support exact addition, multiplication,
//! inversion and equality. [`Rational`] is the default field; [`Gaussian`]
//! covers the complex case as ℚ(i).

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

/// An exact field of scalars.
///
/// Implementations must be exact: `a + b`, `a * b` and `inv` never round,
/// and `is_zero` is a decision, not a tolerance check.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;
}

/// The rational numbers, arbitrary precision.
pub type Rational = BigRational;

/// Shorthand for building a rational from small integers.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

impl Field for Rational {
    fn zero() -> Self {
        Rational::from_integer(BigInt::from(0))
    }

    fn one() -> Self {
        Rational::from_integer(BigInt::from(1))
    }

    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Gaussian rationals ℚ(i): pairs `re + im·i` with exact arithmetic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gaussian::new(<Rational as Field>::zero(), <Rational as Field>::one())
    }

    /// Squared modulus `re² + im²`, a rational.
    fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl From<Rational> for Gaussian {
    fn from(re: Rational) -> Self {
        Gaussian::new(re, <Rational as Field>::zero())
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one = <Rational as Field>::one();
        let imaginary = |value: &Rational| match value {
            v if *v == one => "i".to_string(),
            v if *v == -one.clone() => "-i".to_string(),
            v => format!("{v}i"),
        };
        if Field::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if Field::is_zero(&self.re) {
            write!(f, "{}", imaginary(&self.im))
        } else if self.im > <Rational as Field>::zero() {
            write!(f, "{}+{}", self.re, imaginary(&self.im))
        } else {
            write!(f, "{}-{}", self.re, imaginary(&-self.im.clone()))
        }
    }
}

impl Field for Gaussian {
    fn zero() -> Self {
        Gaussian::new(Field::zero(), Field::zero())
    }

    fn one() -> Self {
        Gaussian::new(Field::one(), Field::zero())
    }

    fn is_zero(&self) -> bool {
        Field::is_zero(&self.re) && Field::is_zero(&self.im)
    }

    fn add(&self, other: &Self) -> Self {
        Gaussian::new(&self.re + &other.re, &self.im + &other.im)
    }

    fn sub(&self, other: &Self) -> Self {
        Gaussian::new(&self.re - &other.re, &self.im - &other.im)
    }

    fn mul(&self, other: &Self) -> Self {
        Gaussian::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    fn neg(&self) -> Self {
        Gaussian::new(-self.re.clone(), -self.im.clone())
    }

    fn inv(&self) -> Option<Self> {
        if Field::is_zero(self) {
            return None;
        }
        let n = self.norm();
        Some(Gaussian::new(&self.re / &n, -(&self.im / &n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_inverse() {
        assert_eq!(ratio(2, 1).inv(), Some(ratio(1, 2)));
        assert_eq!(ratio(-1, 3).inv(), Some(ratio(-3, 1)));
        assert_eq!(int(0).inv(), None);
    }

    #[test]
    fn gaussian_inverse() {
        let z = Gaussian::new(int(1), int(2));
        let inv = z.inv().unwrap();
        assert_eq!(z.mul(&inv), Gaussian::one());
        assert_eq!(<Gaussian as Field>::zero().inv(), None);
    }

    #[test]
    fn gaussian_i_squares_to_minus_one() {
        let i = Gaussian::i();
        assert_eq!(i.mul(&i), Gaussian::one().neg());
    }

    #[test]
    fn gaussian_display() {
        assert_eq!(Gaussian::i().to_string(), "i");
        assert_eq!(Gaussian::i().neg().to_string(), "-i");
        assert_eq!(Gaussian::new(int(1), int(-2)).to_string(), "1-2i");
        assert_eq!(
            Gaussian::new(ratio(1, 2), ratio(1, 3)).to_string(),
            "1/2+1/3i"
        );
        assert_eq!(Gaussian::from(int(-4)).to_string(), "-4");
    }
}
