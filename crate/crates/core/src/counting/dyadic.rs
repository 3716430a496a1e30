use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact value `numerator * 2^exponent`.
///
/// Kept normalized: the numerator is odd, or zero with exponent zero. Equality
/// is therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: BigInt,
    exponent: i64,
}

impl DyadicRational {
    pub fn new(numerator: impl Into<BigInt>, exponent: i64) -> Self {
        let numerator = numerator.into();
        if numerator.is_zero() {
            return Self::zero();
        }
        let shift = numerator.trailing_zeros().unwrap_or(0);
        Self {
            numerator: numerator >> shift,
            exponent: exponent + shift as i64,
        }
    }

    pub fn zero() -> Self {
        Self {
            numerator: BigInt::zero(),
            exponent: 0,
        }
    }

    pub fn half() -> Self {
        Self::new(1, -1)
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Self::new(v, 0)
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_integer(&self) -> bool {
        self.exponent >= 0
    }

    /// `self * 2^k`.
    pub fn shl(&self, k: i64) -> Self {
        Self::new(self.numerator.clone(), self.exponent + k)
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_integer()
            .then(|| &self.numerator << self.exponent as u64)
    }

    /// Integer value as a count; fails with [`Error::Integrality`] when the
    /// value is fractional or negative.
    pub fn to_count(&self, context: &str) -> Result<BigUint> {
        match self.to_integer().map(|v| v.to_biguint()) {
            Some(Some(v)) => Ok(v),
            _ => Err(Error::Integrality {
                context: context.to_string(),
                value: self.to_string(),
            }),
        }
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exponent >= 0 {
            BigRational::from_integer(&self.numerator << self.exponent as u64)
        } else {
            BigRational::new(
                self.numerator.clone(),
                BigInt::one() << (-self.exponent) as u64,
            )
        }
    }

    fn aligned(&self, other: &Self) -> (BigInt, BigInt, i64) {
        let e = self.exponent.min(other.exponent);
        (
            &self.numerator << (self.exponent - e) as u64,
            &other.numerator << (other.exponent - e) as u64,
            e,
        )
    }
}

impl From<BigUint> for DyadicRational {
    fn from(v: BigUint) -> Self {
        Self::from_integer(BigInt::from_biguint(Sign::Plus, v))
    }
}

impl From<i64> for DyadicRational {
    fn from(v: i64) -> Self {
        Self::from_integer(v)
    }
}

impl<'a> Add<&'a DyadicRational> for &'a DyadicRational {
    type Output = DyadicRational;
    fn add(self, rhs: &DyadicRational) -> DyadicRational {
        let (a, b, e) = self.aligned(rhs);
        DyadicRational::new(a + b, e)
    }
}

impl<'a> Sub<&'a DyadicRational> for &'a DyadicRational {
    type Output = DyadicRational;
    fn sub(self, rhs: &DyadicRational) -> DyadicRational {
        let (a, b, e) = self.aligned(rhs);
        DyadicRational::new(a - b, e)
    }
}

impl<'a> Mul<&'a DyadicRational> for &'a DyadicRational {
    type Output = DyadicRational;
    fn mul(self, rhs: &DyadicRational) -> DyadicRational {
        DyadicRational::new(&self.numerator * &rhs.numerator, self.exponent + rhs.exponent)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for DyadicRational {
            type Output = DyadicRational;
            fn $f(self, rhs: DyadicRational) -> DyadicRational {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for DyadicRational {
    type Output = DyadicRational;
    fn neg(self) -> DyadicRational {
        DyadicRational {
            numerator: -self.numerator,
            exponent: self.exponent,
        }
    }
}

impl Zero for DyadicRational {
    fn zero() -> Self {
        DyadicRational::zero()
    }
    fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }
}

impl std::iter::Sum for DyadicRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl fmt::Display for DyadicRational {
    /// Integers print plainly; fractions as `p/q` with `q` a power of two.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(v) => write!(f, "{v}"),
            None => {
                let den = BigInt::one() << (-self.exponent) as u64;
                let sign = if self.numerator.is_negative() { "-" } else { "" };
                write!(f, "{sign}{}/{den}", self.numerator.abs())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(p: i64, e: i64) -> DyadicRational {
        DyadicRational::new(p, e)
    }

    #[test]
    fn normalizes_and_prints() {
        assert_eq!(d(12, -3), d(3, -1));
        assert_eq!(d(12, -3).to_string(), "3/2");
        assert_eq!(d(0, 7), DyadicRational::zero());
        assert_eq!(d(51, -1).to_string(), "51/2");
        assert_eq!(d(-5, -2).to_string(), "-5/4");
        assert_eq!(d(3, 2).to_string(), "12");
        assert!(d(6, -1).is_integer());
    }

    #[test]
    fn half_integer_cancellation() {
        // -1/2 + 51/2 + 15/2 - 5/2
        let total = &(&(&d(-1, -1) + &d(51, -1)) + &d(15, -1)) - &d(5, -1);
        assert_eq!(total.to_count("test").unwrap(), BigUint::from(30u32));
        assert!(d(1, -1).to_count("half").is_err());
        assert!(d(-2, 0).to_count("negative").is_err());
    }

    proptest! {
        #[test]
        fn arithmetic_matches_rationals(a in -1000i64..1000, ea in -12i64..12, b in -1000i64..1000, eb in -12i64..12) {
            let (x, y) = (d(a, ea), d(b, eb));
            prop_assert_eq!((&x + &y).to_rational(), x.to_rational() + y.to_rational());
            prop_assert_eq!((&x - &y).to_rational(), x.to_rational() - y.to_rational());
            prop_assert_eq!((&x * &y).to_rational(), x.to_rational() * y.to_rational());
            prop_assert_eq!(x.cmp(&y), x.to_rational().cmp(&y.to_rational()));
        }
    }
}
