//! Scalar traits shared by every exact computation in the crate.
//!
//! [`Field`] is the coefficient interface for dense polynomials; it is
//! implemented for [`BigRational`] (giving `Q[t]`) and for
//! [`RationalFunction`](super::RationalFunction) (giving `Q(q)[y]`).
//! [`EuclideanDomain`] is the ring interface used by determinants and the
//! Smith normal form.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::ArithError;

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;

    fn div_field(&self, other: &Self) -> Result<Self, ArithError> {
        other
            .inverse()
            .map(|inv| self.clone() * inv)
            .ok_or(ArithError::ZeroInverse)
    }
}

impl Field for BigRational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

/// Integral domain with a Euclidean division and a canonical unit-normal form.
pub trait EuclideanDomain:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    /// Euclidean size; `None` for zero.
    fn norm(&self) -> Option<usize>;

    fn div_rem(&self, other: &Self) -> Result<(Self, Self), ArithError>;

    /// The unit-normal associate (monic for polynomials).
    fn normalize(&self) -> Self;

    fn is_unit(&self) -> bool;

    /// Unit-normal gcd.
    fn gcd(&self, other: &Self) -> Result<Self, ArithError>;

    /// `(g, u, v)` with `u·self + v·other = g = gcd(self, other)`.
    fn bezout(&self, other: &Self) -> Result<(Self, Self, Self), ArithError>;

    fn exact_div(&self, other: &Self) -> Result<Self, ArithError> {
        let (quot, rem) = self.div_rem(other)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(ArithError::InexactDivision)
        }
    }

    /// Whether `self` divides `other`.
    fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        matches!(other.div_rem(self), Ok((_, r)) if r.is_zero())
    }
}
