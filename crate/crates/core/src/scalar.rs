//! Integer scalars used for index values.
//!
//! Every index computation is exact. The algorithms are written against
//! [`Scalar`] so that callers can pick a machine integer (`i64`, `i128`) for
//! speed or [`num_bigint::BigInt`] when values outgrow 128 bits. Machine
//! integers report [`Error::Overflow`](crate::Error::Overflow) instead of
//! wrapping.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait Scalar:
    Integer
    + Signed
    + Clone
    + FromPrimitive
    + ToPrimitive
    + CheckedAdd
    + CheckedMul
    + CheckedSub
    + Display
    + Debug
    + Send
    + Sync
    + 'static
{
    fn from_count(x: usize) -> Result<Self> {
        Self::from_usize(x).ok_or(Error::Overflow)
    }

    fn add_checked(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow)
    }

    fn sub_checked(&self, rhs: &Self) -> Result<Self> {
        self.checked_sub(rhs).ok_or(Error::Overflow)
    }

    fn mul_checked(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + FromPrimitive
        + ToPrimitive
        + CheckedAdd
        + CheckedMul
        + CheckedSub
        + Display
        + Debug
        + Send
        + Sync
        + 'static
{
}

/// Returns the numerator of `r` if it is an integer.
pub fn integral<S: Scalar>(r: &Ratio<S>) -> Result<S> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{}/{}", r.numer(), r.denom())))
    }
}
