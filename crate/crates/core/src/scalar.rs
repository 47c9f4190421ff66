//! Exact integer scalars for delay and representable-integer arithmetic.
//!
//! Delays grow geometrically with the number of blocks, so every operation
//! goes through the checked traits. Fixed-width types report overflow as an
//! error instead of wrapping; [`num_bigint::BigUint`] never overflows.

use std::fmt::{Debug, Display};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Scalar:
    Clone
    + Ord
    + Debug
    + Display
    + Zero
    + One
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
{
    fn from_count(n: usize) -> Result<Self> {
        Self::from_usize(n).ok_or(Error::Overflow("count conversion"))
    }

    fn add_checked(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow("addition"))
    }

    fn mul_checked(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs)
            .ok_or(Error::Overflow("multiplication"))
    }
}

impl<T> Scalar for T where
    T: Clone
        + Ord
        + Debug
        + Display
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}
