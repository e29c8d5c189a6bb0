use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, ToPrimitive};

use crate::error::{Error, Result};

/// Exact unsigned integer type that counts are accumulated in.
///
/// Fixed-width implementors report overflow through the checked operations;
/// `BigUint` never overflows.
pub trait Exact:
    Clone
    + Ord
    + Debug
    + Display
    + FromStr
    + Integer
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + ToPrimitive
    + From<u64>
    + Send
    + Sync
    + 'static
{
    fn add_checked(&self, rhs: &Self, ctx: &'static str) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow(ctx))
    }

    fn mul_checked(&self, rhs: &Self, ctx: &'static str) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow(ctx))
    }

    fn pow_checked(&self, exp: u32, ctx: &'static str) -> Result<Self> {
        num_traits::checked_pow(self.clone(), exp as usize).ok_or(Error::Overflow(ctx))
    }

    /// Product of `u64` factors with overflow detection.
    fn product<I: IntoIterator<Item = u64>>(factors: I, ctx: &'static str) -> Result<Self> {
        factors
            .into_iter()
            .try_fold(Self::one(), |acc, f| acc.mul_checked(&Self::from(f), ctx))
    }
}

impl Exact for u64 {}
impl Exact for u128 {}
impl Exact for BigUint {}
