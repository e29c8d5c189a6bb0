use crate::error::{Error, Result};

/// Size caps that keep every computation at predictable desk-scale cost.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of divisors materialized for a single integer.
    pub divisors: usize,
    /// Maximum divisor count of a group exponent for a full spectrum.
    pub spectrum: usize,
    /// Maximum number of divisor tuples visited by a convolution sum.
    pub convolution: u128,
    /// Maximum group size swept by the element oracle.
    pub oracle: u64,
    /// Maximum group size for the rank-2 all-subgroup oracle.
    pub oracle_pairs: u64,
}

impl Limits {
    pub const DEFAULT: Limits = Limits {
        divisors: 1_000_000,
        spectrum: 10_000,
        convolution: 10_000_000,
        oracle: 100_000,
        oracle_pairs: 2_000,
    };

    pub(crate) fn check_convolution(&self, subject: impl ToString, tuples: u128) -> Result<()> {
        if tuples > self.convolution {
            return Err(Error::cap("divisor-tuple count", subject, tuples, self.convolution));
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self::DEFAULT
    }
}
