//! Exact elementary number theory on 64-bit naturals: factorization, divisor
//! lists, gcd/lcm and the multiplicative functions the counting formulas are
//! built from.

mod divisors;
mod factor;
mod multiplicative;

pub use divisors::{divisors, DivisorList};
pub use factor::{factorize, is_prime, Factorization};
pub use multiplicative::{
    euler_phi, euler_phi_of, jordan_phi, jordan_phi_of, moebius, moebius_of, squarefree_cofactors,
};

use crate::error::{Error, Result};

/// Greatest common divisor, with `gcd(0, b) = b`.
pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Least common multiple of two naturals, `None` on overflow.
pub fn checked_lcm(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / gcd(a, b)).checked_mul(b)
}

/// Least common multiple of a nonempty list.
pub fn lcm(values: &[u64]) -> Result<u64> {
    let (first, rest) = values
        .split_first()
        .ok_or_else(|| Error::Domain("lcm of an empty list".into()))?;
    rest.iter().try_fold(*first, |acc, &v| {
        checked_lcm(acc, v).ok_or(Error::Overflow("lcm"))
    })
}
