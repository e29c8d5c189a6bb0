//! Closed-form counting over `C_{n1} x ... x C_{nr}`: element-order spectra
//! (Moebius and lcm-convolution forms), cyclic-subgroup counts, the rank-2
//! gcd sums, prime-power formulas, average order and the von Sterneck sum.
//!
//! Every count is generic over the [`Exact`](crate::Exact) integer type it is
//! accumulated in.

mod group;
mod orders;
mod pgroup;
mod spectrum;
mod sterneck;
mod totals;

pub use group::{GroupSpec, PGroupType};
pub use orders::{full_spectrum, order_count_lcm_convolution, order_count_moebius};
pub use pgroup::{cyclic_count_pgroup_type, cyclic_count_prime_power};
pub use spectrum::{OrderSpectrum, SpectrumEntry};
pub use sterneck::{split_divisor, von_sterneck};
pub use totals::{average_order, cyclic_total, cyclic_total_rank2, subgroup_total_rank2};

use crate::error::Result;

/// Visits every tuple `(lists[0][i0], ..., lists[r-1][ir-1])` in row-major
/// order. The caller checks the tuple count against its cap beforehand.
pub(crate) fn for_each_tuple<F>(lists: &[Vec<u64>], mut visit: F) -> Result<()>
where
    F: FnMut(&[u64]) -> Result<()>,
{
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(());
    }
    let mut idx = vec![0usize; lists.len()];
    let mut tuple: Vec<u64> = lists.iter().map(|l| l[0]).collect();
    loop {
        visit(&tuple)?;
        let mut pos = lists.len();
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                tuple[pos] = lists[pos][idx[pos]];
                break;
            }
            idx[pos] = 0;
            tuple[pos] = lists[pos][0];
        }
    }
}

pub(crate) fn tuple_count(lists: &[Vec<u64>]) -> u128 {
    lists
        .iter()
        .map(|l| l.len() as u128)
        .fold(1u128, |a, b| a.saturating_mul(b))
}
