use super::group::PGroupType;
use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::scalar::Exact;

fn exact_div<C: Exact>(num: C, den: C, what: &str) -> Result<C> {
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::Internal(format!("{what}: {num} is not divisible by {den}")));
    }
    Ok(q)
}

/// Cyclic subgroups of order `p^nu` in `C_{p^a1} x ... x C_{p^ar}`:
/// `(p^{sum min(nu, a_i)} - p^{sum min(nu - 1, a_i)}) / (p^{nu - 1} (p - 1))`.
///
/// Requires `1 <= nu <= max a_i` and every `a_i >= 1`.
pub fn cyclic_count_prime_power<C: Exact>(p: u64, exponents: &[u32], nu: u32) -> Result<C> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if exponents.is_empty() || exponents.contains(&0) {
        return Err(Error::Domain("prime-power exponents must be at least 1".into()));
    }
    let top = *exponents.iter().max().expect("nonempty");
    if nu == 0 || nu > top {
        return Err(Error::Domain(format!("nu = {nu} is outside 1..={top}")));
    }
    let sum_min = |k: u32| exponents.iter().map(|&a| a.min(k)).sum::<u32>();
    let pc = C::from(p);
    let high = pc.pow_checked(sum_min(nu), "prime-power count")?;
    let low = pc.pow_checked(sum_min(nu - 1), "prime-power count")?;
    let den = pc
        .pow_checked(nu - 1, "prime-power count")?
        .mul_checked(&C::from(p - 1), "prime-power count")?;
    exact_div(high - low, den, "prime-power count")
}

/// Cyclic subgroups of order `p^nu` in the `p`-group of type `(l1, ..., lk)`:
/// `((p^{k - j} - 1) / (p - 1)) p^{l0 + l1 + ... + lj + (k - j - 1)(nu - 1)}`
/// where `l_j < nu <= l_{j+1}` and `l0 = 0`.
///
/// There are no elements of order `p^nu` when `nu > lk`; the count is 0.
pub fn cyclic_count_pgroup_type<C: Exact>(t: &PGroupType, nu: u32) -> Result<C> {
    if nu == 0 {
        return Err(Error::Domain("nu must be at least 1".into()));
    }
    let lambdas = t.lambdas();
    let k = lambdas.len() as u32;
    // number of parts below nu; parts are 1-indexed with l0 = 0 in front
    let j = lambdas.iter().take_while(|&&l| l < nu).count() as u32;
    if j == k {
        return Ok(C::zero());
    }
    let lambda_0 = 0u32;
    let head: u32 = lambda_0 + lambdas[..j as usize].iter().sum::<u32>();
    let power = head + (k - j - 1) * (nu - 1);

    let pc = C::from(t.prime());
    let geometric = exact_div(
        pc.pow_checked(k - j, "p-group type count")? - C::one(),
        C::from(t.prime() - 1),
        "p-group type count",
    )?;
    geometric.mul_checked(&pc.pow_checked(power, "p-group type count")?, "p-group type count")
}
