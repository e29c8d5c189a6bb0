use super::{for_each_tuple, tuple_count};
use crate::arith::{euler_phi_of, factorize, gcd, DivisorList};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::scalar::Exact;

/// The von Sterneck sum `sum phi(d1) ... phi(dr)` over ordered `r`-tuples of
/// divisors of `delta` with `lcm(d1, ..., dr) = delta`.
pub fn von_sterneck<C: Exact>(r: u32, delta: u64, limits: &Limits) -> Result<C> {
    if r == 0 || delta == 0 {
        return Err(Error::Domain("von Sterneck sum needs r >= 1 and delta >= 1".into()));
    }
    let f = factorize(delta);
    let divs = DivisorList::from_factorization(&f, limits.divisors)?;
    let phis: Vec<u64> = divs
        .iter()
        .map(|&d| euler_phi_of(&f.of_divisor(d).expect("divisor")))
        .collect();
    let lists = vec![divs.as_slice().to_vec(); r as usize];
    limits.check_convolution(format!("r = {r}, delta = {delta}"), tuple_count(&lists))?;

    let mut sum = C::zero();
    for_each_tuple(&lists, |t| {
        let l = t.iter().fold(1u64, |acc, &d| acc / gcd(acc, d) * d);
        if l == delta {
            let term = C::product(
                t.iter().map(|d| phis[divs.as_slice().binary_search(d).expect("divisor")]),
                "von Sterneck sum",
            )?;
            sum = sum.add_checked(&term, "von Sterneck sum")?;
        }
        Ok(())
    })?;
    Ok(sum)
}

/// Splits `delta | n m` as `delta = a b` with `a | n` and `b | m`, which is
/// unique when `gcd(n, m) = 1`.
pub fn split_divisor(delta: u64, n: u64, m: u64) -> Result<(u64, u64)> {
    if delta == 0 || n == 0 || m == 0 {
        return Err(Error::Domain("split_divisor needs positive arguments".into()));
    }
    if gcd(n, m) != 1 {
        return Err(Error::Domain(format!("{n} and {m} are not coprime")));
    }
    let a = gcd(delta, n);
    let b = delta / a;
    if !m.is_multiple_of(b) {
        return Err(Error::Domain(format!(
            "{delta} is not a product of a divisor of {n} and a divisor of {m}"
        )));
    }
    Ok((a, b))
}
