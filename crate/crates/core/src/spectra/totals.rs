use num_rational::Ratio;
use num_traits::CheckedAdd;

use super::group::GroupSpec;
use super::{for_each_tuple, tuple_count};
use crate::arith::{euler_phi, euler_phi_of, gcd, DivisorList};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::scalar::Exact;

fn divisor_lists(spec: &GroupSpec, limits: &Limits) -> Result<Vec<Vec<u64>>> {
    let exponent = spec.exponent_factorization();
    let lists = spec
        .orders()
        .iter()
        .map(|&n| {
            let f = exponent.of_divisor(n).expect("order divides the exponent");
            Ok(DivisorList::from_factorization(&f, limits.divisors)?.as_slice().to_vec())
        })
        .collect::<Result<Vec<_>>>()?;
    limits.check_convolution(spec, tuple_count(&lists))?;
    Ok(lists)
}

/// Number of cyclic subgroups,
/// `c = sum_{d_i | n_i} phi(d1) ... phi(dr) / phi(lcm(d1, ..., dr))`.
///
/// Summands are accumulated as exact rationals; a non-integral summand or
/// total is reported as an internal error.
pub fn cyclic_total<C: Exact>(spec: &GroupSpec, limits: &Limits) -> Result<C> {
    let lists = divisor_lists(spec, limits)?;
    let exponent = spec.exponent_factorization();
    let phi = |d: u64| euler_phi_of(&exponent.of_divisor(d).expect("divisor of exponent"));

    let mut total: Ratio<C> = Ratio::from_integer(C::zero());
    for_each_tuple(&lists, |t| {
        let num = C::product(t.iter().map(|&d| phi(d)), "cyclic total")?;
        let l = t.iter().fold(1u64, |acc, &d| acc / gcd(acc, d) * d);
        let term = Ratio::new(num, C::from(phi(l)));
        if !term.is_integer() {
            return Err(Error::Internal(format!(
                "non-integral summand {term} at divisors {t:?} of {spec}"
            )));
        }
        total = total.checked_add(&term).ok_or(Error::Overflow("cyclic total"))?;
        Ok(())
    })?;
    if !total.is_integer() {
        return Err(Error::Internal(format!("non-integral cyclic total {total} for {spec}")));
    }
    Ok(total.to_integer())
}

fn rank2_lists(n1: u64, n2: u64, limits: &Limits) -> Result<Vec<Vec<u64>>> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::Domain("cyclic orders must be at least 1".into()));
    }
    let lists = vec![
        DivisorList::with_cap(n1, limits.divisors)?.as_slice().to_vec(),
        DivisorList::with_cap(n2, limits.divisors)?.as_slice().to_vec(),
    ];
    limits.check_convolution(format!("{n1}x{n2}"), tuple_count(&lists))?;
    Ok(lists)
}

/// Number of cyclic subgroups of `C_{n1} x C_{n2}`,
/// `sum_{d1 | n1, d2 | n2} phi(gcd(d1, d2))`.
pub fn cyclic_total_rank2<C: Exact>(n1: u64, n2: u64, limits: &Limits) -> Result<C> {
    let lists = rank2_lists(n1, n2, limits)?;
    let mut sum = C::zero();
    for_each_tuple(&lists, |t| {
        sum = sum.add_checked(&C::from(euler_phi(gcd(t[0], t[1]))), "rank-2 cyclic total")?;
        Ok(())
    })?;
    Ok(sum)
}

/// Number of all subgroups of `C_{n1} x C_{n2}`,
/// `sum_{d1 | n1, d2 | n2} gcd(d1, d2)`.
pub fn subgroup_total_rank2<C: Exact>(n1: u64, n2: u64, limits: &Limits) -> Result<C> {
    let lists = rank2_lists(n1, n2, limits)?;
    let mut sum = C::zero();
    for_each_tuple(&lists, |t| {
        sum = sum.add_checked(&C::from(gcd(t[0], t[1])), "rank-2 subgroup total")?;
        Ok(())
    })?;
    Ok(sum)
}

/// Mean element order,
/// `A = (1 / (n1 ... nr)) sum_{d_i | n_i} phi(d1) ... phi(dr) lcm(d1, ..., dr)`,
/// in lowest terms.
pub fn average_order<C: Exact>(spec: &GroupSpec, limits: &Limits) -> Result<Ratio<C>> {
    let lists = divisor_lists(spec, limits)?;
    let exponent = spec.exponent_factorization();
    let mut sum = C::zero();
    for_each_tuple(&lists, |t| {
        let l = t.iter().fold(1u64, |acc, &d| acc / gcd(acc, d) * d);
        let phis = t
            .iter()
            .map(|&d| euler_phi_of(&exponent.of_divisor(d).expect("divisor of exponent")));
        let term = C::product(phis.chain(std::iter::once(l)), "average order")?;
        sum = sum.add_checked(&term, "average order")?;
        Ok(())
    })?;
    Ok(Ratio::new(sum, spec.size_as()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(orders: &[u64]) -> GroupSpec {
        GroupSpec::new(orders.to_vec()).unwrap()
    }

    const L: Limits = Limits::DEFAULT;

    #[test]
    fn cyclic_total_examples() {
        assert_eq!(cyclic_total::<u64>(&spec(&[2, 2]), &L), Ok(4));
        assert_eq!(cyclic_total::<u64>(&spec(&[4, 2]), &L), Ok(6));
        assert_eq!(cyclic_total::<u64>(&spec(&[2, 2, 2]), &L), Ok(8));
        assert_eq!(cyclic_total::<u64>(&spec(&[1]), &L), Ok(1));
        // a cyclic group has one cyclic subgroup per divisor
        assert_eq!(cyclic_total::<u64>(&spec(&[360]), &L), Ok(24));
    }

    #[test]
    fn rank2_examples() {
        assert_eq!(cyclic_total_rank2::<u64>(4, 2, &L), Ok(6));
        assert_eq!(cyclic_total_rank2::<u64>(1, 360, &L), Ok(24));
        assert_eq!(cyclic_total_rank2::<u64>(6, 6, &L), Ok(20));
        assert_eq!(subgroup_total_rank2::<u64>(2, 2, &L), Ok(5));
        assert_eq!(subgroup_total_rank2::<u64>(4, 2, &L), Ok(8));
        assert_eq!(subgroup_total_rank2::<u64>(360, 1, &L), Ok(24));
        assert!(matches!(subgroup_total_rank2::<u64>(0, 1, &L), Err(Error::Domain(_))));
    }

    #[test]
    fn rank2_agrees_with_general_formula() {
        for n1 in 1..=60 {
            for n2 in 1..=60 {
                assert_eq!(
                    cyclic_total_rank2::<u64>(n1, n2, &L),
                    cyclic_total::<u64>(&spec(&[n1, n2]), &L),
                    "({n1}, {n2})"
                );
            }
        }
    }

    #[test]
    fn average_examples() {
        assert_eq!(average_order::<u64>(&spec(&[2]), &L), Ok(Ratio::new(3, 2)));
        assert_eq!(average_order::<u64>(&spec(&[2, 2]), &L), Ok(Ratio::new(7, 4)));
        assert_eq!(average_order::<u64>(&spec(&[1]), &L), Ok(Ratio::from_integer(1)));
        assert_eq!(average_order::<u64>(&spec(&[4, 2]), &L), Ok(Ratio::new(23, 8)));
    }

    #[test]
    fn convolution_cap() {
        let limits = Limits { convolution: 10, ..L };
        assert!(matches!(
            cyclic_total::<u64>(&spec(&[12, 12]), &limits),
            Err(Error::CapExceeded { count: 36, cap: 10, .. })
        ));
        assert!(matches!(
            subgroup_total_rank2::<u64>(12, 12, &limits),
            Err(Error::CapExceeded { count: 36, .. })
        ));
    }
}
