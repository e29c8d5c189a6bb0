use super::group::GroupSpec;
use super::spectrum::OrderSpectrum;
use super::{for_each_tuple, tuple_count};
use crate::arith::{euler_phi_of, gcd, squarefree_cofactors, DivisorList};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::scalar::Exact;

/// Number of elements of order `delta`, Moebius form:
/// `o_delta = sum_{e | delta} gcd(e, n1) ... gcd(e, nr) mu(delta / e)`.
///
/// Only divisors with squarefree cofactor contribute. Positive and negative
/// terms are summed apart and subtracted once at the end.
pub fn order_count_moebius<C: Exact>(spec: &GroupSpec, delta: u64) -> Result<C> {
    let f = spec.divisor_factorization(delta)?;
    let (mut plus, mut minus) = (C::zero(), C::zero());
    for (e, mu) in squarefree_cofactors(&f) {
        let term = C::product(spec.orders().iter().map(|&n| gcd(e, n)), "moebius sum")?;
        if mu > 0 {
            plus = plus.add_checked(&term, "moebius sum")?;
        } else {
            minus = minus.add_checked(&term, "moebius sum")?;
        }
    }
    plus.checked_sub(&minus).ok_or_else(|| {
        Error::Internal(format!("negative element count for order {delta} in {spec}"))
    })
}

/// Number of elements of order `delta`, lcm-convolution form:
/// `o_delta = sum phi(d1) ... phi(dr)` over `d_i | n_i` with `lcm(d) = delta`.
///
/// A tuple with `lcm = delta` has every `d_i | gcd(delta, n_i)`, so only those
/// divisors are visited.
pub fn order_count_lcm_convolution<C: Exact>(
    spec: &GroupSpec,
    delta: u64,
    limits: &Limits,
) -> Result<C> {
    spec.divisor_factorization(delta)?;
    let exponent = spec.exponent_factorization();
    let mut lists = Vec::with_capacity(spec.rank());
    let mut phis = std::collections::HashMap::new();
    for &n in spec.orders() {
        let g = exponent.of_divisor(gcd(delta, n)).expect("gcd divides the exponent");
        let divs = DivisorList::from_factorization(&g, limits.divisors)?;
        for &d in &divs {
            phis.entry(d)
                .or_insert_with(|| euler_phi_of(&exponent.of_divisor(d).expect("divisor")));
        }
        lists.push(divs.as_slice().to_vec());
    }
    limits.check_convolution(spec, tuple_count(&lists))?;

    let mut sum = C::zero();
    for_each_tuple(&lists, |t| {
        let l = t.iter().fold(1u64, |acc, &d| acc / gcd(acc, d) * d);
        if l == delta {
            let term = C::product(t.iter().map(|d| phis[d]), "lcm convolution")?;
            sum = sum.add_checked(&term, "lcm convolution")?;
        }
        Ok(())
    })?;
    Ok(sum)
}

/// Element and cyclic-subgroup counts for every divisor of the exponent,
/// computed with the Moebius form.
pub fn full_spectrum<C: Exact>(spec: &GroupSpec, limits: &Limits) -> Result<OrderSpectrum<C>> {
    let divs = DivisorList::from_factorization(spec.exponent_factorization(), limits.spectrum)?;
    let counts = divs
        .iter()
        .map(|&delta| Ok((delta, order_count_moebius::<C>(spec, delta)?)))
        .collect::<Result<Vec<_>>>()?;
    OrderSpectrum::from_element_counts(spec.clone(), counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::jordan_phi;
    use num_bigint::BigUint;

    fn spec(orders: &[u64]) -> GroupSpec {
        GroupSpec::new(orders.to_vec()).unwrap()
    }

    const L: Limits = Limits::DEFAULT;

    #[test]
    fn c4_x_c2() {
        let g = spec(&[4, 2]);
        assert_eq!(order_count_moebius::<u128>(&g, 1), Ok(1));
        assert_eq!(order_count_moebius::<u128>(&g, 2), Ok(3));
        assert_eq!(order_count_moebius::<u128>(&g, 4), Ok(4));
        assert_eq!(order_count_lcm_convolution::<u128>(&g, 4, &L), Ok(4));
    }

    #[test]
    fn convolution_examples() {
        assert_eq!(order_count_lcm_convolution::<u64>(&spec(&[6]), 6, &L), Ok(2));
        assert_eq!(order_count_lcm_convolution::<u64>(&spec(&[2, 2, 2]), 2, &L), Ok(7));
        assert_eq!(order_count_moebius::<u64>(&spec(&[2, 2, 2]), 2), Ok(7));
    }

    #[test]
    fn non_divisor_is_rejected() {
        let g = spec(&[4, 2]);
        let err = Error::NotADivisor { delta: 3, exponent: 4 };
        assert_eq!(order_count_moebius::<u64>(&g, 3), Err(err.clone()));
        assert_eq!(order_count_lcm_convolution::<u64>(&g, 3, &L), Err(err));
        assert_eq!(
            order_count_moebius::<u64>(&g, 8),
            Err(Error::NotADivisor { delta: 8, exponent: 4 })
        );
    }

    #[test]
    fn equal_orders_give_jordan() {
        for r in 1..=4usize {
            for n in 1..=30u64 {
                let g = spec(&vec![n; r]);
                for delta in (1..=n).filter(|d| n % d == 0) {
                    assert_eq!(
                        order_count_moebius::<u128>(&g, delta),
                        jordan_phi::<u128>(r as u32, delta),
                        "r = {r}, n = {n}, delta = {delta}"
                    );
                }
            }
        }
    }

    #[test]
    fn spectrum_examples() {
        let s = full_spectrum::<u64>(&spec(&[4, 2]), &L).unwrap();
        let rows: Vec<(u64, u64, u64)> =
            s.entries().iter().map(|e| (e.delta, e.elements, e.cyclic)).collect();
        assert_eq!(rows, vec![(1, 1, 1), (2, 3, 3), (4, 4, 2)]);
        assert_eq!(s.cyclic_total(), Ok(6));

        let s = full_spectrum::<u64>(&spec(&[2, 2]), &L).unwrap();
        let rows: Vec<(u64, u64, u64)> =
            s.entries().iter().map(|e| (e.delta, e.elements, e.cyclic)).collect();
        assert_eq!(rows, vec![(1, 1, 1), (2, 3, 3)]);

        let s = full_spectrum::<u64>(&spec(&[101]), &L).unwrap();
        let rows: Vec<(u64, u64, u64)> =
            s.entries().iter().map(|e| (e.delta, e.elements, e.cyclic)).collect();
        assert_eq!(rows, vec![(1, 1, 1), (101, 100, 1)]);
    }

    #[test]
    fn spectrum_cap() {
        let limits = Limits { spectrum: 3, ..L };
        assert!(matches!(
            full_spectrum::<u64>(&spec(&[12]), &limits),
            Err(Error::CapExceeded { count: 6, cap: 3, .. })
        ));
    }

    #[test]
    fn overflow_is_reported_not_wrapped() {
        let p = 4_294_967_291u64;
        let g = spec(&[p, p, p]);
        assert_eq!(order_count_moebius::<u64>(&g, p), Err(Error::Overflow("moebius sum")));
        let exact: u128 = order_count_moebius(&g, p).unwrap();
        assert_eq!(exact, (p as u128).pow(3) - 1);
        let big: BigUint = order_count_moebius(&g, p).unwrap();
        assert_eq!(big, BigUint::from(exact));
    }
}
