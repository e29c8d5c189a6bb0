use super::factor::{factorize, Factorization};
use crate::error::Result;
use crate::scalar::Exact;

/// Moebius function of an already-factored value.
pub fn moebius_of(f: &Factorization) -> i8 {
    if !f.is_squarefree() {
        0
    } else if f.factors().len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn moebius(n: u64) -> i8 {
    moebius_of(&factorize(n))
}

/// Euler's totient of an already-factored value, `n * prod (1 - 1/p)`.
pub fn euler_phi_of(f: &Factorization) -> u64 {
    f.factors()
        .iter()
        .map(|&(p, a)| (p - 1) * p.pow(a - 1))
        .product()
}

pub fn euler_phi(n: u64) -> u64 {
    euler_phi_of(&factorize(n))
}

/// Jordan totient `J_r(n) = n^r * prod_{p | n} (1 - p^-r)` of an already-factored
/// value, evaluated as `prod p^{r(a-1)} (p^r - 1)`.
pub fn jordan_phi_of<C: Exact>(r: u32, f: &Factorization) -> Result<C> {
    let mut acc = C::one();
    for &(p, a) in f.factors() {
        let p = C::from(p);
        let pr = p.pow_checked(r, "jordan totient")?;
        let head = pr.pow_checked(a - 1, "jordan totient")?;
        acc = acc.mul_checked(&head, "jordan totient")?;
        acc = acc.mul_checked(&(pr - C::one()), "jordan totient")?;
    }
    Ok(acc)
}

/// Jordan totient of order `r >= 1`; `jordan_phi(1, n) == euler_phi(n)`.
pub fn jordan_phi<C: Exact>(r: u32, n: u64) -> Result<C> {
    jordan_phi_of(r, &factorize(n))
}

/// The pairs `(e, mu(delta / e))` over divisors `e` of `delta` for which the
/// Moebius factor is nonzero, i.e. `delta / e` squarefree. Ascending in `e`.
pub fn squarefree_cofactors(f: &Factorization) -> Vec<(u64, i8)> {
    let primes: Vec<u64> = f.primes().collect();
    let mut out = Vec::with_capacity(1 << primes.len());
    for mask in 0u32..(1 << primes.len()) {
        let s: u64 = primes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .product();
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        out.push((f.value() / s, sign));
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::super::{divisors, gcd};
    use super::*;
    use crate::error::Error;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn coprime_count(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    // r-tuples mod n whose gcd with n is 1
    fn jordan_count(r: u32, n: u64) -> u64 {
        let total = n.pow(r);
        (0..total)
            .filter(|&idx| {
                let mut g = n;
                let mut rest = idx;
                for _ in 0..r {
                    g = gcd(g, rest % n);
                    rest /= n;
                }
                g == 1
            })
            .count() as u64
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(6), 1);
        assert_eq!(moebius(30), -1);
        assert_eq!(moebius(12), 0);
        assert_eq!(moebius(7), -1);
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), coprime_count(12));
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1_000_000_007), 1_000_000_006);
        let m61 = (1u64 << 61) - 1;
        assert_eq!(euler_phi(m61), m61 - 1);
    }

    #[test]
    fn phi_matches_coprime_count() {
        for n in 1..=500 {
            assert_eq!(euler_phi(n), coprime_count(n), "n = {n}");
        }
    }

    #[test]
    fn jordan_examples() {
        assert_eq!(jordan_count(2, 2), 3);
        assert_eq!(jordan_count(2, 6), 24);
        assert_eq!(jordan_phi::<u128>(2, 2), Ok(3));
        assert_eq!(jordan_phi::<u128>(2, 6), Ok(24));
        for n in 1..=300 {
            assert_eq!(jordan_phi::<u64>(1, n), Ok(euler_phi(n)));
        }
    }

    #[test]
    fn jordan_matches_tuple_count() {
        for r in 1..=3 {
            for n in 1..=12 {
                assert_eq!(jordan_phi::<u64>(r, n), Ok(jordan_count(r, n)), "r = {r}, n = {n}");
            }
        }
    }

    #[test]
    fn jordan_overflow_and_bigint() {
        let n = 1_000_000_007u64;
        assert_eq!(jordan_phi::<u64>(3, n), Err(Error::Overflow("jordan totient")));
        let big: BigUint = jordan_phi(3, n).unwrap();
        assert_eq!(big, BigUint::from(n).pow(3u32) - 1u32);
    }

    #[test]
    fn divisor_sum_of_phi_is_identity() {
        for n in 1..=10_000 {
            let s: u64 = divisors(n).unwrap().iter().map(|&d| euler_phi(d)).sum();
            assert_eq!(s, n);
        }
    }

    #[test]
    fn divisor_sum_of_moebius_is_indicator() {
        for n in 1..=10_000 {
            let s: i64 = divisors(n).unwrap().iter().map(|&d| moebius(d) as i64).sum();
            assert_eq!(s, (n == 1) as i64, "n = {n}");
        }
    }

    #[test]
    fn phi_gcd_lcm_identity() {
        let phi: Vec<u64> = (0..=300u64 * 300).map(|n| if n == 0 { 0 } else { euler_phi(n) }).collect();
        for a in 1..=300u64 {
            for b in 1..=300u64 {
                let g = gcd(a, b);
                let l = a / g * b;
                assert_eq!(phi[a as usize] * phi[b as usize], phi[g as usize] * phi[l as usize]);
            }
        }
    }

    #[test]
    fn squarefree_cofactor_pairs() {
        assert_eq!(squarefree_cofactors(&factorize(12)), vec![(2, 1), (4, -1), (6, -1), (12, 1)]);
        assert_eq!(squarefree_cofactors(&factorize(1)), vec![(1, 1)]);
        for n in 1..=1000 {
            let f = factorize(n);
            let expected: Vec<(u64, i8)> = divisors(n)
                .unwrap()
                .iter()
                .map(|&e| (e, moebius(n / e)))
                .filter(|&(_, m)| m != 0)
                .collect();
            assert_eq!(squarefree_cofactors(&f), expected);
        }
    }

    fn coprime_pair() -> impl Strategy<Value = (u64, u64)> {
        (1u64..=1_000_000, 1u64..=1_000_000).prop_filter("coprime", |&(a, b)| gcd(a, b) == 1)
    }

    proptest! {
        #[test]
        fn phi_is_multiplicative((a, b) in coprime_pair()) {
            prop_assert_eq!(euler_phi(a * b), euler_phi(a) * euler_phi(b));
        }

        #[test]
        fn jordan_is_multiplicative((a, b) in coprime_pair(), r in 1u32..=4) {
            let ab: BigUint = jordan_phi(r, a * b).unwrap();
            let pa: BigUint = jordan_phi(r, a).unwrap();
            let pb: BigUint = jordan_phi(r, b).unwrap();
            prop_assert_eq!(ab, pa * pb);
        }

        #[test]
        fn moebius_is_multiplicative((a, b) in coprime_pair()) {
            prop_assert_eq!(moebius(a * b), moebius(a) * moebius(b));
        }

        #[test]
        fn moebius_zero_iff_square_factor(n in 1u64..1_000_000) {
            let has_square = (2..=1000u64).any(|k| n % (k * k) == 0);
            prop_assert_eq!(moebius(n) == 0, has_square);
        }
    }
}
