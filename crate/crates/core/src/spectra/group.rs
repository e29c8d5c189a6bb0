use std::fmt;
use std::str::FromStr;

use crate::arith::{self, factorize, is_prime, Factorization};
use crate::error::{Error, Result};
use crate::scalar::Exact;

/// The direct product `C_{n1} x ... x C_{nr}` of cyclic groups, kept in the
/// order given.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    orders: Vec<u64>,
    exponent: Factorization,
    size: u128,
}

impl GroupSpec {
    /// Builds the spec, rejecting empty lists, zero orders, an exponent beyond
    /// 64 bits and a group size beyond 128 bits.
    pub fn new(orders: Vec<u64>) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::Domain("a group spec needs at least one cyclic factor".into()));
        }
        if orders.contains(&0) {
            return Err(Error::Domain("cyclic orders must be at least 1".into()));
        }
        let exponent = arith::lcm(&orders)?;
        let size = orders
            .iter()
            .try_fold(1u128, |acc, &n| acc.checked_mul(n as u128))
            .ok_or(Error::Overflow("group size"))?;
        Ok(GroupSpec {
            orders,
            exponent: factorize(exponent),
            size,
        })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    /// `lcm(n1, ..., nr)`, the largest element order.
    pub fn exponent(&self) -> u64 {
        self.exponent.value()
    }

    pub fn exponent_factorization(&self) -> &Factorization {
        &self.exponent
    }

    /// Number of elements, `n1 * ... * nr`.
    pub fn size(&self) -> u128 {
        self.size
    }

    pub fn size_as<C: Exact>(&self) -> Result<C> {
        C::product(self.orders.iter().copied(), "group size")
    }

    /// Factorization of a divisor of the exponent, or `NotADivisor`.
    pub fn divisor_factorization(&self, delta: u64) -> Result<Factorization> {
        self.exponent.of_divisor(delta).ok_or(Error::NotADivisor {
            delta,
            exponent: self.exponent(),
        })
    }

    /// Primary components: for each prime `p` dividing the exponent, the spec
    /// `(p^{e_p(n1)}, ..., p^{e_p(nr)})`, with factors of order 1 kept in place.
    pub fn primary_components(&self) -> Vec<(u64, GroupSpec)> {
        self.exponent
            .primes()
            .map(|p| {
                let orders = self
                    .orders
                    .iter()
                    .map(|&n| {
                        let mut part = 1;
                        let mut rest = n;
                        while rest % p == 0 {
                            rest /= p;
                            part *= p;
                        }
                        part
                    })
                    .collect();
                (p, GroupSpec::new(orders).expect("components of a valid spec"))
            })
            .collect()
    }

    /// Componentwise product `(n1*m1, ..., nr*mr)` of two specs of equal rank.
    pub fn componentwise_product(&self, other: &GroupSpec) -> Result<GroupSpec> {
        if self.rank() != other.rank() {
            return Err(Error::Domain(format!(
                "rank mismatch: {} has rank {}, {} has rank {}",
                self,
                self.rank(),
                other,
                other.rank()
            )));
        }
        let orders = self
            .orders
            .iter()
            .zip(&other.orders)
            .map(|(&a, &b)| a.checked_mul(b).ok_or(Error::Overflow("componentwise product")))
            .collect::<Result<Vec<_>>>()?;
        GroupSpec::new(orders)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.orders.iter().enumerate() {
            if i > 0 {
                f.write_str("x")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

/// Parses `4x2x3`: decimal orders joined by `x`, nothing else.
impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if s.is_empty() {
            return Err(fail("empty spec"));
        }
        let orders = s
            .split('x')
            .map(|part| {
                if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(fail("expected decimal orders separated by 'x'"));
                }
                let n: u64 = part.parse().map_err(|_| fail("order does not fit in 64 bits"))?;
                if n == 0 {
                    return Err(fail("orders must be at least 1"));
                }
                Ok(n)
            })
            .collect::<Result<Vec<_>>>()?;
        GroupSpec::new(orders)
    }
}

/// A `p`-group `C_{p^l1} x ... x C_{p^lk}` of type `(l1, ..., lk)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PGroupType {
    p: u64,
    lambdas: Vec<u32>,
}

impl PGroupType {
    pub fn new(p: u64, lambdas: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if lambdas.is_empty() || lambdas[0] == 0 {
            return Err(Error::Domain("a p-group type needs parts l1 >= 1".into()));
        }
        if lambdas.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::Domain(format!("type {lambdas:?} is not nondecreasing")));
        }
        Ok(PGroupType { p, lambdas })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn lambdas(&self) -> &[u32] {
        &self.lambdas
    }

    /// The group as a direct product of cyclic groups.
    pub fn to_spec(&self) -> Result<GroupSpec> {
        let orders = self
            .lambdas
            .iter()
            .map(|&l| self.p.checked_pow(l).ok_or(Error::Overflow("p-group order")))
            .collect::<Result<Vec<_>>>()?;
        GroupSpec::new(orders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let g: GroupSpec = "4x2x3".parse().unwrap();
        assert_eq!(g.orders(), &[4, 2, 3]);
        assert_eq!(g.exponent(), 12);
        assert_eq!(g.size(), 24);
        assert_eq!(g.to_string(), "4x2x3");
        assert_eq!("1".parse::<GroupSpec>().unwrap().exponent(), 1);
    }

    #[test]
    fn parse_rejects_malformed() {
        for bad in ["", "x", "4x", "x4", "4 x2", " 4", "4X2", "+4", "0", "4x0", "4x-2", "4xx2", "99999999999999999999"] {
            assert!(
                matches!(bad.parse::<GroupSpec>(), Err(Error::Parse { .. })),
                "{bad:?} should not parse"
            );
        }
    }

    #[test]
    fn construction_checks() {
        assert!(GroupSpec::new(vec![]).is_err());
        assert!(GroupSpec::new(vec![3, 0]).is_err());
        let odd = (1u64 << 40) + 15;
        assert_eq!(GroupSpec::new(vec![odd, odd - 2]), Err(Error::Overflow("lcm")));
        let p = (1u64 << 61) - 1;
        assert_eq!(GroupSpec::new(vec![p, p, p]), Err(Error::Overflow("group size")));
        let g = GroupSpec::new(vec![p, p]).unwrap();
        assert_eq!(g.size(), (p as u128) * (p as u128));
        assert_eq!(g.size_as::<u64>(), Err(Error::Overflow("group size")));
    }

    #[test]
    fn divisor_factorization_rejects_non_divisors() {
        let g = GroupSpec::new(vec![4, 2]).unwrap();
        assert_eq!(g.divisor_factorization(4).unwrap().factors(), &[(2, 2)]);
        assert_eq!(
            g.divisor_factorization(3),
            Err(Error::NotADivisor { delta: 3, exponent: 4 })
        );
    }

    #[test]
    fn primary_components_split_by_prime() {
        let g = GroupSpec::new(vec![12, 18, 5]).unwrap();
        let parts = g.primary_components();
        let render: Vec<(u64, String)> = parts.iter().map(|(p, s)| (*p, s.to_string())).collect();
        assert_eq!(
            render,
            vec![(2, "4x2x1".into()), (3, "3x9x1".into()), (5, "1x1x5".into())]
        );
        assert!(GroupSpec::new(vec![1]).unwrap().primary_components().is_empty());
    }

    #[test]
    fn pgroup_type_validation() {
        assert!(PGroupType::new(2, vec![1, 2]).is_ok());
        assert!(PGroupType::new(4, vec![1]).is_err());
        assert!(PGroupType::new(3, vec![2, 1]).is_err());
        assert!(PGroupType::new(3, vec![0, 1]).is_err());
        assert!(PGroupType::new(3, vec![]).is_err());
        let t = PGroupType::new(3, vec![1, 2]).unwrap();
        assert_eq!(t.to_spec().unwrap().orders(), &[3, 9]);
    }
}
