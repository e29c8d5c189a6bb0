use super::factor::{factorize, Factorization};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// All divisors of a natural, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorList {
    of: u64,
    divisors: Vec<u64>,
}

impl DivisorList {
    /// Divisors of an already-factored value, refusing more than `cap` entries.
    pub fn from_factorization(f: &Factorization, cap: usize) -> Result<Self> {
        let count = f.divisor_count();
        if count > cap as u128 {
            return Err(Error::cap("divisor count", f.value(), count, cap as u128));
        }
        let mut divisors = Vec::with_capacity(count as usize);
        divisors.push(1u64);
        for &(p, a) in f.factors() {
            let len = divisors.len();
            let mut pk = 1u64;
            for _ in 0..a {
                pk *= p;
                for i in 0..len {
                    divisors.push(divisors[i] * pk);
                }
            }
        }
        divisors.sort_unstable();
        Ok(DivisorList {
            of: f.value(),
            divisors,
        })
    }

    pub fn with_cap(n: u64, cap: usize) -> Result<Self> {
        Self::from_factorization(&factorize(n), cap)
    }

    pub fn of(&self) -> u64 {
        self.of
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.divisors
    }

    pub fn len(&self) -> usize {
        self.divisors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.divisors.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u64> {
        self.divisors.iter()
    }
}

impl<'a> IntoIterator for &'a DivisorList {
    type Item = &'a u64;
    type IntoIter = std::slice::Iter<'a, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.divisors.iter()
    }
}

/// Divisors of `n >= 1` under the default cap.
pub fn divisors(n: u64) -> Result<DivisorList> {
    DivisorList::with_cap(n, Limits::DEFAULT.divisors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(n: u64) -> Vec<u64> {
        (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(divisors(1).unwrap().as_slice(), &[1]);
        assert_eq!(divisors(12).unwrap().as_slice(), &[1, 2, 3, 4, 6, 12]);
        let d = divisors(2310).unwrap();
        assert_eq!(d.len(), 32);
        assert_eq!(d.as_slice(), scan(2310).as_slice());
    }

    #[test]
    fn matches_brute_force_scan() {
        for n in 1..=2000 {
            assert_eq!(divisors(n).unwrap().as_slice(), scan(n).as_slice(), "n = {n}");
        }
    }

    #[test]
    fn cap_is_enforced() {
        let err = DivisorList::with_cap(720_720, 100).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                what: "divisor count",
                subject: "720720".into(),
                count: 240,
                cap: 100
            }
        );
        assert_eq!(DivisorList::with_cap(720_720, 240).unwrap().len(), 240);
    }

    #[test]
    fn large_input() {
        let n = 963_761_198_400u64; // highly composite, 6720 divisors
        let d = divisors(n).unwrap();
        assert_eq!(d.len(), 6720);
        assert!(d.as_slice().windows(2).all(|w| w[0] < w[1]));
        assert!(d.iter().all(|&x| n.is_multiple_of(x)));
        assert_eq!(*d.as_slice().last().unwrap(), n);
    }
}
