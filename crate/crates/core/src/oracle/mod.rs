//! Brute-force ground truth. Every element of a small direct product is
//! visited, cyclic subgroups are built by repeated addition, and rank-2
//! subgroups by closing pairs of generators. Nothing here uses the counting
//! formulas it is meant to certify.

mod element;
mod subgroups;

pub use element::{element_order, element_order_by_iteration, Element};
pub use subgroups::{
    oracle_all_subgroups_rank2, oracle_cyclic_subgroups, CanonicalSubgroup, CyclicCensus,
};

use std::collections::BTreeMap;

use crate::arith::DivisorList;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::scalar::Exact;
use crate::spectra::{GroupSpec, OrderSpectrum};

/// Mixed-radix indexing of the elements of a direct product. Index 0 is the
/// identity; coordinates are residues `0 <= i_k < n_k`, last coordinate
/// fastest, so ascending indices are lexicographic residue tuples.
#[derive(Debug, Clone)]
pub(crate) struct Indexer {
    orders: Vec<u64>,
    size: usize,
}

impl Indexer {
    pub(crate) fn new(spec: &GroupSpec, cap: u64) -> Result<Self> {
        if spec.size() > cap as u128 {
            return Err(Error::cap("group size", spec, spec.size(), cap as u128));
        }
        Ok(Indexer {
            orders: spec.orders().to_vec(),
            size: spec.size() as usize,
        })
    }

    pub(crate) fn size(&self) -> usize {
        self.size
    }

    pub(crate) fn decode(&self, mut idx: usize, out: &mut [u64]) {
        for (k, &n) in self.orders.iter().enumerate().rev() {
            out[k] = (idx as u64) % n;
            idx /= n as usize;
        }
    }

    pub(crate) fn encode(&self, coords: &[u64]) -> usize {
        coords
            .iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (&c, &n)| acc * n as usize + c as usize)
    }

    /// Componentwise sum of two elements.
    pub(crate) fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b) = (a, b);
        let mut out = 0usize;
        let mut scale = 1usize;
        for &n in self.orders.iter().rev() {
            let n = n as usize;
            let s = (a % n + b % n) % n;
            out += s * scale;
            scale *= n;
            a /= n;
            b /= n;
        }
        out
    }
}

/// Element-order spectrum by visiting every element of the group.
pub fn oracle_spectrum<C: Exact>(spec: &GroupSpec, limits: &Limits) -> Result<OrderSpectrum<C>> {
    let indexer = Indexer::new(spec, limits.oracle)?;
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    let mut residues = vec![0u64; spec.rank()];
    let mut coords = vec![0u64; spec.rank()];
    for idx in 0..indexer.size() {
        indexer.decode(idx, &mut residues);
        for ((c, &res), &n) in coords.iter_mut().zip(&residues).zip(spec.orders()) {
            *c = if res == 0 { n } else { res };
        }
        *counts.entry(element::order_of_exponents(spec, &coords)).or_default() += 1;
    }
    let divs = DivisorList::from_factorization(spec.exponent_factorization(), limits.spectrum)?;
    let rows = divs
        .iter()
        .map(|&d| (d, C::from(counts.remove(&d).unwrap_or(0))))
        .collect();
    if let Some((&d, _)) = counts.iter().next() {
        return Err(Error::Internal(format!("order {d} does not divide the exponent of {spec}")));
    }
    OrderSpectrum::from_element_counts(spec.clone(), rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    const L: Limits = Limits::DEFAULT;

    fn rows(spec: &[u64]) -> Vec<(u64, u64, u64)> {
        let g = GroupSpec::new(spec.to_vec()).unwrap();
        oracle_spectrum::<u64>(&g, &L)
            .unwrap()
            .entries()
            .iter()
            .map(|e| (e.delta, e.elements, e.cyclic))
            .collect()
    }

    #[test]
    fn spectrum_examples() {
        assert_eq!(rows(&[4, 2]), vec![(1, 1, 1), (2, 3, 3), (4, 4, 2)]);
        assert_eq!(rows(&[3, 3]), vec![(1, 1, 1), (3, 8, 4)]);
        assert_eq!(rows(&[1]), vec![(1, 1, 1)]);
        assert_eq!(rows(&[2, 2, 2]), vec![(1, 1, 1), (2, 7, 7)]);
    }

    #[test]
    fn indexer_round_trip() {
        let g = GroupSpec::new(vec![4, 3, 5]).unwrap();
        let ix = Indexer::new(&g, 1000).unwrap();
        let mut c = vec![0; 3];
        for i in 0..ix.size() {
            ix.decode(i, &mut c);
            assert_eq!(ix.encode(&c), i);
        }
        ix.decode(ix.add(ix.encode(&[3, 2, 4]), ix.encode(&[2, 2, 3])), &mut c);
        assert_eq!(c, vec![1, 1, 2]);
    }

    #[test]
    fn cap_is_enforced() {
        let g = GroupSpec::new(vec![100, 100]).unwrap();
        let limits = Limits { oracle: 9_999, ..L };
        assert_eq!(
            oracle_spectrum::<u64>(&g, &limits).unwrap_err(),
            Error::CapExceeded {
                what: "group size",
                subject: "100x100".into(),
                count: 10_000,
                cap: 9_999
            }
        );
    }
}
