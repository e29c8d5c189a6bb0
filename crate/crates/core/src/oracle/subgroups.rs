use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use super::element::order_of_exponents;
use super::Indexer;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::spectra::GroupSpec;

/// A subgroup identified by its sorted element list.
///
/// Elements are stored as mixed-radix indices, whose ascending order is the
/// lexicographic order of the residue tuples.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalSubgroup {
    spec: Arc<GroupSpec>,
    elements: Vec<u32>,
}

impl CanonicalSubgroup {
    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Residue tuples `(i1 mod n1, ..., ir mod nr)`, ascending.
    pub fn residues(&self) -> Vec<Vec<u64>> {
        let ix = Indexer::new(&self.spec, u64::MAX).expect("no cap");
        self.elements
            .iter()
            .map(|&e| {
                let mut c = vec![0; self.spec.rank()];
                ix.decode(e as usize, &mut c);
                c
            })
            .collect()
    }

    /// Contains the identity and is closed under addition and negation.
    pub fn is_subgroup(&self) -> bool {
        let ix = Indexer::new(&self.spec, u64::MAX).expect("no cap");
        let member: HashSet<u32> = self.elements.iter().copied().collect();
        let mut c = vec![0; self.spec.rank()];
        let closed_under_negation = self.elements.iter().all(|&e| {
            ix.decode(e as usize, &mut c);
            for (x, &n) in c.iter_mut().zip(self.spec.orders()) {
                *x = (n - *x) % n;
            }
            member.contains(&(ix.encode(&c) as u32))
        });
        member.contains(&0)
            && closed_under_negation
            && self.elements.iter().all(|&a| {
                self.elements
                    .iter()
                    .all(|&b| member.contains(&(ix.add(a as usize, b as usize) as u32)))
            })
    }
}

/// Cyclic subgroups of a group, found by enumeration.
#[derive(Debug, Clone)]
pub struct CyclicCensus {
    /// Number of cyclic subgroups of each order present.
    pub per_order: BTreeMap<u64, u64>,
    pub total: u64,
    pub subgroups: Vec<CanonicalSubgroup>,
}

fn order_at(spec: &GroupSpec, ix: &Indexer, idx: usize, buf: &mut [u64]) -> u64 {
    ix.decode(idx, buf);
    for (c, &n) in buf.iter_mut().zip(spec.orders()) {
        if *c == 0 {
            *c = n;
        }
    }
    order_of_exponents(spec, buf)
}

struct Cyclic {
    generator: usize,
    elements: Vec<u32>,
}

// Builds <x> for every element x by repeated addition. Elements of <x> with
// the same order as x generate the same subgroup and are skipped afterwards.
fn enumerate_cyclic(spec: &GroupSpec, ix: &Indexer) -> Result<Vec<Cyclic>> {
    let size = ix.size();
    let mut covered = vec![false; size];
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut out = Vec::new();
    let mut buf = vec![0u64; spec.rank()];
    for x in 0..size {
        if covered[x] {
            continue;
        }
        let mut elements = vec![0u32];
        let mut cur = x;
        while cur != 0 {
            elements.push(cur as u32);
            cur = ix.add(cur, x);
        }
        let m = elements.len() as u64;
        let expected = order_at(spec, ix, x, &mut buf);
        if m != expected {
            return Err(Error::Internal(format!(
                "element {x} of {spec}: iteration gives order {m}, formula {expected}"
            )));
        }
        if !(size as u64).is_multiple_of(m) {
            return Err(Error::Internal(format!("subgroup of order {m} in {spec} breaks Lagrange")));
        }
        for &y in &elements {
            if order_at(spec, ix, y as usize, &mut buf) == m {
                covered[y as usize] = true;
            }
        }
        elements.sort_unstable();
        if !seen.insert(elements.clone()) {
            return Err(Error::Internal(format!("cyclic subgroup of {spec} built twice")));
        }
        out.push(Cyclic { generator: x, elements });
    }
    Ok(out)
}

/// All cyclic subgroups of `spec`, with per-order counts.
pub fn oracle_cyclic_subgroups(spec: &GroupSpec, limits: &Limits) -> Result<CyclicCensus> {
    let ix = Indexer::new(spec, limits.oracle)?;
    let shared = Arc::new(spec.clone());
    let mut per_order = BTreeMap::new();
    let mut subgroups = Vec::new();
    for c in enumerate_cyclic(spec, &ix)? {
        *per_order.entry(c.elements.len() as u64).or_insert(0u64) += 1;
        subgroups.push(CanonicalSubgroup {
            spec: Arc::clone(&shared),
            elements: c.elements,
        });
    }
    let total = per_order.values().sum();
    Ok(CyclicCensus {
        per_order,
        total,
        subgroups,
    })
}

/// Number of all subgroups of `C_{n1} x C_{n2}`.
///
/// Every subgroup of a group of rank at most 2 is generated by two elements,
/// and `<x, y>` depends only on `<x>` and `<y>`. So each subgroup arises as the
/// closure of one cyclic subgroup and the generator of another, built as the
/// union of cosets `H + k y` until `k y` falls back into `H`.
pub fn oracle_all_subgroups_rank2(n1: u64, n2: u64, limits: &Limits) -> Result<u64> {
    let spec = GroupSpec::new(vec![n1, n2])?;
    if spec.size() > limits.oracle_pairs as u128 {
        return Err(Error::cap("group size", &spec, spec.size(), limits.oracle_pairs as u128));
    }
    let ix = Indexer::new(&spec, limits.oracle_pairs)?;
    let size = ix.size();
    let words = size.div_ceil(64);
    let cyclic = enumerate_cyclic(&spec, &ix)?;

    let bitset = |elements: &[u32]| {
        let mut bits = vec![0u64; words];
        for &e in elements {
            bits[e as usize / 64] |= 1 << (e % 64);
        }
        bits
    };
    let has = |bits: &[u64], e: usize| bits[e / 64] >> (e % 64) & 1 == 1;

    let mut found: HashSet<Vec<u64>> = HashSet::new();
    let mut members: Vec<u32> = Vec::with_capacity(size);
    for (i, h) in cyclic.iter().enumerate() {
        let base = bitset(&h.elements);
        found.insert(base.clone());
        for other in &cyclic[i + 1..] {
            let y = other.generator;
            if has(&base, y) {
                continue;
            }
            let mut bits = base.clone();
            members.clear();
            members.extend_from_slice(&h.elements);
            let mut shift = y;
            while !has(&bits, shift) {
                for &e in &h.elements {
                    let s = ix.add(e as usize, shift);
                    bits[s / 64] |= 1 << (s % 64);
                    members.push(s as u32);
                }
                shift = ix.add(shift, y);
            }
            if size % members.len() != 0 {
                return Err(Error::Internal(format!(
                    "subgroup of order {} in {spec} breaks Lagrange",
                    members.len()
                )));
            }
            found.insert(bits);
        }
    }
    Ok(found.len() as u64)
}
