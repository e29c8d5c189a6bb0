use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::spectra::GroupSpec;

/// An element `(x1^{i1}, ..., xr^{ir})` of `C_{n1} x ... x C_{nr}`, where `x_k`
/// generates `C_{nk}` and `1 <= i_k <= n_k`. The identity is `(n1, ..., nr)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    spec: GroupSpec,
    coords: Vec<u64>,
}

impl Element {
    pub fn new(spec: &GroupSpec, coords: Vec<u64>) -> Result<Self> {
        if coords.len() != spec.rank() {
            return Err(Error::Domain(format!(
                "{} coordinates for a rank-{} group",
                coords.len(),
                spec.rank()
            )));
        }
        if let Some((i, n)) = coords
            .iter()
            .zip(spec.orders())
            .find(|(&i, &n)| i == 0 || i > n)
        {
            return Err(Error::Domain(format!("coordinate {i} is outside 1..={n}")));
        }
        Ok(Element {
            spec: spec.clone(),
            coords,
        })
    }

    pub fn identity(spec: &GroupSpec) -> Self {
        Element {
            spec: spec.clone(),
            coords: spec.orders().to_vec(),
        }
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

// o(x) = n / gcd(i1 n/n1, ..., ir n/nr, n), checked against
// o(x) = lcm(n1/gcd(n1, i1), ..., nr/gcd(nr, ir)).
pub(crate) fn order_of_exponents(spec: &GroupSpec, coords: &[u64]) -> u64 {
    let n = spec.exponent();
    let g = coords
        .iter()
        .zip(spec.orders())
        .fold(n, |acc, (&i, &nk)| gcd(acc, i * (n / nk)));
    let by_gcd = n / g;
    let by_lcm = coords.iter().zip(spec.orders()).fold(1u64, |acc, (&i, &nk)| {
        let o = nk / gcd(nk, i);
        acc / gcd(acc, o) * o
    });
    assert_eq!(by_gcd, by_lcm, "order forms disagree at {coords:?} in {spec}");
    by_gcd
}

/// Order of an element from its exponent coordinates.
pub fn element_order(e: &Element) -> u64 {
    order_of_exponents(&e.spec, &e.coords)
}

/// Order of an element as the least `m >= 1` with `m e` the identity, found
/// by repeated addition.
pub fn element_order_by_iteration(e: &Element) -> u64 {
    let orders = e.spec.orders();
    let step: Vec<u64> = e.coords.iter().zip(orders).map(|(&i, &n)| i % n).collect();
    let mut cur = step.clone();
    let mut m = 1u64;
    while cur.iter().any(|&c| c != 0) {
        for ((c, &s), &n) in cur.iter_mut().zip(&step).zip(orders) {
            *c = (*c + s) % n;
        }
        m += 1;
    }
    m
}
