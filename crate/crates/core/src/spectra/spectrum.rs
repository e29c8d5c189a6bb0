use num_rational::Ratio;

use super::group::GroupSpec;
use crate::arith::euler_phi_of;
use crate::error::{Error, Result};
use crate::scalar::Exact;

/// Counts for one element order `delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumEntry<C> {
    pub delta: u64,
    /// Number of elements of order `delta`.
    pub elements: C,
    /// Number of cyclic subgroups of order `delta`.
    pub cyclic: C,
}

/// Element-order and cyclic-subgroup counts for every divisor of the group
/// exponent, ascending in the order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderSpectrum<C> {
    spec: GroupSpec,
    entries: Vec<SpectrumEntry<C>>,
}

impl<C: Exact> OrderSpectrum<C> {
    /// Assembles a spectrum from element counts, one per divisor of the
    /// exponent in ascending order. Cyclic counts are `o_delta / phi(delta)`;
    /// any failed divisibility, a wrong total or a bad identity count is an
    /// internal error.
    pub fn from_element_counts(spec: GroupSpec, counts: Vec<(u64, C)>) -> Result<Self> {
        let mut entries = Vec::with_capacity(counts.len());
        let mut total = C::zero();
        for (delta, elements) in counts {
            let f = spec.divisor_factorization(delta)?;
            let phi = C::from(euler_phi_of(&f));
            let (cyclic, rem) = elements.div_rem(&phi);
            if !rem.is_zero() {
                return Err(Error::Internal(format!(
                    "phi({delta}) does not divide o_{delta} = {elements} in {spec}"
                )));
            }
            total = total.add_checked(&elements, "order sum")?;
            entries.push(SpectrumEntry {
                delta,
                elements,
                cyclic,
            });
        }
        if entries.windows(2).any(|w| w[0].delta >= w[1].delta) {
            return Err(Error::Internal("spectrum orders are not ascending".into()));
        }
        if entries.len() as u128 != spec.exponent_factorization().divisor_count() {
            return Err(Error::Internal(format!("spectrum of {spec} misses some orders")));
        }
        if total != spec.size_as::<C>()? {
            return Err(Error::Internal(format!(
                "element counts of {spec} sum to {total}, not {}",
                spec.size()
            )));
        }
        if entries[0].elements != C::one() {
            return Err(Error::Internal(format!("{spec} must have exactly one identity")));
        }
        Ok(OrderSpectrum { spec, entries })
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn entries(&self) -> &[SpectrumEntry<C>] {
        &self.entries
    }

    pub fn get(&self, delta: u64) -> Option<&SpectrumEntry<C>> {
        self.entries
            .binary_search_by_key(&delta, |e| e.delta)
            .ok()
            .map(|i| &self.entries[i])
    }

    /// `sum o_delta`, equal to the group size.
    pub fn order_sum(&self) -> C {
        self.entries
            .iter()
            .fold(C::zero(), |acc, e| acc + e.elements.clone())
    }

    /// `sum c_delta`, the number of cyclic subgroups.
    pub fn cyclic_total(&self) -> Result<C> {
        self.entries
            .iter()
            .try_fold(C::zero(), |acc, e| acc.add_checked(&e.cyclic, "cyclic total"))
    }

    /// Mean element order, `(sum delta * o_delta) / |G|`, in lowest terms.
    pub fn average_order(&self) -> Result<Ratio<C>> {
        let mut weighted = C::zero();
        for e in &self.entries {
            let term = C::from(e.delta).mul_checked(&e.elements, "average order")?;
            weighted = weighted.add_checked(&term, "average order")?;
        }
        Ok(Ratio::new(weighted, self.spec.size_as()?))
    }
}
