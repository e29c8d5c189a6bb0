//! Identity suites: each suite evaluates both sides of one family of
//! identities over a grid of inputs and reports every case that disagrees.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::jordan_phi;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::oracle::{oracle_all_subgroups_rank2, oracle_cyclic_subgroups, oracle_spectrum};
use crate::spectra::{
    average_order, cyclic_count_pgroup_type, cyclic_count_prime_power, cyclic_total,
    cyclic_total_rank2, full_spectrum, order_count_lcm_convolution, order_count_moebius,
    split_divisor, subgroup_total_rank2, von_sterneck, GroupSpec, PGroupType,
};
use crate::{Count, Ratio, Spectrum};

/// One side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Int(Count),
    Rational(Ratio),
    /// The side could not be evaluated.
    Error(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Rational(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Value::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Value::Error(e) => write!(f, "error({e})"),
        }
    }
}

impl From<Result<Count>> for Value {
    fn from(r: Result<Count>) -> Self {
        r.map_or_else(|e| Value::Error(e.to_string()), Value::Int)
    }
}

impl From<Result<Ratio>> for Value {
    fn from(r: Result<Ratio>) -> Self {
        r.map_or_else(|e| Value::Error(e.to_string()), Value::Rational)
    }
}

/// Outcome of checking one identity on one input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub identity: String,
    pub input: String,
    pub lhs: Value,
    pub rhs: Value,
    /// `lhs == rhs` exactly; never true when either side failed to evaluate.
    pub pass: bool,
}

impl PropertyReport {
    pub fn new(
        identity: impl Into<String>,
        input: impl Into<String>,
        lhs: impl Into<Value>,
        rhs: impl Into<Value>,
    ) -> Self {
        let (lhs, rhs) = (lhs.into(), rhs.into());
        let pass = !matches!(lhs, Value::Error(_)) && !matches!(rhs, Value::Error(_)) && lhs == rhs;
        PropertyReport {
            identity: identity.into(),
            input: input.into(),
            lhs,
            rhs,
            pass,
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}] lhs={} rhs={}",
            if self.pass { "PASS" } else { "FAIL" },
            self.identity,
            self.input,
            self.lhs,
            self.rhs
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    FormsAgree,
    Oracle,
    Multiplicativity,
    Jordan,
    VonSterneck,
    PGroupReduction,
    Rank2Subgroups,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::FormsAgree,
        Suite::Oracle,
        Suite::Multiplicativity,
        Suite::Jordan,
        Suite::VonSterneck,
        Suite::PGroupReduction,
        Suite::Rank2Subgroups,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::FormsAgree => "forms-agree",
            Suite::Oracle => "oracle",
            Suite::Multiplicativity => "multiplicativity",
            Suite::Jordan => "jordan",
            Suite::VonSterneck => "von-sterneck",
            Suite::PGroupReduction => "pgroup-reduction",
            Suite::Rank2Subgroups => "rank2-subgroups",
        }
    }

    /// Default `(max_n, max_r, max_order)` sizes.
    ///
    /// | suite            | max_n                  | max_r        | max_order                  |
    /// |------------------|------------------------|--------------|----------------------------|
    /// | forms-agree      | cyclic orders          | rank         | group size                 |
    /// | oracle           | exhaustive orders      | exhaustive rank | group size              |
    /// | multiplicativity | orders of each side    | rank         | unused                     |
    /// | jordan           | common order n         | rank         | unused                     |
    /// | von-sterneck     | delta                  | tuple length | unused                     |
    /// | pgroup-reduction | largest part           | parts        | oracle group size          |
    /// | rank2-subgroups  | n1, n2                 | unused       | group size for the oracle  |
    pub fn default_sizes(self) -> (u64, usize, u64) {
        match self {
            Suite::FormsAgree => (30, 3, 20_000),
            Suite::Oracle => (20, 3, 5_000),
            Suite::Multiplicativity => (30, 3, 0),
            Suite::Jordan => (30, 4, 0),
            Suite::VonSterneck => (200, 4, 0),
            Suite::PGroupReduction => (4, 4, 100_000),
            Suite::Rank2Subgroups => (60, 2, 2_000),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown suite {s:?}")))
    }
}

/// Size overrides and seed for a suite run; `None` keeps the suite default.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteParams {
    pub max_n: Option<u64>,
    pub max_r: Option<usize>,
    pub max_order: Option<u64>,
    pub seed: u64,
    /// Random specs added to the exhaustive oracle sweep.
    pub random_specs: usize,
    /// Coprime pairs drawn by the multiplicativity suite.
    pub coprime_pairs: usize,
    pub limits: Limits,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_n: None,
            max_r: None,
            max_order: None,
            seed: 42,
            random_specs: 200,
            coprime_pairs: 500,
            limits: Limits::DEFAULT,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub checks: u64,
    /// Failing reports in a deterministic order.
    pub failures: Vec<PropertyReport>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn collect(suite: Suite, per_case: Vec<Vec<PropertyReport>>) -> SuiteOutcome {
    let checks = per_case.iter().map(|c| c.len() as u64).sum();
    let failures = per_case.into_iter().flatten().filter(|r| !r.pass).collect();
    SuiteOutcome {
        suite,
        checks,
        failures,
    }
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> SuiteOutcome {
    let (dn, dr, dorder) = suite.default_sizes();
    let max_n = params.max_n.unwrap_or(dn);
    let max_r = params.max_r.unwrap_or(dr);
    let max_order = params.max_order.unwrap_or(dorder);
    let limits = &params.limits;
    let per_case = match suite {
        Suite::FormsAgree => specs_up_to(max_r, max_n, max_order)
            .par_iter()
            .map(|g| check_forms(g, limits))
            .collect(),
        Suite::Oracle => {
            let mut specs = specs_up_to(max_r, max_n, max_order);
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            specs.extend((0..params.random_specs).map(|_| random_spec(&mut rng, max_order)));
            specs.par_iter().map(|g| check_oracle(g, limits)).collect()
        }
        Suite::Multiplicativity => {
            let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
            let pairs: Vec<_> = (0..params.coprime_pairs)
                .map(|_| random_coprime_pair(&mut rng, max_r, max_n))
                .collect();
            pairs
                .par_iter()
                .map(|(g, h)| check_multiplicative(g, h, limits))
                .collect()
        }
        Suite::Jordan => (1..=max_r)
            .flat_map(|r| (1..=max_n).map(move |n| (r, n)))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&(r, n)| check_jordan(r, n))
            .collect(),
        Suite::VonSterneck => (1..=max_r as u32)
            .flat_map(|r| (1..=max_n).map(move |d| (r, d)))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&(r, delta)| {
                vec![PropertyReport::new(
                    "von_sterneck(r, delta) = phi_r(delta)",
                    format!("r={r} delta={delta}"),
                    von_sterneck::<Count>(r, delta, limits),
                    jordan_phi::<Count>(r, delta),
                )]
            })
            .collect(),
        Suite::PGroupReduction => pgroup_types(max_r, max_n as u32)
            .par_iter()
            .map(|t| check_pgroup(t, max_order, limits))
            .collect(),
        Suite::Rank2Subgroups => (1..=max_n)
            .flat_map(|a| (1..=max_n).map(move |b| (a, b)))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&(a, b)| check_rank2(a, b, max_order, limits))
            .collect(),
    };
    collect(suite, per_case)
}

/// All ordered specs `(n1, ..., nr)` with `r <= max_r`, `n_i <= max_n` and
/// `n1 * ... * nr <= max_order`, by rank then lexicographically.
pub fn specs_up_to(max_r: usize, max_n: u64, max_order: u64) -> Vec<GroupSpec> {
    fn extend(prefix: &mut Vec<u64>, left: usize, max_n: u64, budget: u64, out: &mut Vec<GroupSpec>) {
        if left == 0 {
            out.push(GroupSpec::new(prefix.clone()).expect("small spec"));
            return;
        }
        for n in 1..=max_n.min(budget) {
            prefix.push(n);
            extend(prefix, left - 1, max_n, budget / n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for r in 1..=max_r {
        extend(&mut Vec::new(), r, max_n, max_order, &mut out);
    }
    out
}

/// A spec of rank 1..=4 whose size stays within `max_order`.
pub fn random_spec(rng: &mut impl Rng, max_order: u64) -> GroupSpec {
    let r = rng.random_range(1..=4usize);
    let mut budget = max_order.max(1);
    let orders = (0..r)
        .map(|_| {
            let n = rng.random_range(1..=budget.min(60));
            budget /= n;
            n
        })
        .collect();
    GroupSpec::new(orders).expect("small spec")
}

const PRIMES_UP_TO_60: [u64; 17] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59];

/// Two specs of the same rank `<= max_r` with orders `<= max_n` and
/// `gcd(n1 ... nr, m1 ... mr) = 1`, built by splitting the primes at random.
pub fn random_coprime_pair(rng: &mut impl Rng, max_r: usize, max_n: u64) -> (GroupSpec, GroupSpec) {
    let r = rng.random_range(1..=max_r.max(1));
    let side: Vec<bool> = PRIMES_UP_TO_60.iter().map(|_| rng.random_bool(0.5)).collect();
    let smooth = |want: bool| -> Vec<u64> {
        (1..=max_n)
            .filter(|&n| {
                PRIMES_UP_TO_60
                    .iter()
                    .zip(&side)
                    .all(|(&p, &s)| s == want || n % p != 0)
            })
            .collect()
    };
    let (left, right) = (smooth(true), smooth(false));
    let pick = |rng: &mut ChaCha8Rng, pool: &[u64]| pool[rng.random_range(0..pool.len())];
    let mut inner = ChaCha8Rng::seed_from_u64(rng.random());
    let g = (0..r).map(|_| pick(&mut inner, &left)).collect();
    let h = (0..r).map(|_| pick(&mut inner, &right)).collect();
    (GroupSpec::new(g).expect("small"), GroupSpec::new(h).expect("small"))
}

fn check_forms(g: &GroupSpec, limits: &Limits) -> Vec<PropertyReport> {
    let divs = match crate::arith::DivisorList::from_factorization(g.exponent_factorization(), limits.spectrum) {
        Ok(d) => d,
        Err(e) => return vec![PropertyReport::new("divisors", g.to_string(), Value::Error(e.to_string()), Value::Int(0))],
    };
    divs.iter()
        .map(|&delta| {
            PropertyReport::new(
                "o_delta moebius = lcm convolution",
                format!("spec={g} delta={delta}"),
                order_count_moebius::<Count>(g, delta),
                order_count_lcm_convolution::<Count>(g, delta, limits),
            )
        })
        .collect()
}

fn check_oracle(g: &GroupSpec, limits: &Limits) -> Vec<PropertyReport> {
    let mut out = Vec::new();
    let input = format!("spec={g}");
    let err = |name: &str, e: Error| PropertyReport::new(name, g.to_string(), Value::Error(e.to_string()), Value::Int(0));
    let formula: Spectrum = match full_spectrum(g, limits) {
        Ok(s) => s,
        Err(e) => return vec![err("full_spectrum", e)],
    };
    let brute: Spectrum = match oracle_spectrum(g, limits) {
        Ok(s) => s,
        Err(e) => return vec![err("oracle_spectrum", e)],
    };
    let census = match oracle_cyclic_subgroups(g, limits) {
        Ok(c) => c,
        Err(e) => return vec![err("oracle_cyclic_subgroups", e)],
    };
    for (f, b) in formula.entries().iter().zip(brute.entries()) {
        let at = format!("spec={g} delta={}", f.delta);
        out.push(PropertyReport::new("o_delta = oracle", &at, Value::Int(f.elements), Value::Int(b.elements)));
        let built = census.per_order.get(&f.delta).copied().unwrap_or(0) as Count;
        out.push(PropertyReport::new("c_delta = oracle cyclic subgroups", &at, Value::Int(f.cyclic), Value::Int(built)));
    }
    out.push(PropertyReport::new(
        "spectrum orders = oracle orders",
        &input,
        Value::Int(formula.entries().len() as Count),
        Value::Int(brute.entries().len() as Count),
    ));
    out.push(PropertyReport::new(
        "sum o_delta = |G|",
        &input,
        Value::Int(formula.order_sum()),
        Value::Int(g.size()),
    ));
    out.push(PropertyReport::new(
        "cyclic_total = oracle total",
        &input,
        cyclic_total::<Count>(g, limits),
        Value::Int(census.total as Count),
    ));
    out.push(PropertyReport::new(
        "cyclic_total = sum c_delta",
        &input,
        cyclic_total::<Count>(g, limits),
        formula.cyclic_total(),
    ));
    if let [n1, n2] = *g.orders() {
        out.push(PropertyReport::new(
            "cyclic_total_rank2 = oracle total",
            &input,
            cyclic_total_rank2::<Count>(n1, n2, limits),
            Value::Int(census.total as Count),
        ));
    }
    out.push(PropertyReport::new(
        "average_order = sum delta o_delta / |G|",
        &input,
        average_order::<Count>(g, limits),
        formula.average_order(),
    ));
    out.push(PropertyReport::new(
        "average_order = oracle average",
        &input,
        average_order::<Count>(g, limits),
        brute.average_order(),
    ));
    out
}

/// `c_delta` read off a spectrum, 0 when `delta` does not divide the exponent.
fn cyclic_at(s: &Spectrum, delta: u64) -> Count {
    s.get(delta).map_or(0, |e| e.cyclic)
}

fn check_multiplicative(g: &GroupSpec, h: &GroupSpec, limits: &Limits) -> Vec<PropertyReport> {
    let gh = match g.componentwise_product(h) {
        Ok(p) => p,
        Err(e) => return vec![PropertyReport::new("product spec", format!("{g} * {h}"), Value::Error(e.to_string()), Value::Int(0))],
    };
    let input = format!("n={g} m={h}");
    let mut out = Vec::new();
    let mul = |a: Result<Count>, b: Result<Count>| -> Result<Count> {
        let (a, b) = (a?, b?);
        a.checked_mul(b).ok_or(Error::Overflow("product"))
    };
    out.push(PropertyReport::new(
        "c(nm) = c(n) c(m)",
        &input,
        cyclic_total::<Count>(&gh, limits),
        mul(cyclic_total(g, limits), cyclic_total(h, limits)),
    ));
    out.push(PropertyReport::new(
        "A(nm) = A(n) A(m)",
        &input,
        average_order::<Count>(&gh, limits),
        average_order::<Count>(g, limits).and_then(|a| Ok(a * average_order::<Count>(h, limits)?)),
    ));

    let spectra: Result<(Spectrum, Spectrum, Spectrum)> = (|| {
        Ok((full_spectrum(&gh, limits)?, full_spectrum(g, limits)?, full_spectrum(h, limits)?))
    })();
    let (s_gh, s_g, s_h) = match spectra {
        Ok(s) => s,
        Err(e) => {
            out.push(PropertyReport::new("spectra", &input, Value::Error(e.to_string()), Value::Int(0)));
            return out;
        }
    };
    for e in s_gh.entries() {
        let at = format!("{input} delta={}", e.delta);
        let rhs = split_divisor(e.delta, g.exponent(), h.exponent())
            .map(|(a, b)| cyclic_at(&s_g, a) * cyclic_at(&s_h, b));
        out.push(PropertyReport::new("c_delta(nm) = c_a(n) c_b(m)", &at, Value::Int(e.cyclic), rhs));
    }

    // primary decomposition of the product group
    let parts: Vec<(u64, Spectrum)> = match gh
        .primary_components()
        .into_iter()
        .map(|(p, part)| Ok((p, full_spectrum(&part, limits)?)))
        .collect::<Result<Vec<_>>>()
    {
        Ok(p) => p,
        Err(e) => {
            out.push(PropertyReport::new("primary spectra", &input, Value::Error(e.to_string()), Value::Int(0)));
            return out;
        }
    };
    let product_of_parts = parts
        .iter()
        .try_fold(1 as Count, |acc, (_, s)| Ok(acc * s.cyclic_total()?));
    out.push(PropertyReport::new(
        "c(G) = prod_p c(G_p)",
        format!("spec={gh}"),
        cyclic_total::<Count>(&gh, limits),
        product_of_parts,
    ));
    for e in s_gh.entries() {
        let by_parts: Count = parts
            .iter()
            .map(|(p, s)| {
                let mut pp = 1;
                while e.delta % (pp * p) == 0 {
                    pp *= p;
                }
                cyclic_at(s, pp)
            })
            .product();
        out.push(PropertyReport::new(
            "c_delta(G) = prod_p c_{delta_p}(G_p)",
            format!("spec={gh} delta={}", e.delta),
            Value::Int(e.cyclic),
            Value::Int(by_parts),
        ));
    }
    out
}

fn check_jordan(r: usize, n: u64) -> Vec<PropertyReport> {
    let g = GroupSpec::new(vec![n; r]).expect("small spec");
    (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|delta| {
            PropertyReport::new(
                "o_delta(n, ..., n) = phi_r(delta)",
                format!("spec={g} delta={delta}"),
                order_count_moebius::<Count>(&g, delta),
                jordan_phi::<Count>(r as u32, delta),
            )
        })
        .collect()
}

/// Nondecreasing types with `1..=max_parts` parts, each part `<= max_part`,
/// over the primes 2, 3, 5.
pub fn pgroup_types(max_parts: usize, max_part: u32) -> Vec<PGroupType> {
    fn extend(prefix: &mut Vec<u32>, left: usize, max_part: u32, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1);
        for l in lo..=max_part {
            prefix.push(l);
            extend(prefix, left - 1, max_part, out);
            prefix.pop();
        }
    }
    let mut shapes = Vec::new();
    for k in 1..=max_parts {
        extend(&mut Vec::new(), k, max_part, &mut shapes);
    }
    [2u64, 3, 5]
        .into_iter()
        .flat_map(|p| {
            shapes
                .iter()
                .map(move |l| PGroupType::new(p, l.clone()).expect("valid type"))
        })
        .collect()
}

fn check_pgroup(t: &PGroupType, oracle_max: u64, limits: &Limits) -> Vec<PropertyReport> {
    let p = t.prime();
    let lambdas = t.lambdas();
    let top = *lambdas.last().expect("nonempty");
    let input = format!("p={p} type={lambdas:?}");
    let spec = match t.to_spec() {
        Ok(s) => s,
        Err(e) => return vec![PropertyReport::new("p-group spec", &input, Value::Error(e.to_string()), Value::Int(0))],
    };
    let spectrum: Result<Spectrum> = full_spectrum(&spec, limits);
    let census = (spec.size() <= oracle_max as u128).then(|| oracle_cyclic_subgroups(&spec, limits));
    let mut out = Vec::new();
    for nu in 1..=top {
        let at = format!("{input} nu={nu}");
        let by_type = cyclic_count_pgroup_type::<Count>(t, nu);
        out.push(PropertyReport::new(
            "type formula = prime-power formula",
            &at,
            by_type.clone(),
            cyclic_count_prime_power::<Count>(p, lambdas, nu),
        ));
        let pnu = p.pow(nu);
        out.push(PropertyReport::new(
            "type formula = spectrum c_{p^nu}",
            &at,
            by_type.clone(),
            spectrum.as_ref().map(|s| cyclic_at(s, pnu)).map_err(Clone::clone),
        ));
        if let Some(census) = &census {
            out.push(PropertyReport::new(
                "type formula = oracle count",
                &at,
                by_type,
                census
                    .as_ref()
                    .map(|c| c.per_order.get(&pnu).copied().unwrap_or(0) as Count)
                    .map_err(Clone::clone),
            ));
        }
    }
    out.push(PropertyReport::new(
        "type formula beyond the exponent = 0",
        format!("{input} nu={}", top + 1),
        cyclic_count_pgroup_type::<Count>(t, top + 1),
        Value::Int(0),
    ));
    out
}

fn check_rank2(n1: u64, n2: u64, oracle_max: u64, limits: &Limits) -> Vec<PropertyReport> {
    let input = format!("n1={n1} n2={n2}");
    let mut out = vec![PropertyReport::new(
        "cyclic_total_rank2 = cyclic_total",
        &input,
        cyclic_total_rank2::<Count>(n1, n2, limits),
        GroupSpec::new(vec![n1, n2]).and_then(|g| cyclic_total::<Count>(&g, limits)),
    )];
    if n1 * n2 <= oracle_max {
        let limits = Limits {
            oracle_pairs: limits.oracle_pairs.max(oracle_max),
            ..*limits
        };
        out.push(PropertyReport::new(
            "subgroup_total_rank2 = oracle subgroups",
            &input,
            subgroup_total_rank2::<Count>(n1, n2, &limits),
            oracle_all_subgroups_rank2(n1, n2, &limits).map(Count::from),
        ));
    }
    out
}
