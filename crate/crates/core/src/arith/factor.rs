use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Trial division runs over all candidates below this bound.
const TRIAL_BOUND: u64 = 1 << 12;

// Residues coprime to 30, as gaps starting from 7.
const WHEEL_GAPS: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

// Strong-probable-prime bases; deterministic for every n < 3.3 * 10^24.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Prime factorization of a 64-bit natural.
///
/// Factors are `(prime, exponent)` pairs with strictly increasing primes and
/// nonzero exponents; the empty list is the factorization of 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, a)| a == 1)
    }

    /// Number of divisors, `prod (a_i + 1)`.
    pub fn divisor_count(&self) -> u128 {
        self.factors.iter().map(|&(_, a)| a as u128 + 1).product()
    }

    /// Factorization of a divisor `d` of this value, read off the known primes
    /// without refactoring. `None` when `d` does not divide the value.
    pub fn of_divisor(&self, d: u64) -> Option<Factorization> {
        if d == 0 || !self.value.is_multiple_of(d) {
            return None;
        }
        let mut rest = d;
        let mut factors = Vec::new();
        for &(p, _) in &self.factors {
            let mut a = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                a += 1;
            }
            if a > 0 {
                factors.push((p, a));
            }
        }
        debug_assert_eq!(rest, 1);
        Some(Factorization { value: d, factors })
    }

    /// Exponent of `p` in the value (0 when `p` does not divide it).
    pub fn exponent_of(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, a)| a)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test, exact for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial factor of an odd composite `n` (Brent's variant of
/// Pollard rho). The walk parameters come from a generator seeded by `n`, so
/// the output is reproducible.
fn rho_factor(n: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(n);
    loop {
        let c = rng.random_range(1..n);
        let mut y = rng.random_range(0..n);
        let step = |x: u64| ((mul_mod(x, x, n) as u128 + c as u128) % n as u128) as u64;
        let batch = 128;
        let (mut r, mut q, mut g) = (1u64, 1u64, 1u64);
        let (mut x, mut ys) = (0u64, 0u64);
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = step(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..batch.min(r - k) {
                    y = step(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = super::gcd(q, n);
                k += batch;
            }
            r *= 2;
        }
        if g == n {
            // Batched product collapsed; replay one step at a time.
            loop {
                ys = step(ys);
                g = super::gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
}

fn collect_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if n < TRIAL_BOUND * TRIAL_BOUND || is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho_factor(n);
    collect_large(d, out);
    collect_large(n / d, out);
}

/// Prime factorization of `n >= 1`.
///
/// Trial division by 2, 3, 5 and a mod-30 wheel below a fixed bound; whatever
/// survives is split with Pollard rho and certified with a deterministic
/// Miller-Rabin test.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut rest = n;
    let mut primes = Vec::new();
    for p in [2u64, 3, 5] {
        while rest.is_multiple_of(p) {
            rest /= p;
            primes.push(p);
        }
    }
    let mut p = 7u64;
    let mut gap = 0;
    while p < TRIAL_BOUND && p * p <= rest {
        while rest.is_multiple_of(p) {
            rest /= p;
            primes.push(p);
        }
        p += WHEEL_GAPS[gap];
        gap = (gap + 1) % WHEEL_GAPS.len();
    }
    collect_large(rest, &mut primes);
    primes.sort_unstable();

    let mut factors: Vec<(u64, u32)> = Vec::new();
    for q in primes {
        match factors.last_mut() {
            Some((last, a)) if *last == q => *a += 1,
            _ => factors.push((q, 1)),
        }
    }
    Factorization { value: n, factors }
}
