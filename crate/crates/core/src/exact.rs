//! Exact composite and prime counters built from inclusion-exclusion over
//! products of distinct basis primes.
//!
//! `sigma_exact(x)` counts the non-primes `<= x` (the number 1 included) as
//!
//! ```text
//! sigma(x) = 1 + sum_{i=1}^{i0} ( -1 + sum_{j=0}^{i-1} (-1)^j sum_k floor(x / (p_i * C_{j,i-1,k})) )
//! ```
//!
//! where `C_{j,i-1,k}` ranges over the products of `j` distinct primes among
//! `p_1..p_{i-1}` and `p_{i0}` is the largest prime `<= sqrt(x)`. The i-th
//! outer term counts the integers whose smallest prime factor is `p_i`
//! (minus one for `p_i` itself), so the basis never needs to reach past
//! `sqrt(x)`.
//!
//! Every subset whose partial product exceeds `x / p_i` contributes a zero
//! floor term, and with the basis kept ascending the partial product grows
//! monotonically along each branch. That makes depth-first enumeration with
//! branch pruning exact, and it is the only thing that keeps the method
//! usable: the unpruned sum is exponential in the basis size.

use crate::error::{Error, Result};
use crate::sieve::{self, IntervalKind};

/// Largest `x` the exact counter accepts by default. Past this point the
/// subset enumeration grows superpolynomially; use the sieve oracle instead.
pub const DEFAULT_EXACT_LIMIT: u64 = 10_000_000;

/// The ascending primes `p_1..p_{i0}` with `p_{i0} = prec(sqrt(x))`.
#[derive(Debug, Clone)]
pub struct PrimeBasis {
    primes: Vec<u64>,
}

impl PrimeBasis {
    /// Basis for counting up to `x`: all primes `<= floor(sqrt(x))`.
    pub fn for_value(x: u64) -> Result<PrimeBasis> {
        if x < 1 {
            return Err(Error::InputTooSmall { value: x, min: 1 });
        }
        let primes = sieve::primes_up_to(sieve::isqrt(x))?;
        Ok(PrimeBasis { primes })
    }

    /// Basis from an explicit ascending prime list. The list must contain
    /// every prime up to at least `sqrt(x)` for the values it will count;
    /// extra larger primes are harmless (their outer terms vanish).
    pub fn from_primes(primes: Vec<u64>) -> PrimeBasis {
        debug_assert!(primes.windows(2).all(|w| w[0] < w[1]));
        PrimeBasis { primes }
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// The basis size i0.
    pub fn i0(&self) -> usize {
        self.primes.len()
    }

    pub fn largest(&self) -> Option<u64> {
        self.primes.last().copied()
    }
}

/// One floor term of the inclusion-exclusion sum, for diagnostics and
/// term-level verification: `sign * floor(x / denominator)` with
/// `denominator = p_i * C_{j,i-1,k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CombinationTerm {
    /// Outer prime index i (1-based).
    pub outer_index: usize,
    /// Subset size j; the empty combination (j = 0) has product 1.
    pub subset_size: u32,
    /// `p_i * C_{j,i-1,k}`.
    pub denominator: u64,
    /// `(-1)^j`.
    pub sign: i8,
}

struct SubsetWalk<'a> {
    x: u64,
    head: &'a [u64],
    p: u64,
    /// subsets whose product exceeds this contribute zero floor terms
    bound: u64,
}

impl SubsetWalk<'_> {
    fn sum(&self, start: usize, prod: u64, sign: i64) -> i64 {
        let mut acc = sign * (self.x / (self.p * prod)) as i64;
        for t in start..self.head.len() {
            match prod.checked_mul(self.head[t]) {
                Some(np) if np <= self.bound => {
                    acc += self.sum(t + 1, np, -sign);
                }
                // ascending basis: every later prime overshoots as well
                _ => break,
            }
        }
        acc
    }
}

fn subset_sum(x: u64, basis: &[u64], upto: usize, p: u64) -> i64 {
    SubsetWalk {
        x,
        head: &basis[..upto],
        p,
        bound: x / p,
    }
    .sum(0, 1, 1)
}

fn sigma_with_primes(x: u64, basis: &[u64]) -> u64 {
    let mut total: i64 = 1;
    for (i, &p) in basis.iter().enumerate() {
        if p > x {
            // no multiple of p lies in [1, x]; the term has no sieve meaning
            break;
        }
        total += -1 + subset_sum(x, basis, i, p);
    }
    debug_assert!(total >= 1);
    total as u64
}

/// Exact count of non-primes `<= x`, the number 1 included.
pub fn sigma_exact(x: u64) -> Result<u64> {
    sigma_exact_with_limit(x, DEFAULT_EXACT_LIMIT)
}

pub fn sigma_exact_with_limit(x: u64, limit: u64) -> Result<u64> {
    if x < 1 {
        return Err(Error::InputTooSmall { value: x, min: 1 });
    }
    if x > limit {
        return Err(Error::ExactLimitExceeded { x, limit });
    }
    Ok(sigma_with_primes(x, PrimeBasis::for_value(x)?.primes()))
}

/// `sigma_exact` over a caller-supplied basis; the value is independent of
/// any extension of the basis past `sqrt(x)` (extension primes in
/// `(sqrt(x), x]` contribute exactly zero, and larger ones are skipped).
pub fn sigma_exact_with_basis(x: u64, basis: &PrimeBasis) -> Result<u64> {
    if x < 1 {
        return Err(Error::InputTooSmall { value: x, min: 1 });
    }
    Ok(sigma_with_primes(x, basis.primes()))
}

/// Exact count of primes `<= x`, via `x = sigma(x) + pi(x)`.
pub fn pi_exact(x: u64) -> Result<u64> {
    pi_exact_with_limit(x, DEFAULT_EXACT_LIMIT)
}

pub fn pi_exact_with_limit(x: u64, limit: u64) -> Result<u64> {
    Ok(x - sigma_exact_with_limit(x, limit)?)
}

/// Outcome of the sigma-difference classifier around an even number `2n`:
/// `delta = sigma(2n+1) - sigma(2n)` decides `2n+1`, and
/// `delta2 = sigma(2n+3) - sigma(2n+1)` decides `2n+3` (the even number
/// `2n+2` in between is always composite here, so `delta2 = 1` means prime).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaClassification {
    pub delta: i64,
    pub delta2: i64,
    pub lower: u64,
    pub upper: u64,
    pub lower_is_prime: bool,
    pub upper_is_prime: bool,
    pub twin: bool,
}

/// Classify `2n+1` and `2n+3` by sigma differences; `twin` iff both prime.
pub fn delta_classify(two_n: u64) -> Result<DeltaClassification> {
    if !two_n.is_multiple_of(2) {
        return Err(Error::InputOdd { value: two_n });
    }
    if two_n < 4 {
        return Err(Error::InputTooSmall {
            value: two_n,
            min: 4,
        });
    }
    let s0 = sigma_exact(two_n)?;
    let s1 = sigma_exact(two_n + 1)?;
    let s3 = sigma_exact(two_n + 3)?;
    let delta = s1 as i64 - s0 as i64;
    let delta2 = s3 as i64 - s1 as i64;
    let lower_is_prime = delta == 0;
    let upper_is_prime = delta2 == 1;
    Ok(DeltaClassification {
        delta,
        delta2,
        lower: two_n + 1,
        upper: two_n + 3,
        lower_is_prime,
        upper_is_prime,
        twin: lower_is_prime && upper_is_prime,
    })
}

/// Exact count of non-primes in the quadratic interval `(n^2, (n+1)^2]`,
/// computed as `sigma((n+1)^2) - sigma(n^2)` and cross-checked against the
/// sieve oracle.
pub fn sigma_interval_exact(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::InputTooSmall { value: n, min: 1 });
    }
    let hi = (n + 1) * (n + 1);
    let diff = sigma_exact(hi)? - sigma_exact(n * n)?;
    let stats = sieve::interval_stats(n, IntervalKind::Quadratic)?;
    let oracle = stats.width - stats.prime_count;
    if diff != oracle {
        return Err(Error::Inconsistency {
            what: format!(
                "sigma difference over ({}^2, {}^2] gave {diff}, sieve oracle gave {oracle}",
                n,
                n + 1
            ),
        });
    }
    Ok(diff)
}

/// Enumerate every unpruned floor term of the sigma sum for `x`, in
/// depth-first order. Intended for term-level diagnostics at small `x`.
pub fn combination_terms(x: u64) -> Result<Vec<CombinationTerm>> {
    if x < 1 {
        return Err(Error::InputTooSmall { value: x, min: 1 });
    }
    if x > DEFAULT_EXACT_LIMIT {
        return Err(Error::ExactLimitExceeded {
            x,
            limit: DEFAULT_EXACT_LIMIT,
        });
    }
    let basis = PrimeBasis::for_value(x)?;
    let primes = basis.primes();

    struct TermWalk<'a> {
        head: &'a [u64],
        p: u64,
        bound: u64,
        outer: usize,
        terms: Vec<CombinationTerm>,
    }

    impl TermWalk<'_> {
        fn descend(&mut self, start: usize, prod: u64, size: u32) {
            self.terms.push(CombinationTerm {
                outer_index: self.outer,
                subset_size: size,
                denominator: self.p * prod,
                sign: if size.is_multiple_of(2) { 1 } else { -1 },
            });
            for t in start..self.head.len() {
                match prod.checked_mul(self.head[t]) {
                    Some(np) if np <= self.bound => self.descend(t + 1, np, size + 1),
                    _ => break,
                }
            }
        }
    }

    let mut terms = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        let mut walk = TermWalk {
            head: &primes[..i],
            p,
            bound: x / p,
            outer: i + 1,
            terms,
        };
        walk.descend(0, 1, 0);
        terms = walk.terms;
    }
    Ok(terms)
}
