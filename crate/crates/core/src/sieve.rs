//! Ground-truth generators: a segmented, bit-packed sieve of Eratosthenes and
//! brute-force enumerators for every quantity the closed-form models predict
//! (prime counts, twins, quadruplets, Goldbach multiplicities, maximal gaps).
//!
//! All operations are pure. Bulk scans shard the range into fixed-size
//! segments so memory stays bounded no matter how large the range is, and
//! reductions are order-insensitive, so parallel runs are deterministic.

use crate::error::{Error, Result};
use rayon::prelude::*;

/// Default upper bound for any sieved value.
pub const DEFAULT_CEILING: u64 = 1 << 40;
/// Default number of odd entries per streamed segment (2^20 odds = 2 MiB span).
pub const DEFAULT_SEGMENT_ODDS: usize = 1 << 20;

/// Range ceiling and segment sizing for the sieve-backed operations.
#[derive(Debug, Clone, Copy)]
pub struct SieveConfig {
    pub ceiling: u64,
    pub segment_odds: usize,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            ceiling: DEFAULT_CEILING,
            segment_odds: DEFAULT_SEGMENT_ODDS,
        }
    }
}

impl SieveConfig {
    pub fn with_ceiling(ceiling: u64) -> Self {
        SieveConfig {
            ceiling,
            ..SieveConfig::default()
        }
    }

    fn check_range(&self, lo: u64, hi: u64) -> Result<()> {
        if lo > hi {
            return Err(Error::InvertedRange { lo, hi });
        }
        if hi > self.ceiling {
            return Err(Error::RangeTooLarge {
                lo,
                hi,
                ceiling: self.ceiling,
            });
        }
        Ok(())
    }
}

/// Integer square root, exact for all u64.
pub(crate) fn isqrt(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u64;
    while x.checked_mul(x).is_none_or(|v| v > n) {
        x -= 1;
    }
    while (x + 1).checked_mul(x + 1).is_some_and(|v| v <= n) {
        x += 1;
    }
    x
}

/// Simple sieve for the base primes that drive segment marking.
fn small_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Primality over one half-open range `[lo, hi)`, bit-packed over the odd
/// integers with 2 handled as a special case.
#[derive(Debug, Clone)]
pub struct PrimeSegment {
    lo: u64,
    hi: u64,
    first_odd: u64,
    words: Vec<u64>,
}

impl PrimeSegment {
    fn sieve_with_base(base: &[u64], lo: u64, hi: u64) -> PrimeSegment {
        let first_odd = if lo <= 1 { 1 } else { lo | 1 };
        let n_odds = if hi > first_odd {
            (hi - first_odd).div_ceil(2) as usize
        } else {
            0
        };
        let mut words = vec![!0u64; n_odds.div_ceil(64)];
        if let Some(last) = words.last_mut() {
            let tail = n_odds % 64;
            if tail != 0 {
                *last &= (1u64 << tail) - 1;
            }
        }
        let mut seg = PrimeSegment {
            lo,
            hi,
            first_odd,
            words,
        };
        if n_odds == 0 {
            return seg;
        }
        if first_odd == 1 {
            seg.clear(0); // 1 is not prime
        }
        let max_val = hi - 1;
        let root = isqrt(max_val);
        for &p in base {
            if p > root {
                break;
            }
            if p == 2 {
                continue;
            }
            // first odd multiple of p in range, never p itself
            let mut start = p * p;
            if start < lo {
                let mut m = lo.div_ceil(p) * p;
                if m.is_multiple_of(2) {
                    m += p;
                }
                start = m.max(p * p);
            }
            let mut k = start;
            while k < hi {
                seg.clear(((k - first_odd) / 2) as usize);
                k += 2 * p;
            }
        }
        seg
    }

    #[inline]
    fn clear(&mut self, idx: usize) {
        self.words[idx / 64] &= !(1u64 << (idx % 64));
    }

    #[inline]
    fn get(&self, idx: usize) -> bool {
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    fn contains_two(&self) -> bool {
        self.lo <= 2 && 2 < self.hi
    }

    /// Primality of `k`; panics if `k` lies outside `[lo, hi)`.
    pub fn is_prime(&self, k: u64) -> bool {
        assert!(
            self.lo <= k && k < self.hi,
            "{k} outside segment [{}, {})",
            self.lo,
            self.hi
        );
        if k == 2 {
            return true;
        }
        if k < 2 || k.is_multiple_of(2) {
            return false;
        }
        self.get(((k - self.first_odd) / 2) as usize)
    }

    /// Number of primes in the segment.
    pub fn count(&self) -> u64 {
        let odd: u64 = self.words.iter().map(|w| w.count_ones() as u64).sum();
        odd + u64::from(self.contains_two())
    }

    /// Ascending iterator over the primes in the segment.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        let two = if self.contains_two() { Some(2) } else { None };
        let first_odd = self.first_odd;
        let odds = self.words.iter().enumerate().flat_map(move |(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(first_odd + 2 * (wi * 64 + b) as u64)
            })
        });
        two.into_iter().chain(odds)
    }
}

/// Sieve the half-open range `[lo, hi)` into one materialized segment.
pub fn sieve_range(lo: u64, hi: u64) -> Result<PrimeSegment> {
    sieve_range_with(&SieveConfig::default(), lo, hi)
}

pub fn sieve_range_with(cfg: &SieveConfig, lo: u64, hi: u64) -> Result<PrimeSegment> {
    cfg.check_range(lo, hi)?;
    let base = if hi > 1 {
        small_primes(isqrt(hi - 1))
    } else {
        Vec::new()
    };
    Ok(PrimeSegment::sieve_with_base(&base, lo, hi))
}

/// All primes `<= x` as a vector. Intended for bases and model support, not
/// for bulk scans (those stream segments instead).
pub fn primes_up_to(x: u64) -> Result<Vec<u64>> {
    let seg = sieve_range(0, x.saturating_add(1))?;
    Ok(seg.primes().collect())
}

/// Visit `[lo, hi)` as a sequence of bounded segments sharing one base sieve.
pub fn for_each_segment_with(
    cfg: &SieveConfig,
    lo: u64,
    hi: u64,
    mut visit: impl FnMut(&PrimeSegment),
) -> Result<()> {
    cfg.check_range(lo, hi)?;
    if lo >= hi {
        return Ok(());
    }
    let base = small_primes(isqrt(hi - 1));
    let span = (cfg.segment_odds as u64) * 2;
    let mut cur = lo;
    while cur < hi {
        let end = hi.min(cur.saturating_add(span));
        let seg = PrimeSegment::sieve_with_base(&base, cur, end);
        visit(&seg);
        cur = end;
    }
    Ok(())
}

/// Exact count of primes `<= x`.
pub fn pi_oracle(x: u64) -> Result<u64> {
    pi_oracle_with(&SieveConfig::default(), x)
}

pub fn pi_oracle_with(cfg: &SieveConfig, x: u64) -> Result<u64> {
    if x < 2 {
        return Ok(0);
    }
    let hi = x.checked_add(1).ok_or(Error::RangeTooLarge {
        lo: 0,
        hi: u64::MAX,
        ceiling: cfg.ceiling,
    })?;
    cfg.check_range(0, hi)?;
    let base = small_primes(isqrt(x));
    let span = (cfg.segment_odds as u64) * 2;
    let ranges: Vec<(u64, u64)> = (0..)
        .map(|i| i as u64 * span)
        .take_while(|&lo| lo < hi)
        .map(|lo| (lo, hi.min(lo + span)))
        .collect();
    Ok(ranges
        .par_iter()
        .map(|&(lo, hi)| PrimeSegment::sieve_with_base(&base, lo, hi).count())
        .sum())
}

/// Largest prime `<= x` (the "preceding prime" lookup).
pub fn prec(x: u64) -> Result<u64> {
    if x < 2 {
        return Err(Error::UndefinedBelowTwo { x: x as f64 });
    }
    let hi = x.checked_add(1).ok_or(Error::RangeTooLarge {
        lo: x,
        hi: u64::MAX,
        ceiling: u64::MAX,
    })?;
    let mut window = 4096u64;
    loop {
        let lo = x.saturating_sub(window - 1);
        let seg = sieve_range_with(&SieveConfig::with_ceiling(u64::MAX), lo, hi)?;
        if let Some(p) = seg.primes().last() {
            return Ok(p);
        }
        debug_assert!(lo > 0, "no prime found below {x}");
        window *= 4;
    }
}

/// `prec` over a real argument: largest prime `<= x`.
pub fn prec_real(x: f64) -> Result<u64> {
    if x.is_nan() || x < 2.0 {
        return Err(Error::UndefinedBelowTwo { x });
    }
    prec(x.floor() as u64)
}

/// Which family of intervals a statistic ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalKind {
    /// `(n^2, (n+1)^2]`, width `2n+1`.
    Quadratic,
    /// `(n^4, (n+1)^4]`, width `4n^3+6n^2+4n+1`.
    Biquadratic,
}

impl IntervalKind {
    /// Bounds `(lo, hi]` of the n-th interval, `None` on 64-bit overflow.
    pub fn checked_bounds(self, n: u64) -> Option<(u64, u64)> {
        let pow = |base: u64, exp: u32| base.checked_pow(exp);
        match self {
            IntervalKind::Quadratic => Some((pow(n, 2)?, pow(n.checked_add(1)?, 2)?)),
            IntervalKind::Biquadratic => Some((pow(n, 4)?, pow(n.checked_add(1)?, 4)?)),
        }
    }

    /// Bounds `(lo, hi]` of the n-th interval; panics on 64-bit overflow.
    pub fn bounds(self, n: u64) -> (u64, u64) {
        self.checked_bounds(n)
            .unwrap_or_else(|| panic!("interval bounds overflow at n = {n}"))
    }
}

/// Observed counts over one interval `(lo, hi]`: primes, twin pairs fully
/// inside, and quadruplets `(p, p+2, p+6, p+8)` fully inside.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadIntervalStats {
    pub n: u64,
    pub width: u64,
    pub prime_count: u64,
    pub twin_count: u64,
    pub quad_count: u64,
}

fn stats_for_bounds(base: &[u64], n: u64, lo: u64, hi: u64) -> QuadIntervalStats {
    let seg = PrimeSegment::sieve_with_base(base, lo + 1, hi + 1);
    let mut prime_count = 0;
    let mut twin_count = 0;
    let mut quad_count = 0;
    for p in seg.primes() {
        prime_count += 1;
        if p + 2 <= hi && seg.is_prime(p + 2) {
            twin_count += 1;
            if p + 8 <= hi && seg.is_prime(p + 6) && seg.is_prime(p + 8) {
                quad_count += 1;
            }
        }
    }
    let stats = QuadIntervalStats {
        n,
        width: hi - lo,
        prime_count,
        twin_count,
        quad_count,
    };
    debug_assert!(stats.prime_count <= stats.width);
    debug_assert!(stats.twin_count <= stats.prime_count.div_ceil(2));
    debug_assert!(stats.quad_count <= stats.twin_count);
    stats
}

/// Observed statistics for the n-th quadratic or biquadratic interval.
pub fn interval_stats(n: u64, kind: IntervalKind) -> Result<QuadIntervalStats> {
    interval_stats_with(&SieveConfig::default(), n, kind)
}

pub fn interval_stats_with(
    cfg: &SieveConfig,
    n: u64,
    kind: IntervalKind,
) -> Result<QuadIntervalStats> {
    if n < 1 {
        return Err(Error::InputTooSmall { value: n, min: 1 });
    }
    let (lo, hi) = kind.checked_bounds(n).ok_or(Error::RangeTooLarge {
        lo: n,
        hi: u64::MAX,
        ceiling: cfg.ceiling,
    })?;
    cfg.check_range(lo, hi + 1)?;
    let base = small_primes(isqrt(hi));
    Ok(stats_for_bounds(&base, n, lo, hi))
}

/// Statistics for every interval index in `n_lo..=n_hi`, computed on parallel
/// workers over one shared base sieve.
pub fn interval_census_with(
    cfg: &SieveConfig,
    kind: IntervalKind,
    n_lo: u64,
    n_hi: u64,
) -> Result<Vec<QuadIntervalStats>> {
    if n_lo < 1 {
        return Err(Error::InputTooSmall {
            value: n_lo,
            min: 1,
        });
    }
    if n_lo > n_hi {
        return Err(Error::InvertedRange { lo: n_lo, hi: n_hi });
    }
    let (_, max_hi) = kind.checked_bounds(n_hi).ok_or(Error::RangeTooLarge {
        lo: n_hi,
        hi: u64::MAX,
        ceiling: cfg.ceiling,
    })?;
    cfg.check_range(0, max_hi + 1)?;
    let base = small_primes(isqrt(max_hi));
    Ok((n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let (lo, hi) = kind.bounds(n);
            stats_for_bounds(&base, n, lo, hi)
        })
        .collect())
}

/// One decomposition of an even number into two odd primes `p <= q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GoldbachWitness {
    pub p: u64,
    pub q: u64,
    pub sum: u64,
}

/// Count the unordered odd-prime pairs `p <= q` with `p + q = two_m`;
/// the pair `p = q` counts once. Materializes primality up to `two_m`, so
/// memory grows linearly with the argument.
pub fn goldbach_count_oracle(two_m: u64) -> Result<(u64, Vec<GoldbachWitness>)> {
    goldbach_count_oracle_with(&SieveConfig::default(), two_m)
}

pub fn goldbach_count_oracle_with(
    cfg: &SieveConfig,
    two_m: u64,
) -> Result<(u64, Vec<GoldbachWitness>)> {
    if !two_m.is_multiple_of(2) {
        return Err(Error::InputOdd { value: two_m });
    }
    if two_m < 6 {
        return Err(Error::InputTooSmall {
            value: two_m,
            min: 6,
        });
    }
    let seg = sieve_range_with(cfg, 0, two_m + 1)?;
    let mut witnesses = Vec::new();
    let mut p = 3;
    while p <= two_m / 2 {
        if seg.is_prime(p) && seg.is_prime(two_m - p) {
            witnesses.push(GoldbachWitness {
                p,
                q: two_m - p,
                sum: two_m,
            });
        }
        p += 2;
    }
    Ok((witnesses.len() as u64, witnesses))
}

/// Scan all even numbers in `[8, max_even]` and return those with no
/// odd-prime decomposition at all (expected: none).
pub fn goldbach_unrepresentable_with(cfg: &SieveConfig, max_even: u64) -> Result<Vec<u64>> {
    if max_even < 8 {
        return Err(Error::InputTooSmall {
            value: max_even,
            min: 8,
        });
    }
    let seg = sieve_range_with(cfg, 0, max_even + 1)?;
    let odd_primes: Vec<u64> = seg.primes().skip(1).collect();
    let mut bad: Vec<u64> = (4..=max_even / 2)
        .into_par_iter()
        .map(|m| 2 * m)
        .filter(|&e| {
            !odd_primes
                .iter()
                .take_while(|&&p| 2 * p <= e)
                .any(|&p| seg.is_prime(e - p))
        })
        .collect();
    bad.sort_unstable();
    Ok(bad)
}

/// Maximal gap between consecutive primes with the upper prime `<= x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxGap {
    pub gap: u64,
    pub lower_prime: u64,
    pub upper_prime: u64,
}

/// First-occurrence maximal prime gap up to `x` (ties broken by the smallest
/// lower prime).
pub fn max_gap_up_to(x: u64) -> Result<MaxGap> {
    max_gap_up_to_with(&SieveConfig::default(), x)
}

pub fn max_gap_up_to_with(cfg: &SieveConfig, x: u64) -> Result<MaxGap> {
    if x < 3 {
        return Err(Error::InputTooSmall { value: x, min: 3 });
    }
    let hi = x.checked_add(1).ok_or(Error::RangeTooLarge {
        lo: 0,
        hi: u64::MAX,
        ceiling: cfg.ceiling,
    })?;
    let mut best = MaxGap {
        gap: 0,
        lower_prime: 0,
        upper_prime: 0,
    };
    let mut prev: Option<u64> = None;
    for_each_segment_with(cfg, 0, hi, |seg| {
        for p in seg.primes() {
            if let Some(q) = prev {
                if p - q > best.gap {
                    best = MaxGap {
                        gap: p - q,
                        lower_prime: q,
                        upper_prime: p,
                    };
                }
            }
            prev = Some(p);
        }
    })?;
    Ok(best)
}

/// A consecutive prime pair violating the bound `gap < 2 * floor(sqrt(upper))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GapViolation {
    pub lower_prime: u64,
    pub upper_prime: u64,
    pub gap: u64,
    pub bound: u64,
}

/// Scan every consecutive prime pair with upper prime `<= x` against the
/// bound `gap < 2 * floor(sqrt(upper))`; the returned list is expected empty.
pub fn gap_bound_check(x: u64) -> Result<Vec<GapViolation>> {
    gap_bound_check_with(&SieveConfig::default(), x)
}

pub fn gap_bound_check_with(cfg: &SieveConfig, x: u64) -> Result<Vec<GapViolation>> {
    if x < 3 {
        return Err(Error::InputTooSmall { value: x, min: 3 });
    }
    let hi = x.checked_add(1).ok_or(Error::RangeTooLarge {
        lo: 0,
        hi: u64::MAX,
        ceiling: cfg.ceiling,
    })?;
    let mut violations = Vec::new();
    let mut prev: Option<u64> = None;
    for_each_segment_with(cfg, 0, hi, |seg| {
        for p in seg.primes() {
            if let Some(q) = prev {
                let bound = 2 * isqrt(p);
                if p - q >= bound {
                    violations.push(GapViolation {
                        lower_prime: q,
                        upper_prime: p,
                        gap: p - q,
                        bound,
                    });
                }
            }
            prev = Some(p);
        }
    })?;
    Ok(violations)
}

/// A number whose proper-divisor sum equals the queried odd value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UntouchableWitness {
    pub x: u64,
    /// The two distinct primes with `x = p * q`, when that construction applies.
    pub parts: Option<(u64, u64)>,
    pub proper_divisor_sum: u64,
}

/// For odd `z`, search for an `x` whose proper divisors sum to `z`:
/// `x = p * q` built from a two-distinct-prime decomposition of `z - 1`.
/// Returns `None` for `z = 5`, the lone odd value with no such witness.
/// Materializes primality up to `z`.
pub fn untouchable_witness(z: u64) -> Result<Option<UntouchableWitness>> {
    untouchable_witness_with(&SieveConfig::default(), z)
}

pub fn untouchable_witness_with(cfg: &SieveConfig, z: u64) -> Result<Option<UntouchableWitness>> {
    if z.is_multiple_of(2) {
        return Err(Error::InputEven { value: z });
    }
    if z < 3 {
        return Err(Error::InputTooSmall { value: z, min: 3 });
    }
    match z {
        3 => {
            // 4 = 2^2: proper divisors 1 + 2
            return Ok(Some(UntouchableWitness {
                x: 4,
                parts: None,
                proper_divisor_sum: 3,
            }));
        }
        5 => return Ok(None),
        7 => {
            // 8 = 2^3: proper divisors 1 + 2 + 4
            return Ok(Some(UntouchableWitness {
                x: 8,
                parts: None,
                proper_divisor_sum: 7,
            }));
        }
        _ => {}
    }
    let target = z - 1;
    let seg = sieve_range_with(cfg, 0, target + 1)?;
    let mut p = 3;
    while p < target - p {
        if seg.is_prime(p) && seg.is_prime(target - p) {
            let q = target - p;
            // x = p*q with p != q prime has proper divisors 1, p, q
            return Ok(Some(UntouchableWitness {
                x: p * q,
                parts: Some((p, q)),
                proper_divisor_sum: 1 + p + q,
            }));
        }
        p += 2;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_range_examples() {
        let seg = sieve_range(0, 2).unwrap();
        assert_eq!(seg.count(), 0);
        let seg = sieve_range(0, 31).unwrap();
        assert_eq!(
            seg.primes().collect::<Vec<_>>(),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        );
        let seg = sieve_range(81, 101).unwrap();
        assert_eq!(seg.primes().collect::<Vec<_>>(), vec![83, 89, 97]);
    }

    #[test]
    fn sieve_rejects_ranges_beyond_ceiling() {
        let cfg = SieveConfig::with_ceiling(1000);
        assert!(matches!(
            sieve_range_with(&cfg, 0, 1001),
            Err(Error::RangeTooLarge { .. })
        ));
        assert!(sieve_range_with(&cfg, 0, 1000).is_ok());
    }

    #[test]
    fn pi_oracle_examples() {
        assert_eq!(pi_oracle(1).unwrap(), 0);
        assert_eq!(pi_oracle(122).unwrap(), 30);
        assert_eq!(pi_oracle(168).unwrap(), 39);
        assert_eq!(pi_oracle(10_000).unwrap(), 1229);
    }

    #[test]
    fn pi_oracle_small_steps() {
        // nondecreasing, steps of 0 or 1
        let mut prev = 0;
        for x in 1..200 {
            let v = pi_oracle(x).unwrap();
            assert!(v == prev || v == prev + 1);
            prev = v;
        }
    }

    #[test]
    fn prec_examples() {
        assert_eq!(prec(2).unwrap(), 2);
        assert_eq!(prec(10).unwrap(), 7);
        assert_eq!(prec(11).unwrap(), 11);
        assert_eq!(prec_real(122f64.sqrt()).unwrap(), 11);
        assert!(matches!(prec(1), Err(Error::UndefinedBelowTwo { .. })));
        assert!(matches!(
            prec_real(1.99),
            Err(Error::UndefinedBelowTwo { .. })
        ));
    }

    #[test]
    fn prec_index_matches_basis_size() {
        // prec(sqrt(122)) = 11 is the 5th prime
        let primes = primes_up_to(11).unwrap();
        assert_eq!(primes.len(), 5);
        assert_eq!(*primes.last().unwrap(), 11);
    }

    #[test]
    fn interval_stats_examples() {
        let s = interval_stats(9, IntervalKind::Quadratic).unwrap();
        assert_eq!((s.prime_count, s.twin_count), (3, 0));
        let s = interval_stats(5, IntervalKind::Quadratic).unwrap();
        assert_eq!((s.prime_count, s.twin_count), (2, 1));
        let s = interval_stats(1, IntervalKind::Quadratic).unwrap();
        assert_eq!(s.prime_count, 2); // the primes 2 and 3
        assert_eq!(s.width, 3);
    }

    #[test]
    fn interval_stats_biquadratic() {
        // (10^4, 11^4] holds the quadruplet starting at 13001
        let s = interval_stats(10, IntervalKind::Biquadratic).unwrap();
        assert_eq!(s.width, 4641);
        assert_eq!(s.quad_count, 1);
        let s = interval_stats(14, IntervalKind::Biquadratic).unwrap();
        assert_eq!(s.quad_count, 1);
        let s = interval_stats(4, IntervalKind::Biquadratic).unwrap();
        assert_eq!(s.quad_count, 0);
    }

    #[test]
    fn goldbach_examples() {
        let (c, w) = goldbach_count_oracle(10).unwrap();
        assert_eq!(c, 2);
        assert_eq!(
            w,
            vec![
                GoldbachWitness {
                    p: 3,
                    q: 7,
                    sum: 10
                },
                GoldbachWitness {
                    p: 5,
                    q: 5,
                    sum: 10
                }
            ]
        );
        let (c, w) = goldbach_count_oracle(12).unwrap();
        assert_eq!(c, 1);
        assert_eq!(
            w[0],
            GoldbachWitness {
                p: 5,
                q: 7,
                sum: 12
            }
        );
        let (c, _) = goldbach_count_oracle(36).unwrap();
        assert_eq!(c, 4);
        assert!(matches!(
            goldbach_count_oracle(11),
            Err(Error::InputOdd { .. })
        ));
        assert!(matches!(
            goldbach_count_oracle(4),
            Err(Error::InputTooSmall { .. })
        ));
    }

    #[test]
    fn max_gap_examples() {
        assert_eq!(
            max_gap_up_to(10).unwrap(),
            MaxGap {
                gap: 2,
                lower_prime: 3,
                upper_prime: 5
            }
        );
        assert_eq!(
            max_gap_up_to(100).unwrap(),
            MaxGap {
                gap: 8,
                lower_prime: 89,
                upper_prime: 97
            }
        );
        assert_eq!(max_gap_up_to(1000).unwrap().gap, 20);
    }

    #[test]
    fn gap_bound_check_examples() {
        assert!(gap_bound_check(3).unwrap().is_empty());
        assert!(gap_bound_check(100).unwrap().is_empty());
        assert!(gap_bound_check(100_000).unwrap().is_empty());
    }

    #[test]
    fn untouchable_examples() {
        assert_eq!(untouchable_witness(5).unwrap(), None);
        let w = untouchable_witness(3).unwrap().unwrap();
        assert_eq!((w.x, w.proper_divisor_sum), (4, 3));
        let w = untouchable_witness(7).unwrap().unwrap();
        assert_eq!((w.x, w.proper_divisor_sum), (8, 7));
        let w = untouchable_witness(9).unwrap().unwrap();
        assert_eq!((w.x, w.parts, w.proper_divisor_sum), (15, Some((3, 5)), 9));
        assert!(matches!(
            untouchable_witness(8),
            Err(Error::InputEven { .. })
        ));
    }

    #[test]
    fn untouchable_witness_brute_force_cross_check() {
        fn proper_divisor_sum(x: u64) -> u64 {
            (1..x).filter(|d| x.is_multiple_of(*d)).sum()
        }
        for z in (3..200u64).step_by(2) {
            match untouchable_witness(z).unwrap() {
                Some(w) => assert_eq!(proper_divisor_sum(w.x), z, "witness for z={z}"),
                None => assert_eq!(z, 5),
            }
        }
    }

    #[test]
    fn segment_is_prime_handles_two_and_evens() {
        let seg = sieve_range(0, 50).unwrap();
        assert!(seg.is_prime(2));
        assert!(!seg.is_prime(0));
        assert!(!seg.is_prime(1));
        assert!(!seg.is_prime(4));
        assert!(seg.is_prime(47));
    }
}
