//! Closed-form density laws and scatter bands for primes, twins, quadruplets
//! and Goldbach multiplicities over quadratic and biquadratic intervals.
//!
//! The common core is the interval density `W = A' / (2 ln(n+1))` for the
//! quadratic interval `(n^2, (n+1)^2]` of width `b_n = 2n+1`. Pair events
//! (twins, Goldbach pairs) square the density, quadruplets raise it to the
//! fourth power. Scatter bands follow from doubling the pair-probability
//! term: the banded mean is `b_n W (1 +- A'/ln(n+1))` for primes, and for
//! twins either the multiplicative square of that band or the additive
//! `delta_2 = 2 (A'/ln(n+1))^2 +- 4 A'/ln(n+1)` form, selected by
//! [`BandVariant`].
//!
//! All evaluations approximate the largest basis prime by `n+1` and so use
//! `ln(n+1)`; setting [`ModelParams::exact_prec_log`] switches to the exact
//! `ln(prec(n+1))` for sensitivity comparisons.

use crate::error::{Error, Result};
use crate::sieve;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// How the scatter band around a twin/Goldbach mean is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BandVariant {
    /// Additive `1 + delta_2` with `delta_2 = 2 r^2 +- 4 r`, `r = A'/ln(n+1)`.
    Printed,
    /// Multiplicative `(1 +- A'/ln(n+1))^2`.
    Squared,
}

/// Where the density constant comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum APrimeMode {
    /// `A' = ln 3` (the leading constant with no empirical correction).
    Unit,
    /// `A'` as configured, default 1.06 (the empirically fitted value).
    Fit,
}

/// The empirical constant and the model-variant switches; every report
/// header spells these out so reruns are self-describing.
#[derive(Debug, Clone, Copy)]
pub struct ModelParams {
    pub a_prime: f64,
    pub band_variant: BandVariant,
    pub mode: APrimeMode,
    /// Use `ln(prec(n+1))` instead of `ln(n+1)` in every model formula.
    pub exact_prec_log: bool,
}

impl Default for ModelParams {
    fn default() -> Self {
        ModelParams {
            a_prime: 1.06,
            band_variant: BandVariant::Squared,
            mode: APrimeMode::Fit,
            exact_prec_log: false,
        }
    }
}

impl ModelParams {
    pub fn effective_a_prime(&self) -> f64 {
        match self.mode {
            APrimeMode::Unit => 3f64.ln(),
            APrimeMode::Fit => self.a_prime,
        }
    }

    /// The logarithm entering every interval formula; `n >= 1` required.
    fn interval_log(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(Error::LogSingularity { n });
        }
        if self.exact_prec_log {
            Ok((sieve::prec(n + 1)? as f64).ln())
        } else {
            Ok(((n + 1) as f64).ln())
        }
    }
}

/// A model mean with its scatter band.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BandedPrediction {
    /// Index of the quadratic interval the prediction lives on.
    pub n: u64,
    pub mean: f64,
    pub lower: f64,
    pub upper: f64,
}

impl BandedPrediction {
    fn new(n: u64, mean: f64, lower: f64, upper: f64) -> Self {
        debug_assert!(lower <= mean && mean <= upper || lower.min(upper) < 0.0);
        BandedPrediction {
            n,
            mean,
            lower,
            upper,
        }
    }
}

/// Banded prime count over a quadratic interval, together with the spacing
/// quantities derived from the density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrimeBand {
    pub prediction: BandedPrediction,
    /// Mean room one prime takes: `1/W = b_n / pi(eta_n)`.
    pub mean_gap: f64,
    /// Half the room of a prime pair: `1/(2 W^2) = 2 ln^2(n+1) / A'^2`.
    pub half_pair_spacing: f64,
    /// `b_n / half_pair_spacing = 2 b_n W^2`, the scatter width.
    pub scatter: f64,
}

fn width(n: u64) -> f64 {
    (2 * n + 1) as f64
}

/// Model prime density `W = A' / (2 ln(n+1))` over the n-th quadratic interval.
pub fn density(n: u64, params: &ModelParams) -> Result<f64> {
    let log = params.interval_log(n)?;
    Ok(params.effective_a_prime() / (2.0 * log))
}

/// Banded prime count `b_n W (1 +- A'/ln(n+1))` plus spacing diagnostics.
pub fn prime_band(n: u64, params: &ModelParams) -> Result<PrimeBand> {
    let a = params.effective_a_prime();
    let log = params.interval_log(n)?;
    let w = a / (2.0 * log);
    let b = width(n);
    let mean = b * w;
    let rel = a / log;
    let half_pair_spacing = 1.0 / (2.0 * w * w);
    Ok(PrimeBand {
        prediction: BandedPrediction::new(n, mean, mean * (1.0 - rel), mean * (1.0 + rel)),
        mean_gap: 1.0 / w,
        half_pair_spacing,
        scatter: b / half_pair_spacing,
    })
}

/// Banded twin count `b_n W^2` with the configured band variant.
pub fn twin_model(n: u64, params: &ModelParams) -> Result<BandedPrediction> {
    let a = params.effective_a_prime();
    let log = params.interval_log(n)?;
    let w = a / (2.0 * log);
    let mean = width(n) * w * w;
    let rel = a / log;
    let (lower, upper) = match params.band_variant {
        BandVariant::Squared => {
            let lo = (1.0 - rel) * (1.0 - rel);
            let hi = (1.0 + rel) * (1.0 + rel);
            (mean * lo, mean * hi)
        }
        BandVariant::Printed => {
            let delta_plus = 2.0 * rel * rel + 4.0 * rel;
            let delta_minus = 2.0 * rel * rel - 4.0 * rel;
            (mean * (1.0 + delta_minus), mean * (1.0 + delta_plus))
        }
    };
    Ok(BandedPrediction::new(n, mean, lower, upper))
}

/// The older fixed-factor twin band: bounds scale the mean by `1.2^2` and
/// `0.8^2`, with the constant pinned at 1.06.
pub fn legacy_twin_band(n: u64) -> Result<BandedPrediction> {
    if n == 0 {
        return Err(Error::LogSingularity { n });
    }
    let log = ((n + 1) as f64).ln();
    let mean = (n as f64 + 0.5) * 1.06 * 1.06 / (2.0 * log * log);
    Ok(BandedPrediction::new(n, mean, mean * 0.64, mean * 1.44))
}

/// Biquadratic width `b_{4,n} = 4n^3 + 6n^2 + 4n + 1`.
pub fn biquadratic_width(n: u64) -> f64 {
    let n = n as f64;
    4.0 * n * n * n + 6.0 * n * n + 4.0 * n + 1.0
}

/// Model quadruplet count `b_{4,n} (A'/(2 ln(n+1)))^4` over `(n^4, (n+1)^4]`.
pub fn quad_model(n: u64, params: &ModelParams) -> Result<f64> {
    let a = params.effective_a_prime();
    let log = params.interval_log(n)?;
    let w = a / (2.0 * log);
    Ok(biquadratic_width(n) * w.powi(4))
}

/// Model Goldbach multiplicity for an even `2m`: locate the quadratic
/// interval with `n^2 < 2m <= (n+1)^2` and double the twin band there.
pub fn goldbach_model(two_m: u64, params: &ModelParams) -> Result<BandedPrediction> {
    if !two_m.is_multiple_of(2) {
        return Err(Error::InputOdd { value: two_m });
    }
    if two_m < 8 {
        return Err(Error::InputTooSmall {
            value: two_m,
            min: 8,
        });
    }
    let n = sieve::isqrt(two_m - 1);
    let twin = twin_model(n, params)?;
    Ok(BandedPrediction::new(
        n,
        2.0 * twin.mean,
        2.0 * twin.lower,
        2.0 * twin.upper,
    ))
}

/// Model maximal prime gap near `x`: `ln^2(x) / (2 A'^2)`.
pub fn max_gap_model(x: u64, params: &ModelParams) -> Result<f64> {
    if x < 3 {
        return Err(Error::InputTooSmall { value: x, min: 3 });
    }
    let a = params.effective_a_prime();
    let l = (x as f64).ln();
    Ok(l * l / (2.0 * a * a))
}

/// The exact product law for the prime count over the n-th quadratic
/// interval: `(2n+1) * prod_{p <= prec(n+1)} (1 - 1/p)`.
pub fn pi_model_product(n: u64) -> Result<f64> {
    if n < 1 {
        return Err(Error::InputTooSmall { value: n, min: 1 });
    }
    let primes = sieve::primes_up_to(n + 1)?;
    let s: f64 = primes.iter().map(|&p| 1.0 - 1.0 / p as f64).product();
    Ok(width(n) * s)
}

/// `pi_model_product` for every `n` in `1..=n_max`, sharing one prime list.
pub fn pi_model_products(n_max: u64) -> Result<Vec<f64>> {
    if n_max < 1 {
        return Err(Error::InputTooSmall {
            value: n_max,
            min: 1,
        });
    }
    let primes = sieve::primes_up_to(n_max + 1)?;
    let mut out = Vec::with_capacity(n_max as usize);
    let mut s = 1.0f64;
    let mut next = 0usize;
    for n in 1..=n_max {
        while next < primes.len() && primes[next] <= n + 1 {
            s *= 1.0 - 1.0 / primes[next] as f64;
            next += 1;
        }
        out.push(width(n) * s);
    }
    Ok(out)
}

/// Cumulative model prime count: the per-interval product law, floored per
/// interval (exact rational arithmetic) and summed from `n = 1` to `n0`.
pub fn pi_model_cumulative(n0: u64) -> Result<u64> {
    if n0 < 1 {
        return Err(Error::InputTooSmall { value: n0, min: 1 });
    }
    let primes = sieve::primes_up_to(n0 + 1)?;
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    let mut next = 0usize;
    let mut sum = 0u64;
    for n in 1..=n0 {
        while next < primes.len() && primes[next] <= n + 1 {
            num *= primes[next] - 1;
            den *= primes[next];
            next += 1;
        }
        let floored = (BigUint::from(2 * n + 1) * &num) / &den;
        sum += floored
            .to_u64()
            .expect("per-interval model value exceeds u64");
    }
    Ok(sum)
}

/// Prime-reciprocal sum against its double-log law: `sum_{j<=i0} 1/p_j`,
/// `ln ln p_{i0}`, and their difference (the fitted constant).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MertensDiagnostic {
    pub i0: u64,
    pub p_i0: u64,
    pub sum_reciprocal: f64,
    pub lnln_p_i0: f64,
    pub fitted_constant: f64,
}

/// Diagnostic only: no assertion beyond boundedness is implied.
pub fn mertens_diagnostic(i0_limit: u64) -> Result<MertensDiagnostic> {
    if i0_limit < 2 {
        return Err(Error::InputTooSmall {
            value: i0_limit,
            min: 2,
        });
    }
    // upper bound for the i0-th prime, widened on the rare miss
    let mut bound = {
        let i = i0_limit as f64;
        ((i * (i.ln() + i.ln().ln().max(0.0)) * 1.2) as u64).max(100)
    };
    let primes = loop {
        let primes = sieve::primes_up_to(bound)?;
        if primes.len() >= i0_limit as usize {
            break primes;
        }
        bound *= 2;
    };
    let prefix = &primes[..i0_limit as usize];
    let sum_reciprocal: f64 = prefix.iter().map(|&p| 1.0 / p as f64).sum();
    let p_i0 = *prefix.last().unwrap();
    let lnln = (p_i0 as f64).ln().ln();
    Ok(MertensDiagnostic {
        i0: i0_limit,
        p_i0,
        sum_reciprocal,
        lnln_p_i0: lnln,
        fitted_constant: sum_reciprocal - lnln,
    })
}
