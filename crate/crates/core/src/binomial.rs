//! Verifiable divisibility and congruence predicates for numbers of the form
//! `2^x +- 1`: Mersenne and Fermat values, cofactor extractions, pairwise
//! coprimality, and the `2n+1 | 2^n -+ 1` classification.
//!
//! Identity checks (cofactors, Fermat products) run on exact arbitrary
//! precision integers. Divisibility sweeps never materialize `2^n +- 1`;
//! they use modular exponentiation, which is what makes an exhaustive scan
//! to `n = 5*10^5` take seconds rather than hours.

use crate::error::{Error, Result};
use crate::sieve;
use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;

/// Guard on exponent bit-size so identity checks cannot eat the machine.
const MAX_EXPONENT_BITS: u64 = 1 << 26;

/// `2^exponent + 1` or `2^exponent - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A number `2^exponent +- 1`, kept symbolic until `value()` is called.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinomialForm {
    pub exponent: u64,
    pub sign: Sign,
}

impl BinomialForm {
    pub fn new(exponent: u64, sign: Sign) -> Result<Self> {
        if exponent < 1 {
            return Err(Error::InputTooSmall {
                value: exponent,
                min: 1,
            });
        }
        if exponent > MAX_EXPONENT_BITS {
            return Err(Error::ExponentTooLarge {
                value: exponent,
                max: MAX_EXPONENT_BITS,
            });
        }
        Ok(BinomialForm { exponent, sign })
    }

    pub fn value(&self) -> BigUint {
        let base = BigUint::one() << self.exponent;
        match self.sign {
            Sign::Plus => base + 1u32,
            Sign::Minus => base - 1u32,
        }
    }
}

fn pow2(exponent: u64) -> Result<BigUint> {
    if exponent > MAX_EXPONENT_BITS {
        return Err(Error::ExponentTooLarge {
            value: exponent,
            max: MAX_EXPONENT_BITS,
        });
    }
    Ok(BigUint::one() << exponent)
}

/// Deterministic primality by trial division; adequate for the word-sized
/// arguments these predicates take.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = 7u64;
    let mut wheel = [4u64, 2].iter().cycle();
    while d <= n / d {
        if n.is_multiple_of(d) {
            return false;
        }
        d += wheel.next().unwrap();
    }
    true
}

/// `2^e mod m` by square-and-multiply on 128-bit intermediates.
pub fn modpow2(e: u64, m: u64) -> u64 {
    debug_assert!(m > 1);
    let mut result: u128 = 1;
    let mut base: u128 = 2 % m as u128;
    let mut e = e;
    let m = m as u128;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    result as u64
}

/// Exact Mersenne value `2^p - 1`, `p >= 2`.
pub fn mersenne(p: u64) -> Result<BigUint> {
    if p < 2 {
        return Err(Error::InputTooSmall { value: p, min: 2 });
    }
    Ok(pow2(p)? - 1u32)
}

/// Exact Fermat value `2^(2^i) + 1`, `0 <= i <= 30`.
pub fn fermat(i: u32) -> Result<BigUint> {
    if i > 30 {
        return Err(Error::ExponentTooLarge {
            value: i as u64,
            max: 30,
        });
    }
    Ok(pow2(1u64 << i)? + 1u32)
}

/// The verified facts around an odd prime exponent `p`:
/// `2^p = 2 (1 + p M)` with integral `M`, `2^p - 1 = 1 mod 3`,
/// `2^p + 1 = 0 mod 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentCongruences {
    pub p: u64,
    /// `M = (2^(p-1) - 1) / p`, exact.
    pub m: BigUint,
    pub minus_mod_three: u8,
    pub plus_mod_three: u8,
}

pub fn prime_exponent_congruences(p: u64) -> Result<ExponentCongruences> {
    if p.is_multiple_of(2) {
        return Err(Error::InputEven { value: p });
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime { value: p });
    }
    let half = pow2(p - 1)? - 1u32;
    let (m, rem) = half.div_rem(&BigUint::from(p));
    if rem != BigUint::ZERO {
        return Err(Error::Inconsistency {
            what: format!("(2^{} - 1) is not divisible by {p}", p - 1),
        });
    }
    let value = pow2(p)?;
    let minus_mod_three = ((&value - 1u32) % 3u32)
        .to_u64_digits()
        .first()
        .copied()
        .unwrap_or(0) as u8;
    let plus_mod_three = ((&value + 1u32) % 3u32)
        .to_u64_digits()
        .first()
        .copied()
        .unwrap_or(0) as u8;
    if minus_mod_three != 1 || plus_mod_three != 0 {
        return Err(Error::Inconsistency {
            what: format!("2^{p} -+ 1 congruences mod 3 failed"),
        });
    }
    Ok(ExponentCongruences {
        p,
        m,
        minus_mod_three,
        plus_mod_three,
    })
}

/// Verify that `2^p -+ 1` divides `2^(p m) -+ 1` for odd `m > 1` by exact
/// division and return the cofactor (always > 1).
///
/// The minus form also holds for `p = 2`; the plus form requires an odd
/// prime `p >= 3`.
pub fn subexponent_divisor(p: u64, m: u64, sign: Sign) -> Result<BigUint> {
    if m.is_multiple_of(2) {
        return Err(Error::InputEven { value: m });
    }
    if m <= 1 {
        return Err(Error::InputTooSmall { value: m, min: 3 });
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime { value: p });
    }
    if sign == Sign::Plus && p == 2 {
        return Err(Error::InputEven { value: p });
    }
    let divisor = BinomialForm::new(p, sign)?.value();
    let whole = BinomialForm::new(p * m, sign)?.value();
    let (cofactor, rem) = whole.div_rem(&divisor);
    if rem != BigUint::ZERO {
        return Err(Error::Inconsistency {
            what: format!("2^{p} sign {sign:?} does not divide 2^({p}*{m})"),
        });
    }
    debug_assert!(cofactor > BigUint::one());
    Ok(cofactor)
}

/// Exact factor structure of `2^(m 2^i) +- 1` for odd `m`, `i >= 1`:
/// every Fermat value `F_0..F_{i-1}` and the Mersenne value `2^m - 1`
/// divide the minus form; `F_i` divides the plus form with a cofactor
/// that is 1 exactly when `m = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FermatStructure {
    pub m: u64,
    pub i: u32,
    /// exponent `m * 2^i`
    pub exponent: u64,
    /// cofactor of `F_i` in `2^(m 2^i) + 1`
    pub plus_cofactor: BigUint,
    pub plus_cofactor_is_one: bool,
    /// cofactor of `2^m - 1` in `2^(m 2^i) - 1`
    pub minus_cofactor: BigUint,
}

pub fn fermat_factor_structure(m: u64, i: u32) -> Result<FermatStructure> {
    if m.is_multiple_of(2) {
        return Err(Error::InputEven { value: m });
    }
    if m < 1 {
        return Err(Error::InputTooSmall { value: m, min: 1 });
    }
    if i < 1 {
        return Err(Error::InputTooSmall {
            value: i as u64,
            min: 1,
        });
    }
    let exponent =
        m.checked_shl(i)
            .filter(|&e| e <= MAX_EXPONENT_BITS)
            .ok_or(Error::ExponentTooLarge {
                value: m,
                max: MAX_EXPONENT_BITS,
            })?;
    let minus = pow2(exponent)? - 1u32;
    let plus = pow2(exponent)? + 1u32;

    for v in 0..i {
        let f = fermat(v)?;
        if (&minus % &f) != BigUint::ZERO {
            return Err(Error::Inconsistency {
                what: format!("F_{v} does not divide 2^{exponent} - 1"),
            });
        }
    }
    let mersenne_part = pow2(m)? - 1u32;
    let (minus_cofactor, rem) = minus.div_rem(&mersenne_part);
    if rem != BigUint::ZERO {
        return Err(Error::Inconsistency {
            what: format!("2^{m} - 1 does not divide 2^{exponent} - 1"),
        });
    }
    let (plus_cofactor, rem) = plus.div_rem(&fermat(i)?);
    if rem != BigUint::ZERO {
        return Err(Error::Inconsistency {
            what: format!("F_{i} does not divide 2^{exponent} + 1"),
        });
    }
    let plus_cofactor_is_one = plus_cofactor.is_one();
    if plus_cofactor_is_one != (m == 1) {
        return Err(Error::Inconsistency {
            what: format!("cofactor-of-one rule failed for m={m}, i={i}"),
        });
    }
    // odd exponents: 3 | 2^m + 1; even exponents split as a difference of squares
    if (pow2(m)? + 1u32) % 3u32 != BigUint::ZERO {
        return Err(Error::Inconsistency {
            what: format!("3 does not divide 2^{m} + 1"),
        });
    }
    let half = pow2(exponent / 2)?;
    if (&half + 1u32) * (&half - 1u32) != pow2(exponent)? - 1u32 {
        return Err(Error::Inconsistency {
            what: format!("difference-of-squares split failed at exponent {exponent}"),
        });
    }
    Ok(FermatStructure {
        m,
        i,
        exponent,
        plus_cofactor,
        plus_cofactor_is_one,
        minus_cofactor,
    })
}

/// Pairwise coprimality: `gcd(F_i, F_j) = 1` for `j < i <= 14`, plus
/// `gcd(2^i - 1, 2^i + 1) = 1` for the same `i`.
pub fn fermat_coprime(i: u32, j: u32) -> Result<bool> {
    if i > 14 {
        return Err(Error::ExponentTooLarge {
            value: i as u64,
            max: 14,
        });
    }
    if j >= i {
        return Err(Error::InvertedRange {
            lo: j as u64,
            hi: i as u64,
        });
    }
    let fermat_pair = fermat(i)?.gcd(&fermat(j)?).is_one();
    let twin_forms = (pow2(i as u64)? - 1u32)
        .gcd(&(pow2(i as u64)? + 1u32))
        .is_one();
    Ok(fermat_pair && twin_forms)
}

/// Exact telescoping product: `F_0 * F_1 * ... * F_{i-1} = F_i - 2`.
pub fn fermat_product_identity(i: u32) -> Result<bool> {
    if !(1..=12).contains(&i) {
        return Err(Error::ExponentTooLarge {
            value: i as u64,
            max: 12,
        });
    }
    let mut product = BigUint::one();
    for v in 0..i {
        product *= fermat(v)?;
    }
    Ok(product == fermat(i)? - 2u32)
}

/// Which clause of the `2n+1 | 2^n -+ 1` classification applies to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictClause {
    /// `n = 0 mod 4`: `2n+1 | 2^n - 1`.
    Mod4Zero,
    /// odd prime `n = 3 mod 4`: `2n+1 | 2^n - 1`.
    PrimeThreeMod4,
    /// odd prime `n = 1 mod 4`: `2n+1 | 2^n + 1`.
    PrimeOneMod4,
    /// `n = 2 mod 4`: `2n+1 | 2^n + 1`.
    Mod4Two,
    /// odd composite `n`: measured but not asserted.
    OutOfScope,
}

/// The measured congruence of `2^n` modulo the odd prime `p' = 2n+1`,
/// together with the clause that applies and, for out-of-scope odd
/// composite `n`, whether `p'` already divides the least-factor form
/// `2^q -+ 1` (`q` the least prime factor of `n`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisibilityVerdict {
    pub n: u64,
    pub p_prime: u64,
    pub clause: VerdictClause,
    pub divides_minus: bool,
    pub divides_plus: bool,
    pub least_factor_absorbs: Option<bool>,
}

fn least_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3;
    while d <= n / d {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

fn classify(n: u64, n_is_prime: bool) -> VerdictClause {
    match n % 4 {
        0 => VerdictClause::Mod4Zero,
        2 => VerdictClause::Mod4Two,
        1 if n_is_prime => VerdictClause::PrimeOneMod4,
        3 if n_is_prime => VerdictClause::PrimeThreeMod4,
        _ => VerdictClause::OutOfScope,
    }
}

fn verdict_with(n: u64, n_is_prime: bool, p_prime_is_prime: bool) -> Result<DivisibilityVerdict> {
    if n < 2 {
        return Err(Error::InputTooSmall { value: n, min: 2 });
    }
    let p_prime = 2 * n + 1;
    if p_prime <= 3 || !p_prime_is_prime {
        return Err(Error::CompositeModulus { p_prime });
    }
    let residue = modpow2(n, p_prime);
    let divides_minus = residue == 1;
    let divides_plus = residue == p_prime - 1;
    // 2^(2n) = 1 mod p', so the half power is a square root of 1: for an odd
    // prime p' > 3 exactly one of the two divisibilities holds
    debug_assert!(divides_minus != divides_plus);
    let clause = classify(n, n_is_prime);
    let expected = match clause {
        VerdictClause::Mod4Zero | VerdictClause::PrimeThreeMod4 => Some(divides_minus),
        VerdictClause::Mod4Two | VerdictClause::PrimeOneMod4 => Some(divides_plus),
        VerdictClause::OutOfScope => None,
    };
    if expected == Some(false) {
        return Err(Error::Inconsistency {
            what: format!("clause {clause:?} failed at n={n}: 2^{n} = {residue} mod {p_prime}"),
        });
    }
    let least_factor_absorbs = if clause == VerdictClause::OutOfScope {
        let q = least_prime_factor(n);
        let r = modpow2(q, p_prime);
        Some(if divides_plus {
            r == p_prime - 1
        } else {
            r == 1
        })
    } else {
        None
    };
    Ok(DivisibilityVerdict {
        n,
        p_prime,
        clause,
        divides_minus,
        divides_plus,
        least_factor_absorbs,
    })
}

/// Classify and verify the divisibility of `2^n -+ 1` by `p' = 2n+1`.
/// `p'` must be an odd prime > 3; otherwise no clause applies.
pub fn divisibility_verdict(n: u64) -> Result<DivisibilityVerdict> {
    if n < 2 {
        return Err(Error::InputTooSmall { value: n, min: 2 });
    }
    let p_prime = 2 * n + 1;
    verdict_with(n, is_prime_u64(n), is_prime_u64(p_prime))
}

/// Result of the exhaustive clause sweep over `2 <= n <= n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepReport {
    pub n_max: u64,
    /// `n` with `2n+1` prime and an asserted clause, all verified.
    pub checked: u64,
    /// odd composite `n` with `2n+1` prime: measured, never asserted.
    pub out_of_scope: u64,
    /// clause failures; expected empty.
    pub violations: Vec<u64>,
}

/// Verify every applicable clause for `2 <= n <= n_max` by modular
/// exponentiation, sharding over parallel workers.
pub fn divisibility_sweep(n_max: u64) -> Result<SweepReport> {
    if n_max < 2 {
        return Err(Error::InputTooSmall {
            value: n_max,
            min: 2,
        });
    }
    let seg = sieve::sieve_range_with(
        &sieve::SieveConfig::with_ceiling(u64::MAX),
        0,
        2 * n_max + 2,
    )?;
    let results: Vec<(u64, bool, bool)> = (2..=n_max)
        .into_par_iter()
        .filter(|&n| seg.is_prime(2 * n + 1) && 2 * n + 1 > 3)
        .map(|n| {
            let in_scope = classify(n, seg.is_prime(n)) != VerdictClause::OutOfScope;
            let ok = verdict_with(n, seg.is_prime(n), true).is_ok();
            (n, in_scope, ok)
        })
        .collect();
    let mut checked = 0;
    let mut out_of_scope = 0;
    let mut violations = Vec::new();
    for (n, in_scope, ok) in results {
        if in_scope {
            checked += 1;
            if !ok {
                violations.push(n);
            }
        } else {
            out_of_scope += 1;
        }
    }
    violations.sort_unstable();
    Ok(SweepReport {
        n_max,
        checked,
        out_of_scope,
        violations,
    })
}
