//! Exact prime counting by inclusion-exclusion over prime combinations,
//! statistical distribution laws for primes, twins, quadruplets and Goldbach
//! pairs over quadratic intervals, and divisibility predicates for numbers
//! `2^x +- 1` — every model validated against an independent segmented
//! sieve oracle.

pub mod binomial;
pub mod error;
pub mod exact;
pub mod models;
pub mod sieve;

pub use error::{Error, Result};
