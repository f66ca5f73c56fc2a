//! Divisor sums and the abundant/perfect/deficient classification.
//!
//! Three independent routes to σ are provided: the multiplicative route
//! through [`factorize`](crate::factorize) ([`sigma`]), trial enumeration up to
//! √n ([`sigma_brute`]), and the additive sieve ([`build_sieve`]). The test
//! suites cross-check them against each other.

use std::cmp::Ordering;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::numeric::factor_u64;
use crate::{factorize, Error, Nat, Result};

/// σ(n), the sum of all positive divisors of n. σ(0) is defined as 0.
pub fn sigma(n: &Nat) -> Nat {
    if n.is_zero() {
        return Nat::zero();
    }
    match n.to_u64() {
        Some(small) => Nat::from(sigma_u64(small)),
        None => factorize(n).expect("n is nonzero").sigma(),
    }
}

/// σ(n) on machine words. σ(n) < 2^70 for every n < 2^64, so `u128` holds it.
pub fn sigma_u64(n: u64) -> u128 {
    if n == 0 {
        return 0;
    }
    factor_u64(n)
        .into_iter()
        .map(|(p, e)| {
            let p = p as u128;
            (0..e).fold(1u128, |term, _| term * p + 1)
        })
        .product()
}

/// σ(n) by pairing each divisor d ≤ √n with n / d. Meant as an oracle for
/// n up to about 10^12.
pub fn sigma_brute(n: &Nat) -> Nat {
    match n.to_u64() {
        Some(small) => Nat::from(sigma_brute_u64(small)),
        None => {
            let n = n.as_biguint();
            let mut total = num_bigint::BigUint::default();
            let mut d = num_bigint::BigUint::from(1u32);
            while &d * &d <= *n {
                if (n % &d) == num_bigint::BigUint::default() {
                    let co = n / &d;
                    if co != d {
                        total += &co;
                    }
                    total += &d;
                }
                d += 1u32;
            }
            Nat::from(total)
        }
    }
}

pub fn sigma_brute_u64(n: u64) -> u128 {
    let mut total = 0u128;
    let mut d = 1u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n % d == 0 {
            let co = n / d;
            total += d as u128;
            if co != d {
                total += co as u128;
            }
        }
        d += 1;
    }
    total
}

/// The aliquot sum s(n) = σ(n) − n, with s(0) = s(1) = 0.
pub fn aliquot_s(n: &Nat) -> Nat {
    if n.is_zero() {
        return Nat::zero();
    }
    sigma(n)
        .checked_sub(n)
        .expect("σ(n) ≥ n for n ≥ 1")
}

pub fn aliquot_s_u64(n: u64) -> u128 {
    if n == 0 {
        0
    } else {
        sigma_u64(n) - n as u128
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Abundance {
    Deficient,
    Perfect,
    Abundant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberClass {
    pub tag: Abundance,
    pub n: Nat,
    pub s_value: Nat,
}

pub fn classify(n: &Nat) -> Result<NumberClass> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let s_value = aliquot_s(n);
    let tag = match s_value.cmp(n) {
        Ordering::Less => Abundance::Deficient,
        Ordering::Equal => Abundance::Perfect,
        Ordering::Greater => Abundance::Abundant,
    };
    Ok(NumberClass {
        tag,
        n: n.clone(),
        s_value,
    })
}

/// Default ceiling on sieve entries (2^31).
pub const DEFAULT_MEMORY_BUDGET: u64 = 1 << 31;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    /// Maximum number of table entries (`limit + 1`) that may be allocated.
    pub memory_budget: u64,
    pub parallel: bool,
}

impl Default for SieveConfig {
    fn default() -> Self {
        SieveConfig {
            memory_budget: DEFAULT_MEMORY_BUDGET,
            parallel: false,
        }
    }
}

/// Dense table of aliquot sums: `s_values[i] = s(i)` for `0 ≤ i ≤ limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SieveTable {
    limit: u64,
    s_values: Vec<u64>,
}

impl SieveTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn s_values(&self) -> &[u64] {
        &self.s_values
    }

    /// s(i) if `i` is inside the table.
    pub fn get(&self, i: u64) -> Option<u64> {
        usize::try_from(i)
            .ok()
            .and_then(|i| self.s_values.get(i).copied())
    }
}

pub fn build_sieve(limit: u64) -> Result<SieveTable> {
    build_sieve_with(limit, &SieveConfig::default())
}

/// Additive divisor sieve: every d in 1..=limit/2 is added to the slot of each
/// of its proper multiples.
///
/// In parallel mode the index range is split into blocks and each block runs
/// the same additive pass restricted to its own slots, so the result is
/// identical to the sequential table.
pub fn build_sieve_with(limit: u64, config: &SieveConfig) -> Result<SieveTable> {
    if limit < 1 {
        return Err(Error::BadParameter("sieve limit must be at least 1".into()));
    }
    let entries = limit
        .checked_add(1)
        .ok_or(Error::LimitTooLarge { requested: u64::MAX, budget: config.memory_budget })?;
    if entries > config.memory_budget || usize::try_from(entries).is_err() {
        return Err(Error::LimitTooLarge {
            requested: entries,
            budget: config.memory_budget,
        });
    }
    let len = entries as usize;
    let mut s_values = vec![0u64; len];

    if config.parallel && len > 1 << 16 {
        const BLOCK: usize = 1 << 16;
        s_values
            .par_chunks_mut(BLOCK)
            .enumerate()
            .for_each(|(block, slots)| {
                let lo = block * BLOCK;
                let hi = lo + slots.len(); // exclusive
                for d in 1..=(hi - 1) / 2 {
                    // First proper multiple of d that is ≥ lo.
                    let first = (2 * d).max(lo.div_ceil(d) * d);
                    let mut j = first;
                    while j < hi {
                        slots[j - lo] += d as u64;
                        j += d;
                    }
                }
            });
    } else {
        for d in 1..=len / 2 {
            let mut j = 2 * d;
            while j < len {
                s_values[j] += d as u64;
                j += d;
            }
        }
    }

    Ok(SieveTable { limit, s_values })
}
