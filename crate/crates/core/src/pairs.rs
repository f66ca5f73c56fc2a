//! Amicable and betrothed pairs.
//!
//! A pair (m, n) of distinct positive integers is amicable when s(m) = n and
//! s(n) = m, and betrothed when s(m) = n + 1 and s(n) = m + 1.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divisor::{aliquot_s_u64, sigma_brute_u64, SieveConfig, DEFAULT_MEMORY_BUDGET};
use crate::{aliquot_s, build_sieve_with, gcd, Error, Nat, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairKind {
    Amicable,
    Betrothed,
    Neither,
}

/// Degenerate inputs rejected before any divisor sum is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Guard {
    ZeroMember,
    EqualMembers,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdict {
    pub m: Nat,
    pub n: Nat,
    pub kind: PairKind,
    /// `None` when a guard rejected the input.
    pub s_m: Option<Nat>,
    pub s_n: Option<Nat>,
    pub guard_failures: Vec<Guard>,
}

fn guards(m: &Nat, n: &Nat) -> Vec<Guard> {
    let mut failures = Vec::new();
    if m.is_zero() || n.is_zero() {
        failures.push(Guard::ZeroMember);
    }
    if m == n {
        failures.push(Guard::EqualMembers);
    }
    failures
}

fn verdict(m: &Nat, n: &Nat, target: PairKind, holds: impl Fn(&Nat, &Nat) -> bool) -> PairVerdict {
    let guard_failures = guards(m, n);
    if !guard_failures.is_empty() {
        return PairVerdict {
            m: m.clone(),
            n: n.clone(),
            kind: PairKind::Neither,
            s_m: None,
            s_n: None,
            guard_failures,
        };
    }
    let s_m = aliquot_s(m);
    let s_n = aliquot_s(n);
    let kind = if holds(&s_m, &s_n) {
        target
    } else {
        PairKind::Neither
    };
    PairVerdict {
        m: m.clone(),
        n: n.clone(),
        kind,
        s_m: Some(s_m),
        s_n: Some(s_n),
        guard_failures,
    }
}

pub fn check_amicable(m: &Nat, n: &Nat) -> PairVerdict {
    verdict(m, n, PairKind::Amicable, |s_m, s_n| s_m == n && s_n == m)
}

pub fn check_betrothed(m: &Nat, n: &Nat) -> PairVerdict {
    verdict(m, n, PairKind::Betrothed, |s_m, s_n| {
        *s_m == n + 1 && *s_n == m + 1
    })
}

/// The amicable partner of `n`, if it has one.
pub fn is_amicable_number(n: &Nat) -> Option<Nat> {
    let partner = aliquot_s(n);
    if partner.is_zero() || &partner == n {
        return None;
    }
    (aliquot_s(&partner) == *n).then_some(partner)
}

/// How s(m) was obtained during a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Oracle {
    /// Dense additive sieve over [0, limit].
    Sieve,
    /// Per-candidate factorization, no table.
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub oracle: Oracle,
    pub parallel: bool,
    pub memory_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            oracle: Oracle::Sieve,
            parallel: false,
            memory_budget: DEFAULT_MEMORY_BUDGET,
        }
    }
}

/// One pair found by a search, with its aliquot sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub m: Nat,
    pub n: Nat,
    pub kind: PairKind,
    pub s_m: Nat,
    pub s_n: Nat,
}

impl PairRecord {
    pub fn gcd(&self) -> Nat {
        gcd(&self.m, &self.n)
    }

    pub fn both_even(&self) -> bool {
        self.m.is_even() && self.n.is_even()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub limit: Nat,
    /// Sorted by `m`, each unordered pair once, always `m < n`.
    pub pairs: Vec<PairRecord>,
    pub all_even: bool,
    /// Smallest gcd over the pairs; `None` for an empty report.
    pub min_gcd: Option<Nat>,
    pub oracle: Oracle,
}

/// Result of [`audit`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Audit {
    pub all_even: bool,
    pub min_gcd: Option<Nat>,
    pub coprime_found: bool,
}

pub fn search_amicable(limit: u64) -> Result<SearchReport> {
    search_amicable_with(limit, &SearchConfig::default())
}

pub fn search_betrothed(limit: u64) -> Result<SearchReport> {
    search_betrothed_with(limit, &SearchConfig::default())
}

/// All amicable pairs (m, n) with m < n and m ≤ limit. The partner n may
/// exceed the limit; its aliquot sum is then computed directly. Every hit is
/// re-verified with the trial-division divisor sum before it is reported.
pub fn search_amicable_with(limit: u64, config: &SearchConfig) -> Result<SearchReport> {
    let s = AliquotSource::new(limit, config)?;
    let hits = scan(limit, config.parallel, |m| {
        let n = s.get(m)?;
        if n <= m as u128 || n > u64::MAX as u128 {
            return None;
        }
        let n = n as u64;
        (s.get(n)? == m as u128).then_some((m, n))
    });

    let mut pairs = Vec::with_capacity(hits.len());
    for (m, n) in hits {
        let total = m as u128 + n as u128;
        if sigma_brute_u64(m) != total || sigma_brute_u64(n) != total {
            return Err(Error::OracleMismatch { m: m.into(), n: n.into() });
        }
        pairs.push(PairRecord {
            m: m.into(),
            n: n.into(),
            kind: PairKind::Amicable,
            s_m: n.into(),
            s_n: m.into(),
        });
    }
    Ok(report(limit, pairs, config.oracle))
}

/// All betrothed pairs (m, n) with m < n and m ≤ limit, mirroring
/// [`search_amicable_with`] under s(m) = n + 1, s(n) = m + 1.
pub fn search_betrothed_with(limit: u64, config: &SearchConfig) -> Result<SearchReport> {
    let s = AliquotSource::new(limit, config)?;
    let hits = scan(limit, config.parallel, |m| {
        let s_m = s.get(m)?;
        if s_m < 2 {
            return None;
        }
        let n = s_m - 1;
        if n <= m as u128 || n > u64::MAX as u128 {
            return None;
        }
        let n = n as u64;
        (s.get(n)? == m as u128 + 1).then_some((m, n))
    });

    let mut pairs = Vec::with_capacity(hits.len());
    for (m, n) in hits {
        let total = m as u128 + n as u128 + 1;
        if sigma_brute_u64(m) != total || sigma_brute_u64(n) != total {
            return Err(Error::OracleMismatch { m: m.into(), n: n.into() });
        }
        pairs.push(PairRecord {
            m: m.into(),
            n: n.into(),
            kind: PairKind::Betrothed,
            s_m: (n + 1).into(),
            s_n: (m + 1).into(),
        });
    }
    Ok(report(limit, pairs, config.oracle))
}

/// Recomputes the parity and coprimality flags from the pairs themselves.
pub fn audit(report: &SearchReport) -> Audit {
    let min_gcd = report.pairs.iter().map(PairRecord::gcd).min();
    Audit {
        all_even: report.pairs.iter().all(PairRecord::both_even),
        coprime_found: min_gcd.as_ref().is_some_and(Nat::is_one),
        min_gcd,
    }
}

fn report(limit: u64, pairs: Vec<PairRecord>, oracle: Oracle) -> SearchReport {
    let mut report = SearchReport {
        limit: limit.into(),
        pairs,
        all_even: true,
        min_gcd: None,
        oracle,
    };
    let flags = audit(&report);
    report.all_even = flags.all_even;
    report.min_gcd = flags.min_gcd;
    report
}

/// Applies `test` to every m in [2, limit] and returns the hits in ascending
/// order of m, whatever the scheduling.
fn scan<F>(limit: u64, parallel: bool, test: F) -> Vec<(u64, u64)>
where
    F: Fn(u64) -> Option<(u64, u64)> + Sync,
{
    if limit < 2 {
        return Vec::new();
    }
    if parallel {
        let mut hits: Vec<_> = (2..=limit).into_par_iter().filter_map(&test).collect();
        hits.sort_unstable();
        hits
    } else {
        (2..=limit).filter_map(test).collect()
    }
}

enum AliquotSource {
    Table(crate::SieveTable),
    Direct,
}

impl AliquotSource {
    fn new(limit: u64, config: &SearchConfig) -> Result<Self> {
        if limit < 2 {
            return Err(Error::BadParameter("search limit must be at least 2".into()));
        }
        Ok(match config.oracle {
            Oracle::Sieve => AliquotSource::Table(build_sieve_with(
                limit,
                &SieveConfig {
                    memory_budget: config.memory_budget,
                    parallel: config.parallel,
                },
            )?),
            Oracle::Direct => AliquotSource::Direct,
        })
    }

    /// s(i), from the table when it covers `i`.
    fn get(&self, i: u64) -> Option<u128> {
        match self {
            AliquotSource::Table(table) => Some(
                table
                    .get(i)
                    .map(u128::from)
                    .unwrap_or_else(|| aliquot_s_u64(i)),
            ),
            AliquotSource::Direct => Some(aliquot_s_u64(i)),
        }
    }
}
