//! Aliquot sequences n, s(n), s(s(n)), … and sociable cycles.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divisor::SieveConfig;
use crate::{aliquot_s, build_sieve_with, Error, Nat, Result};

/// How an aliquot iteration stopped. `CeilingExceeded` and `StepsExhausted`
/// are inconclusive: they say nothing about whether the sequence terminates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum AliquotOutcome {
    ReachedZero,
    /// A perfect number, s(v) = v.
    FixedPoint { value: Nat },
    /// Re-entered a loop of length ≥ 2. `cycle` is in visiting order and
    /// starts at `trajectory[entry_index]`.
    EnteredCycle { cycle: Vec<Nat>, entry_index: usize },
    CeilingExceeded,
    StepsExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AliquotResult {
    pub start: Nat,
    /// `trajectory[0] = start` and each later entry is s of the one before.
    /// A revisited value is not repeated; a value above the ceiling is kept.
    pub trajectory: Vec<Nat>,
    pub outcome: AliquotOutcome,
}

/// Iterates s from `start` for at most `max_steps` applications.
pub fn aliquot_sequence(start: &Nat, max_steps: usize, ceiling: &Nat) -> Result<AliquotResult> {
    if start.is_zero() {
        return Err(Error::ZeroInput);
    }
    if max_steps == 0 {
        return Err(Error::BadParameter("max_steps must be at least 1".into()));
    }
    if ceiling < start {
        return Err(Error::BadParameter(format!(
            "ceiling {ceiling} is below the start value {start}"
        )));
    }

    let mut trajectory = vec![start.clone()];
    let mut seen: HashMap<Nat, usize> = HashMap::from([(start.clone(), 0)]);
    let mut current = start.clone();
    let finish = |trajectory, outcome| AliquotResult {
        start: start.clone(),
        trajectory,
        outcome,
    };
    for _ in 0..max_steps {
        let next = aliquot_s(&current);
        if next.is_zero() {
            trajectory.push(next);
            return Ok(finish(trajectory, AliquotOutcome::ReachedZero));
        }
        if next == current {
            return Ok(finish(trajectory, AliquotOutcome::FixedPoint { value: next }));
        }
        if let Some(&entry_index) = seen.get(&next) {
            let cycle = trajectory[entry_index..].to_vec();
            return Ok(finish(trajectory, AliquotOutcome::EnteredCycle { cycle, entry_index }));
        }
        if &next > ceiling {
            trajectory.push(next);
            return Ok(finish(trajectory, AliquotOutcome::CeilingExceeded));
        }
        seen.insert(next.clone(), trajectory.len());
        trajectory.push(next.clone());
        current = next;
    }
    Ok(finish(trajectory, AliquotOutcome::StepsExhausted))
}

/// Why a list of numbers is not a sociable cycle. Conditions are checked in
/// the order the variants are declared and the first failure is reported.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum CycleDefect {
    TooShort { length: usize },
    ZeroMember { index: usize },
    Duplicate { value: Nat },
    BrokenLink { index: usize, expected: Nat, found: Nat },
}

impl std::fmt::Display for CycleDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CycleDefect::TooShort { length } => write!(f, "length {length} is below 2"),
            CycleDefect::ZeroMember { index } => write!(f, "member {index} is zero"),
            CycleDefect::Duplicate { value } => write!(f, "{value} appears more than once"),
            CycleDefect::BrokenLink { index, expected, found } => {
                write!(f, "s(member {index}) = {found}, expected {expected}")
            }
        }
    }
}

/// Checks that `members` has length ≥ 2, no zero entry, no repeated entry, and
/// that s maps each member to the next one, wrapping around at the end.
pub fn verify_cycle(members: &[Nat]) -> std::result::Result<(), CycleDefect> {
    if members.len() < 2 {
        return Err(CycleDefect::TooShort { length: members.len() });
    }
    if let Some(index) = members.iter().position(Nat::is_zero) {
        return Err(CycleDefect::ZeroMember { index });
    }
    let mut distinct = BTreeSet::new();
    for m in members {
        if !distinct.insert(m) {
            return Err(CycleDefect::Duplicate { value: m.clone() });
        }
    }
    for (index, m) in members.iter().enumerate() {
        let expected = &members[(index + 1) % members.len()];
        let found = aliquot_s(m);
        if &found != expected {
            return Err(CycleDefect::BrokenLink {
                index,
                expected: expected.clone(),
                found,
            });
        }
    }
    Ok(())
}

/// Serializable outcome of [`verify_cycle`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCheck {
    pub members: Vec<Nat>,
    pub valid: bool,
    pub reason: Option<String>,
}

impl CycleCheck {
    pub fn run(members: Vec<Nat>) -> Self {
        let outcome = verify_cycle(&members);
        CycleCheck {
            members,
            valid: outcome.is_ok(),
            reason: outcome.err().map(|d| d.to_string()),
        }
    }
}

/// A verified sociable cycle in canonical rotation (smallest member first).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SociableCycle {
    pub members: Vec<Nat>,
    pub length: usize,
}

impl SociableCycle {
    pub fn new(members: Vec<Nat>) -> std::result::Result<Self, CycleDefect> {
        verify_cycle(&members)?;
        Ok(Self::canonical(members))
    }

    fn canonical(mut members: Vec<Nat>) -> Self {
        let pivot = members
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.cmp(b.1))
            .map(|(i, _)| i)
            .unwrap_or(0);
        members.rotate_left(pivot);
        SociableCycle {
            length: members.len(),
            members,
        }
    }
}

pub fn find_cycles(limit: u64, max_len: usize) -> Result<Vec<SociableCycle>> {
    find_cycles_with(limit, max_len, &SieveConfig::default())
}

/// Every sociable cycle of length 2..=max_len that passes through some start
/// value ≤ `limit`, with all members below 64 · limit. Sorted by length, then
/// by members.
pub fn find_cycles_with(limit: u64, max_len: usize, config: &SieveConfig) -> Result<Vec<SociableCycle>> {
    if limit < 2 {
        return Err(Error::BadParameter("cycle search limit must be at least 2".into()));
    }
    if max_len < 2 {
        return Err(Error::BadParameter("max_len must be at least 2".into()));
    }
    let bound = limit.checked_mul(64).ok_or(Error::LimitTooLarge {
        requested: u64::MAX,
        budget: config.memory_budget,
    })?;
    let table = build_sieve_with(bound, config)?;
    let s = table.s_values();

    let walk = |start: u64| -> Option<Vec<u64>> {
        let mut path = vec![start];
        let mut x = start;
        for _ in 0..max_len {
            x = s[x as usize];
            if x == start {
                return (path.len() >= 2).then_some(path);
            }
            // Members of a cycle through `start` are visited once; a repeat
            // means the walk fell into some other loop.
            if x == 0 || x > bound || path.contains(&x) {
                return None;
            }
            path.push(x);
        }
        None
    };

    let found: Vec<Vec<u64>> = if config.parallel {
        (2..=limit).into_par_iter().filter_map(walk).collect()
    } else {
        (2..=limit).filter_map(walk).collect()
    };

    let unique: BTreeSet<SociableCycle> = found
        .into_iter()
        .map(|path| SociableCycle::canonical(path.into_iter().map(Nat::from).collect()))
        .collect();
    let mut cycles: Vec<SociableCycle> = unique.into_iter().collect();
    cycles.sort_by(|a, b| a.length.cmp(&b.length).then_with(|| a.members.cmp(&b.members)));
    debug_assert!(cycles.iter().all(|c| verify_cycle(&c.members).is_ok()));
    Ok(cycles)
}
