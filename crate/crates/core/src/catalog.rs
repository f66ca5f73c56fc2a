//! Built-in catalog of classical results, each of which must re-verify.

use serde::{Deserialize, Serialize};

use crate::pairs::PairKind;
use crate::{check_amicable, check_betrothed, verify_cycle, Nat};

/// Decimal exponent of the known lower bound on the smaller member of any
/// coprime amicable pair (10^65). Recorded as metadata only; nothing in this
/// crate computes or asserts it.
pub const COPRIME_PAIR_BOUND_EXPONENT: u32 = 65;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EntryKind {
    AmicablePair,
    BetrothedPair,
    SociableCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownEntry {
    pub kind: EntryKind,
    pub members: Vec<Nat>,
    pub attribution: String,
    /// How the entry is obtained or where it comes from historically.
    pub source: String,
}

fn entry(kind: EntryKind, members: &[u64], attribution: &str, source: &str) -> KnownEntry {
    KnownEntry {
        kind,
        members: members.iter().copied().map(Nat::from).collect(),
        attribution: attribution.to_string(),
        source: source.to_string(),
    }
}

pub fn known_catalog() -> Vec<KnownEntry> {
    use EntryKind::*;
    vec![
        entry(AmicablePair, &[220, 284], "Pythagoras", "antiquity; Thabit rule k = 1"),
        entry(AmicablePair, &[1184, 1210], "Paganini", "found 1866"),
        entry(AmicablePair, &[2620, 2924], "Euler", "found 1747"),
        entry(AmicablePair, &[5020, 5564], "Euler", "found 1747"),
        entry(AmicablePair, &[17296, 18416], "Fermat", "found 1636; Thabit rule k = 3"),
        entry(AmicablePair, &[9363584, 9437056], "Descartes", "found 1638; Thabit rule k = 6"),
        entry(
            AmicablePair,
            &[2172649216, 2181168896],
            "Euler",
            "Euler rule (m, n) = (1, 8)",
        ),
        entry(BetrothedPair, &[48, 75], "smallest betrothed pair", "classical"),
        entry(BetrothedPair, &[140, 195], "second smallest betrothed pair", "classical"),
        entry(
            SociableCycle,
            &[12496, 14288, 15472, 14536, 14264],
            "Poulet",
            "found 1918; smallest sociable cycle of length 5",
        ),
    ]
}

/// Outcome of re-verifying one catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryCheck {
    pub entry: KnownEntry,
    pub ok: bool,
    pub detail: String,
}

pub fn verify_entry(entry: &KnownEntry) -> EntryCheck {
    let (ok, detail) = match entry.kind {
        EntryKind::AmicablePair | EntryKind::BetrothedPair => match entry.members.as_slice() {
            [m, n] => {
                let (verdict, want) = if entry.kind == EntryKind::AmicablePair {
                    (check_amicable(m, n), PairKind::Amicable)
                } else {
                    (check_betrothed(m, n), PairKind::Betrothed)
                };
                (verdict.kind == want, format!("{:?}", verdict.kind))
            }
            other => (false, format!("expected 2 members, found {}", other.len())),
        },
        EntryKind::SociableCycle => match verify_cycle(&entry.members) {
            Ok(()) => (true, "cycle closes".to_string()),
            Err(defect) => (false, defect.to_string()),
        },
    };
    EntryCheck {
        entry: entry.clone(),
        ok,
        detail,
    }
}

/// Re-verifies every entry, in catalog order.
pub fn self_test(entries: &[KnownEntry]) -> Vec<EntryCheck> {
    entries.iter().map(verify_entry).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn has(members: &[u64]) -> bool {
        let want: Vec<Nat> = members.iter().copied().map(Nat::from).collect();
        known_catalog().iter().any(|e| e.members == want)
    }

    #[test]
    fn catalog_contents() {
        let catalog = known_catalog();
        assert_eq!(catalog.len(), 10);
        assert!(has(&[9363584, 9437056]));
        assert!(has(&[2172649216, 2181168896]));
        assert_eq!(catalog.iter().filter(|e| e.kind == EntryKind::AmicablePair).count(), 7);
        assert_eq!(catalog.iter().filter(|e| e.kind == EntryKind::BetrothedPair).count(), 2);
    }

    #[test]
    fn every_entry_reverifies() {
        for check in self_test(&known_catalog()) {
            assert!(check.ok, "{:?}: {}", check.entry.members, check.detail);
        }
    }

    #[test]
    fn corrupted_entries_fail() {
        let mut bad = known_catalog();
        bad[0].members[1] = Nat::from(285u32);
        bad[7].kind = EntryKind::AmicablePair;
        bad[9].members.swap(0, 1);
        let checks = self_test(&bad);
        assert!(!checks[0].ok);
        assert!(!checks[7].ok);
        assert!(!checks[9].ok);
        assert!(checks[1].ok);
    }
}
