//! Plain-text renderings for `--format text`.

use std::fmt::Write;

use amicable::catalog::EntryCheck;
use amicable::{
    AliquotOutcome, AliquotResult, AuditReport, CycleCheck, GeneratorCandidate, Nat, NumberClass,
    PairVerdict, Primality, SearchReport, SociableCycle,
};

fn join(values: &[Nat]) -> String {
    values.iter().map(Nat::to_string).collect::<Vec<_>>().join(" ")
}

fn primality(p: Primality) -> &'static str {
    match p {
        Primality::Composite => "composite",
        Primality::Prime => "prime",
        Primality::ProbablePrime => "probable prime",
    }
}

pub fn classification(c: &NumberClass) -> String {
    format!("{:?}\ns({}) = {}", c.tag, c.n, c.s_value)
}

pub fn verdict(v: &PairVerdict) -> String {
    let mut out = format!("{:?}", v.kind);
    if !v.guard_failures.is_empty() {
        let guards: Vec<_> = v.guard_failures.iter().map(|g| format!("{g:?}")).collect();
        let _ = write!(out, " ({})", guards.join(", "));
    }
    if let (Some(s_m), Some(s_n)) = (&v.s_m, &v.s_n) {
        let _ = write!(out, "\ns({}) = {}\ns({}) = {}", v.m, s_m, v.n, s_n);
    }
    out
}

pub fn search(r: &SearchReport) -> String {
    let mut out = String::new();
    for p in &r.pairs {
        let _ = writeln!(out, "{} {}", p.m, p.n);
    }
    let min_gcd = r.min_gcd.as_ref().map_or("-".to_string(), Nat::to_string);
    let _ = write!(
        out,
        "# {} pair(s) with smaller member <= {}; all even: {}; min gcd: {}",
        r.pairs.len(),
        r.limit,
        r.all_even,
        min_gcd
    );
    out
}

pub fn aliquot(r: &AliquotResult) -> String {
    let outcome = match &r.outcome {
        AliquotOutcome::ReachedZero => "reached 0".to_string(),
        AliquotOutcome::FixedPoint { value } => format!("fixed point {value} (perfect)"),
        AliquotOutcome::EnteredCycle { cycle, entry_index } => {
            format!("entered cycle [{}] at index {entry_index}", join(cycle))
        }
        AliquotOutcome::CeilingExceeded => "inconclusive: ceiling exceeded".to_string(),
        AliquotOutcome::StepsExhausted => "inconclusive: step limit reached".to_string(),
    };
    format!("{}\n{outcome}", join(&r.trajectory))
}

pub fn cycles(cycles: &[SociableCycle]) -> String {
    if cycles.is_empty() {
        return "no cycles".to_string();
    }
    cycles
        .iter()
        .map(|c| format!("{}: {}", c.length, join(&c.members)))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn cycle_check(c: &CycleCheck) -> String {
    match &c.reason {
        None => "valid".to_string(),
        Some(reason) => format!("invalid: {reason}"),
    }
}

pub fn candidates(candidates: &[GeneratorCandidate]) -> String {
    let mut out = String::new();
    for c in candidates {
        match c {
            GeneratorCandidate::Thabit(t) => {
                let _ = writeln!(
                    out,
                    "thabit k={}: p={} ({}), q={} ({}), r={} ({})",
                    t.k,
                    t.p,
                    primality(t.p_prime),
                    t.q,
                    primality(t.q_prime),
                    t.r,
                    primality(t.r_prime)
                );
            }
            GeneratorCandidate::Euler(e) => {
                let _ = writeln!(
                    out,
                    "euler m={} n={}: a={}, p={} ({}), q={} ({}), r={} ({})",
                    e.m,
                    e.n,
                    e.a,
                    e.p,
                    primality(e.p_prime),
                    e.q,
                    primality(e.q_prime),
                    e.r,
                    primality(e.r_prime)
                );
            }
            GeneratorCandidate::Borho(b) => {
                let h = &b.hypothesis;
                let _ = writeln!(
                    out,
                    "borho a={} u={} n={}: t={}, p1={}, p2={}{}",
                    b.a,
                    b.u,
                    b.n,
                    b.t,
                    b.p1,
                    b.p2,
                    if b.degenerate_subtraction { " (truncated)" } else { "" }
                );
                let _ = writeln!(
                    out,
                    "  breeder amicable: {}, t prime: {}, p1 prime: {}, p2 prime: {}, \
                     gcd(au,t)=1: {}, gcd(au,p1)=1: {}, gcd(a,p2)=1: {}",
                    h.breeder_amicable,
                    h.t_prime,
                    h.p1_prime,
                    h.p2_prime,
                    h.coprime_au_t,
                    h.coprime_au_p1,
                    h.coprime_a_p2
                );
            }
        }
        match c.pair() {
            Some(p) if c.verified() => {
                let _ = writeln!(out, "  pair ({}, {}) verified", p.m, p.n);
            }
            Some(p) => {
                let _ = writeln!(out, "  pair ({}, {}) FAILED verification", p.m, p.n);
            }
            None => {
                let _ = writeln!(out, "  no pair");
            }
        }
    }
    out.trim_end().to_string()
}

pub fn catalog_checks(checks: &[EntryCheck]) -> String {
    checks
        .iter()
        .map(|c| {
            format!(
                "{} {:?} {} ({}): {}",
                if c.ok { "ok  " } else { "FAIL" },
                c.entry.kind,
                join(&c.entry.members),
                c.entry.attribution,
                c.detail
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn audit(a: &AuditReport) -> String {
    format!(
        "limit: {}\npairs: {}\nall even: {}\nmin gcd: {}\ncoprime found: {}",
        a.limit,
        a.pairs,
        a.audit.all_even,
        a.audit.min_gcd.as_ref().map_or("-".to_string(), Nat::to_string),
        a.audit.coprime_found
    )
}
