//! Deterministic JSON and CSV serialization.
//!
//! JSON field order follows struct declaration order and every integer is a
//! decimal string. CSV layouts, one header row each:
//!
//! | report            | columns                          |
//! |-------------------|----------------------------------|
//! | pair, search, candidates | `m,n,kind,gcd,parity`     |
//! | aliquot           | `step,value`                     |
//! | cycles            | `length,members`                 |
//! | classification    | `n,s_value,class`                |
//! | function value    | `function,n,value`               |
//! | cycle check       | `members,valid,reason`           |
//! | audit             | `limit,pairs,all_even,min_gcd,coprime_found` |
//! | catalog           | `kind,members,attribution,source`|
//! | catalog check     | `kind,members,ok,detail`         |
//!
//! `members` joins values with single spaces; `parity` is `even`, `odd` or
//! `mixed`.

use std::str::FromStr;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::aliquot::CycleCheck;
use crate::catalog::EntryCheck;
use crate::generators::GeneratorCandidate;
use crate::pairs::{Audit, PairKind};
use crate::{
    gcd, AliquotResult, Error, KnownEntry, Nat, NumberClass, PairVerdict, Result, SearchReport,
    SociableCycle,
};

/// A single arithmetic-function evaluation such as σ(12) = 28.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionValue {
    pub function: String,
    pub n: Nat,
    pub value: Nat,
}

/// Audit flags together with the search they were computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub limit: Nat,
    pub pairs: usize,
    #[serde(flatten)]
    pub audit: Audit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::UnsupportedFormat(s.to_string())),
        }
    }
}

/// Anything that can be exported.
#[derive(Debug, Clone, Copy)]
pub enum Report<'a> {
    Pair(&'a PairVerdict),
    Search(&'a SearchReport),
    Aliquot(&'a AliquotResult),
    Cycles(&'a [SociableCycle]),
    Classification(&'a NumberClass),
    Value(&'a FunctionValue),
    CycleCheck(&'a CycleCheck),
    Audit(&'a AuditReport),
    Candidates(&'a [GeneratorCandidate]),
    Catalog(&'a [KnownEntry]),
    CatalogCheck(&'a [EntryCheck]),
}

pub fn export_report(report: Report<'_>, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => to_json(report),
        Format::Csv => to_csv(report),
    }
}

pub fn parse_json<T: DeserializeOwned>(bytes: &[u8]) -> Result<T> {
    Ok(serde_json::from_slice(bytes)?)
}

fn json<T: Serialize + ?Sized>(value: &T) -> Result<Vec<u8>> {
    Ok(serde_json::to_vec(value)?)
}

fn to_json(report: Report<'_>) -> Result<Vec<u8>> {
    match report {
        Report::Pair(v) => json(v),
        Report::Search(v) => json(v),
        Report::Aliquot(v) => json(v),
        Report::Cycles(v) => json(v),
        Report::Classification(v) => json(v),
        Report::Value(v) => json(v),
        Report::CycleCheck(v) => json(v),
        Report::Audit(v) => json(v),
        Report::Candidates(v) => json(v),
        Report::Catalog(v) => json(v),
        Report::CatalogCheck(v) => json(v),
    }
}

fn parity(m: &Nat, n: &Nat) -> &'static str {
    match (m.is_even(), n.is_even()) {
        (true, true) => "even",
        (false, false) => "odd",
        _ => "mixed",
    }
}

fn join(members: &[Nat]) -> String {
    members
        .iter()
        .map(Nat::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn pair_row(m: &Nat, n: &Nat, kind: PairKind) -> [String; 5] {
    [
        m.to_string(),
        n.to_string(),
        format!("{kind:?}"),
        gcd(m, n).to_string(),
        parity(m, n).to_string(),
    ]
}

const PAIR_HEADER: [&str; 5] = ["m", "n", "kind", "gcd", "parity"];

fn to_csv(report: Report<'_>) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match report {
        Report::Pair(v) => {
            w.write_record(PAIR_HEADER)?;
            w.write_record(pair_row(&v.m, &v.n, v.kind))?;
        }
        Report::Search(v) => {
            w.write_record(PAIR_HEADER)?;
            for p in &v.pairs {
                w.write_record(pair_row(&p.m, &p.n, p.kind))?;
            }
        }
        Report::Candidates(v) => {
            w.write_record(PAIR_HEADER)?;
            for c in v {
                if let Some(p) = c.pair() {
                    let kind = if c.verified() {
                        PairKind::Amicable
                    } else {
                        PairKind::Neither
                    };
                    w.write_record(pair_row(&p.m, &p.n, kind))?;
                }
            }
        }
        Report::Aliquot(v) => {
            w.write_record(["step", "value"])?;
            for (step, value) in v.trajectory.iter().enumerate() {
                w.write_record([step.to_string(), value.to_string()])?;
            }
        }
        Report::Cycles(v) => {
            w.write_record(["length", "members"])?;
            for c in v {
                w.write_record([c.length.to_string(), join(&c.members)])?;
            }
        }
        Report::Classification(v) => {
            w.write_record(["n", "s_value", "class"])?;
            w.write_record([v.n.to_string(), v.s_value.to_string(), format!("{:?}", v.tag)])?;
        }
        Report::Value(v) => {
            w.write_record(["function", "n", "value"])?;
            w.write_record([v.function.clone(), v.n.to_string(), v.value.to_string()])?;
        }
        Report::CycleCheck(v) => {
            w.write_record(["members", "valid", "reason"])?;
            w.write_record([
                join(&v.members),
                v.valid.to_string(),
                v.reason.clone().unwrap_or_default(),
            ])?;
        }
        Report::Audit(v) => {
            w.write_record(["limit", "pairs", "all_even", "min_gcd", "coprime_found"])?;
            w.write_record([
                v.limit.to_string(),
                v.pairs.to_string(),
                v.audit.all_even.to_string(),
                v.audit.min_gcd.as_ref().map(Nat::to_string).unwrap_or_default(),
                v.audit.coprime_found.to_string(),
            ])?;
        }
        Report::Catalog(v) => {
            w.write_record(["kind", "members", "attribution", "source"])?;
            for e in v {
                w.write_record([
                    format!("{:?}", e.kind),
                    join(&e.members),
                    e.attribution.clone(),
                    e.source.clone(),
                ])?;
            }
        }
        Report::CatalogCheck(v) => {
            w.write_record(["kind", "members", "ok", "detail"])?;
            for c in v {
                w.write_record([
                    format!("{:?}", c.entry.kind),
                    join(&c.entry.members),
                    c.ok.to_string(),
                    c.detail.clone(),
                ])?;
            }
        }
    }
    w.into_inner()
        .map_err(|e| Error::Serialization(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{check_amicable, known_catalog, search_amicable, search_betrothed};
    use crate::pairs::{Oracle, PairRecord};
    use proptest::prelude::*;

    #[test]
    fn pair_json_shape() {
        let v = check_amicable(&Nat::from(220u32), &Nat::from(284u32));
        let out = String::from_utf8(export_report(Report::Pair(&v), Format::Json).unwrap()).unwrap();
        assert!(out.starts_with(r#"{"m":"220","n":"284","kind":"Amicable","s_m":"284","s_n":"220""#), "{out}");
    }

    #[test]
    fn empty_search_json() {
        let r = search_amicable(200).unwrap();
        let out = String::from_utf8(export_report(Report::Search(&r), Format::Json).unwrap()).unwrap();
        assert_eq!(
            out,
            r#"{"limit":"200","pairs":[],"all_even":true,"min_gcd":null,"oracle":"Sieve"}"#
        );
    }

    #[test]
    fn search_csv() {
        let r = search_betrothed(200).unwrap();
        let out = String::from_utf8(export_report(Report::Search(&r), Format::Csv).unwrap()).unwrap();
        assert_eq!(out, "m,n,kind,gcd,parity\n48,75,Betrothed,3,mixed\n140,195,Betrothed,5,mixed\n");
    }

    #[test]
    fn catalog_csv_quotes_nothing_unusual() {
        let out = export_report(Report::Catalog(&known_catalog()), Format::Csv).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.lines().any(|l| l == "SociableCycle,12496 14288 15472 14536 14264,Poulet,found 1918; smallest sociable cycle of length 5"));
    }

    #[test]
    fn format_parsing() {
        assert_eq!("JSON".parse::<Format>(), Ok(Format::Json));
        assert_eq!("csv".parse::<Format>(), Ok(Format::Csv));
        assert_eq!("xml".parse::<Format>(), Err(Error::UnsupportedFormat("xml".into())));
    }

    fn arb_nat() -> impl Strategy<Value = Nat> {
        prop_oneof![
            any::<u64>().prop_map(Nat::from),
            (any::<u128>(), 0u32..200).prop_map(|(v, shift)| Nat::from(v) * Nat::pow2(shift)),
        ]
    }

    fn arb_record() -> impl Strategy<Value = PairRecord> {
        (arb_nat(), arb_nat(), arb_nat(), arb_nat(), prop::sample::select(vec![PairKind::Amicable, PairKind::Betrothed]))
            .prop_map(|(m, n, s_m, s_n, kind)| PairRecord { m, n, kind, s_m, s_n })
    }

    fn arb_report() -> impl Strategy<Value = SearchReport> {
        (
            arb_nat(),
            prop::collection::vec(arb_record(), 0..6),
            any::<bool>(),
            prop::option::of(arb_nat()),
            prop::sample::select(vec![Oracle::Sieve, Oracle::Direct]),
        )
            .prop_map(|(limit, pairs, all_even, min_gcd, oracle)| SearchReport { limit, pairs, all_even, min_gcd, oracle })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn search_report_round_trips(report in arb_report()) {
            let bytes = export_report(Report::Search(&report), Format::Json).unwrap();
            let back: SearchReport = parse_json(&bytes).unwrap();
            prop_assert_eq!(&back, &report);
            // Byte-deterministic.
            prop_assert_eq!(export_report(Report::Search(&back), Format::Json).unwrap(), bytes);
        }
    }
}
