//! `amicable` command-line tool.
//!
//! Exit status: 0 on success, 1 when the mathematical check fails (a non-pair,
//! a broken cycle, a generator that yields no verified pair, a catalog entry
//! that does not re-verify, a coprime pair found by `audit`), 2 on usage or
//! input errors.
//!
//! The sieve memory budget (table entries) defaults to 2^31 and can be
//! overridden with the `AMICABLE_SIEVE_BUDGET` environment variable.

mod args;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use amicable::divisor::{SieveConfig, DEFAULT_MEMORY_BUDGET};
use amicable::pairs::PairKind;
use amicable::{
    aliquot_s, aliquot_sequence, audit, borho_candidate, check_amicable, check_betrothed,
    classify, euler_candidate, export_report, find_cycles_with, known_catalog, search_amicable_with,
    search_betrothed_with, self_test, sigma, thabit_candidate, thabit_sweep, AuditReport,
    CycleCheck, Error, Format, FunctionValue, GeneratorCandidate, Oracle, Report, SearchConfig,
};

use args::{Cli, Command, OutputFormat, Rule};

const BUDGET_VAR: &str = "AMICABLE_SIEVE_BUDGET";

/// Rendered output plus whether the mathematical check succeeded.
struct Outcome {
    body: Vec<u8>,
    success: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(&outcome.body);
            if !outcome.body.ends_with(b"\n") {
                let _ = stdout.write_all(b"\n");
            }
            if outcome.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::OracleMismatch { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn memory_budget() -> Result<u64, Error> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::BadParameter(format!("{BUDGET_VAR} must be a positive integer, got `{v}`"))),
        Err(_) => Ok(DEFAULT_MEMORY_BUDGET),
    }
}

/// Either the text rendering or the exported report, depending on `--format`.
fn emit(format: OutputFormat, report: Report<'_>, text: impl FnOnce() -> String) -> Result<Vec<u8>, Error> {
    match format {
        OutputFormat::Text => Ok(text().into_bytes()),
        OutputFormat::Json => export_report(report, Format::Json),
        OutputFormat::Csv => export_report(report, Format::Csv),
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let format = cli.format;
    let ok = |body| Ok(Outcome { body, success: true });
    let sieve = SieveConfig {
        memory_budget: memory_budget()?,
        parallel: cli.parallel,
    };

    match &cli.command {
        Command::Sigma { n } => {
            let v = FunctionValue { function: "sigma".into(), n: n.clone(), value: sigma(n) };
            ok(emit(format, Report::Value(&v), || v.value.to_string())?)
        }
        Command::S { n } => {
            let v = FunctionValue { function: "s".into(), n: n.clone(), value: aliquot_s(n) };
            ok(emit(format, Report::Value(&v), || v.value.to_string())?)
        }
        Command::Classify { n } => {
            let c = classify(n)?;
            ok(emit(format, Report::Classification(&c), || render::classification(&c))?)
        }
        Command::CheckPair { m, n, betrothed } => {
            let (verdict, want) = if *betrothed {
                (check_betrothed(m, n), PairKind::Betrothed)
            } else {
                (check_amicable(m, n), PairKind::Amicable)
            };
            Ok(Outcome {
                body: emit(format, Report::Pair(&verdict), || render::verdict(&verdict))?,
                success: verdict.kind == want,
            })
        }
        Command::Search { max, betrothed, direct } => {
            let config = SearchConfig {
                oracle: if *direct { Oracle::Direct } else { Oracle::Sieve },
                parallel: cli.parallel,
                memory_budget: sieve.memory_budget,
            };
            let report = if *betrothed {
                search_betrothed_with(*max, &config)?
            } else {
                search_amicable_with(*max, &config)?
            };
            ok(emit(format, Report::Search(&report), || render::search(&report))?)
        }
        Command::Aliquot { n, max_steps, ceiling } => {
            let result = aliquot_sequence(n, *max_steps, ceiling)?;
            ok(emit(format, Report::Aliquot(&result), || render::aliquot(&result))?)
        }
        Command::Cycles { max, max_len } => {
            let cycles = find_cycles_with(*max, *max_len, &sieve)?;
            ok(emit(format, Report::Cycles(&cycles), || render::cycles(&cycles))?)
        }
        Command::CycleVerify { members } => {
            let check = CycleCheck::run(members.clone());
            Ok(Outcome {
                body: emit(format, Report::CycleCheck(&check), || render::cycle_check(&check))?,
                success: check.valid,
            })
        }
        Command::Generate { rule } => {
            let candidates: Vec<GeneratorCandidate> = match rule {
                Rule::Thabit(t) => match (t.k, t.k_max) {
                    (Some(k), _) => vec![GeneratorCandidate::Thabit(thabit_candidate(k)?)],
                    (None, Some(k_max)) => thabit_sweep(k_max, cli.parallel)?
                        .into_iter()
                        .map(GeneratorCandidate::Thabit)
                        .collect(),
                    (None, None) => unreachable!("clap requires --k or --k-max"),
                },
                Rule::Euler { m, n } => vec![GeneratorCandidate::Euler(euler_candidate(*m, *n)?)],
                Rule::Borho { a, u, n } => vec![GeneratorCandidate::Borho(borho_candidate(a, u, *n)?)],
            };
            // A sweep succeeds when it yields at least one verified pair and
            // every pair it built verifies.
            let any_verified = candidates.iter().any(GeneratorCandidate::verified);
            let all_built_verify = candidates
                .iter()
                .all(|c| c.pair().is_none() || c.verified());
            Ok(Outcome {
                body: emit(format, Report::Candidates(&candidates), || render::candidates(&candidates))?,
                success: any_verified && all_built_verify,
            })
        }
        Command::VerifyKnown => {
            let checks = self_test(&known_catalog());
            Ok(Outcome {
                body: emit(format, Report::CatalogCheck(&checks), || render::catalog_checks(&checks))?,
                success: checks.iter().all(|c| c.ok),
            })
        }
        Command::Audit { max } => {
            let config = SearchConfig {
                parallel: cli.parallel,
                memory_budget: sieve.memory_budget,
                ..SearchConfig::default()
            };
            let report = search_amicable_with(*max, &config)?;
            let summary = AuditReport {
                limit: report.limit.clone(),
                pairs: report.pairs.len(),
                audit: audit(&report),
            };
            Ok(Outcome {
                body: emit(format, Report::Audit(&summary), || render::audit(&summary))?,
                success: !summary.audit.coprime_found,
            })
        }
    }
}
