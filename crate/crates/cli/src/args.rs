use clap::{Args, Parser, Subcommand, ValueEnum};

use amicable::Nat;

#[derive(Debug, Parser)]
#[command(name = "amicable", version, about = "Divisor sums, amicable pairs, aliquot cycles and pair generators")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Split sieves and searches across worker threads. Output is unchanged.
    #[arg(long, global = true)]
    pub parallel: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sum of all divisors of N.
    Sigma { n: Nat },
    /// Sum of the proper divisors of N.
    S { n: Nat },
    /// Abundant, perfect or deficient.
    Classify { n: Nat },
    /// Check whether (M, N) is an amicable pair (or betrothed, with --betrothed).
    CheckPair {
        m: Nat,
        n: Nat,
        #[arg(long)]
        betrothed: bool,
    },
    /// All pairs whose smaller member is at most --max.
    Search {
        #[arg(long = "max")]
        max: u64,
        #[arg(long)]
        betrothed: bool,
        /// Compute each aliquot sum by factorization instead of the sieve.
        #[arg(long)]
        direct: bool,
    },
    /// Iterate s starting from N.
    Aliquot {
        n: Nat,
        #[arg(long, default_value_t = 100)]
        max_steps: usize,
        #[arg(long, default_value = "1000000000000000")]
        ceiling: Nat,
    },
    /// Sociable cycles through a start value ≤ --max.
    Cycles {
        #[arg(long = "max")]
        max: u64,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
    /// Verify a comma-separated list as a sociable cycle.
    CycleVerify {
        #[arg(value_delimiter = ',', required = true)]
        members: Vec<Nat>,
    },
    /// Build candidates from a classical generation rule.
    Generate {
        #[command(subcommand)]
        rule: Rule,
    },
    /// Re-verify every entry of the built-in catalog.
    VerifyKnown,
    /// Parity and coprimality audit of the amicable pairs up to --max.
    Audit {
        #[arg(long = "max")]
        max: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum Rule {
    /// Thābit ibn Qurra's rule, index k ≥ 1 (classical exponent k + 1).
    Thabit(ThabitArgs),
    /// Euler's generalized rule with 1 ≤ m < n.
    Euler {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
    /// Borho-Hoffmann breeding from the breeder (a·u, a).
    Borho {
        #[arg(long)]
        a: Nat,
        #[arg(long)]
        u: Nat,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct ThabitArgs {
    /// A single index.
    #[arg(long)]
    pub k: Option<u32>,
    /// Every index from 1 to this value.
    #[arg(long)]
    pub k_max: Option<u32>,
}
