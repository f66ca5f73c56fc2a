//! Computational toolkit for amicable numbers and their relatives.
//!
//! The crate is organized bottom-up:
//!
//! - [`numeric`]: gcd, primality (deterministic below 2^64, BPSW above) and
//!   factorization (trial division plus Pollard rho with Brent's cycle finding).
//! - [`divisor`]: the divisor sum σ(n), the aliquot sum s(n) = σ(n) − n, a dense
//!   additive divisor-sum sieve and the abundant/perfect/deficient split.
//! - [`pairs`]: amicable and betrothed predicates, exhaustive searches below a
//!   bound, and the parity/coprimality audits over search results.
//! - [`aliquot`]: aliquot-sequence iteration and sociable-cycle detection.
//! - [`generators`]: Thābit ibn Qurra's rule, Euler's generalized rule and the
//!   Borho-Hoffmann breeding construction, each gated on primality and checked
//!   through σ(M) = σ(N) = M + N.
//! - [`catalog`]: the built-in list of classical results and its self-test.
//! - [`export`]: deterministic JSON and CSV serialization of every report type.
//!
//! All public integers are [`Nat`], an arbitrary-precision unsigned integer.
//! Hot paths (sieve, search) run in native `u64` and promote only when needed.

pub mod aliquot;
pub mod catalog;
pub mod divisor;
mod error;
pub mod export;
pub mod generators;
mod nat;
pub mod numeric;
pub mod pairs;

pub use aliquot::{
    aliquot_sequence, find_cycles, find_cycles_with, verify_cycle, AliquotOutcome, AliquotResult,
    CycleCheck, CycleDefect, SociableCycle,
};
pub use catalog::{known_catalog, self_test, verify_entry, EntryCheck, EntryKind, KnownEntry};
pub use divisor::{
    aliquot_s, build_sieve, build_sieve_with, classify, sigma, sigma_brute, Abundance,
    NumberClass, SieveConfig, SieveTable,
};
pub use error::{Error, Result};
pub use export::{export_report, parse_json, AuditReport, Format, FunctionValue, Report};
pub use generators::{
    borho_candidate, borho_structure_check, euler_candidate, euler_identity_check,
    thabit_candidate, thabit_identity_check, thabit_sweep, verify_pair_by_sigma, BorhoCandidate,
    BorhoHypothesis, EulerCandidate, GeneratedPair, GeneratorCandidate, ThabitCandidate,
};
pub use nat::Nat;
pub use numeric::{factorize, gcd, is_prime, primality, Factorization, Primality};
pub use pairs::{
    audit, check_amicable, check_betrothed, is_amicable_number, search_amicable,
    search_amicable_with, search_betrothed, search_betrothed_with, Audit, Guard, Oracle,
    PairKind, PairRecord, PairVerdict, SearchConfig, SearchReport,
};
