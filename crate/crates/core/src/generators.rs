//! Classical constructions of amicable pairs.
//!
//! Each rule builds its components from small parameters, gates on primality
//! (and, for the breeding construction, on coprimality and an amicable
//! breeder), assembles the pair, and then checks it independently through
//! σ(M) = σ(N) = M + N using factorization in arbitrary precision.
//!
//! | rule            | components                                   | pair                          |
//! |-----------------|----------------------------------------------|-------------------------------|
//! | Thābit, k ≥ 1   | p = 3·2^k − 1, q = 3·2^(k+1) − 1, r = 9·2^(2k+1) − 1 | (2^(k+1)·p·q, 2^(k+1)·r) |
//! | Euler, 1 ≤ m < n | a = 2^(n−m) + 1, p = 2^m·a − 1, q = 2^n·a − 1, r = 2^(n+m)·a² − 1 | (2^n·p·q, 2^n·r) |
//! | Borho-Hoffmann  | t = σ(u), p1 = tⁿ(u+1) − 1, p2 = tⁿ(u+1)(t−u) − 1 | (a·u·tⁿ·p1, a·tⁿ·p2)    |
//!
//! The Thābit index k corresponds to the classical exponent k + 1, which keeps
//! every exponent free of subtraction.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::pairs::PairKind;
use crate::{check_amicable, gcd, primality, sigma, sigma_brute, Error, Nat, Primality, Result};

/// The pair a rule produced, smaller-or-equal ordering as constructed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratedPair {
    pub m: Nat,
    pub n: Nat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThabitCandidate {
    pub k: u32,
    pub p: Nat,
    pub q: Nat,
    pub r: Nat,
    pub p_prime: Primality,
    pub q_prime: Primality,
    pub r_prime: Primality,
    /// Present iff p, q and r are all prime.
    pub pair: Option<GeneratedPair>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerCandidate {
    pub m: u32,
    pub n: u32,
    pub a: Nat,
    pub p: Nat,
    pub q: Nat,
    pub r: Nat,
    pub p_prime: Primality,
    pub q_prime: Primality,
    pub r_prime: Primality,
    pub pair: Option<GeneratedPair>,
    pub verified: bool,
}

/// The seven conditions of the breeding construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BorhoHypothesis {
    /// (a·u, a) is an amicable pair.
    pub breeder_amicable: bool,
    pub t_prime: bool,
    pub p1_prime: bool,
    pub p2_prime: bool,
    pub coprime_au_t: bool,
    pub coprime_au_p1: bool,
    pub coprime_a_p2: bool,
}

impl BorhoHypothesis {
    pub fn holds(&self) -> bool {
        self.breeder_amicable
            && self.t_prime
            && self.p1_prime
            && self.p2_prime
            && self.coprime_au_t
            && self.coprime_au_p1
            && self.coprime_a_p2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BorhoCandidate {
    pub a: Nat,
    pub u: Nat,
    pub n: u32,
    pub t: Nat,
    pub p1: Nat,
    /// Clamped to zero when tⁿ(u+1)(t−u) = 0; see `degenerate_subtraction`.
    pub p2: Nat,
    /// The construction truncated a subtraction. Such candidates are never
    /// primality-gated and never produce a pair.
    pub degenerate_subtraction: bool,
    pub hypothesis: BorhoHypothesis,
    pub pair: Option<GeneratedPair>,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum GeneratorCandidate {
    Thabit(ThabitCandidate),
    Euler(EulerCandidate),
    Borho(BorhoCandidate),
}

impl GeneratorCandidate {
    pub fn pair(&self) -> Option<&GeneratedPair> {
        match self {
            GeneratorCandidate::Thabit(c) => c.pair.as_ref(),
            GeneratorCandidate::Euler(c) => c.pair.as_ref(),
            GeneratorCandidate::Borho(c) => c.pair.as_ref(),
        }
    }

    pub fn verified(&self) -> bool {
        match self {
            GeneratorCandidate::Thabit(c) => c.verified,
            GeneratorCandidate::Euler(c) => c.verified,
            GeneratorCandidate::Borho(c) => c.verified,
        }
    }
}

fn minus_one(x: Nat) -> Nat {
    x.checked_sub(&Nat::one()).expect("operand is at least 1")
}

/// σ(m) = m + n and σ(n) = m + n, through factorization.
pub fn verify_pair_by_sigma(m: &Nat, n: &Nat) -> Result<bool> {
    if m.is_zero() || n.is_zero() {
        return Err(Error::BadParameter("pair members must be positive".into()));
    }
    if m == n {
        return Err(Error::BadParameter("pair members must be distinct".into()));
    }
    let total = m + n;
    Ok(sigma(m) == total && sigma(n) == total)
}

fn thabit_components(k: u32) -> Result<(Nat, Nat, Nat)> {
    if k < 1 {
        return Err(Error::BadParameter("Thābit index k must be at least 1".into()));
    }
    let p = minus_one(Nat::pow2(k) * 3u64);
    let q = minus_one(Nat::pow2(k + 1) * 3u64);
    let r = minus_one(Nat::pow2(2 * k + 1) * 9u64);
    Ok((p, q, r))
}

pub fn thabit_candidate(k: u32) -> Result<ThabitCandidate> {
    let (p, q, r) = thabit_components(k)?;
    let (p_prime, q_prime, r_prime) = (primality(&p), primality(&q), primality(&r));
    let pair = (p_prime.is_prime() && q_prime.is_prime() && r_prime.is_prime()).then(|| {
        let scale = Nat::pow2(k + 1);
        GeneratedPair {
            m: &(&scale * &p) * &q,
            n: &scale * &r,
        }
    });
    let verified = verified(&pair)?;
    Ok(ThabitCandidate {
        k,
        p,
        q,
        r,
        p_prime,
        q_prime,
        r_prime,
        pair,
        verified,
    })
}

/// Candidates for k = 1..=k_max in parameter order.
pub fn thabit_sweep(k_max: u32, parallel: bool) -> Result<Vec<ThabitCandidate>> {
    if parallel {
        (1..=k_max).into_par_iter().map(thabit_candidate).collect()
    } else {
        (1..=k_max).map(thabit_candidate).collect()
    }
}

/// (p+1)(q+1) = r+1 for the Thābit components at index k.
pub fn thabit_identity_check(k: u32) -> Result<bool> {
    let (p, q, r) = thabit_components(k)?;
    Ok((p + 1) * (q + 1) == r + 1)
}

fn euler_components(m: u32, n: u32) -> Result<(Nat, Nat, Nat, Nat)> {
    if m < 1 || m >= n {
        return Err(Error::BadParameter(format!(
            "Euler parameters need 1 ≤ m < n, got m = {m}, n = {n}"
        )));
    }
    let a = Nat::pow2(n - m) + 1;
    let p = minus_one(Nat::pow2(m) * &a);
    let q = minus_one(Nat::pow2(n) * &a);
    let r = minus_one(Nat::pow2(n + m) * &(&a * &a));
    Ok((a, p, q, r))
}

pub fn euler_candidate(m: u32, n: u32) -> Result<EulerCandidate> {
    let (a, p, q, r) = euler_components(m, n)?;
    let (p_prime, q_prime, r_prime) = (primality(&p), primality(&q), primality(&r));
    let pair = (p_prime.is_prime() && q_prime.is_prime() && r_prime.is_prime()).then(|| {
        let scale = Nat::pow2(n);
        GeneratedPair {
            m: &(&scale * &p) * &q,
            n: &scale * &r,
        }
    });
    let verified = verified(&pair)?;
    Ok(EulerCandidate {
        m,
        n,
        a,
        p,
        q,
        r,
        p_prime,
        q_prime,
        r_prime,
        pair,
        verified,
    })
}

pub fn euler_identity_check(m: u32, n: u32) -> Result<bool> {
    let (_, p, q, r) = euler_components(m, n)?;
    Ok((p + 1) * (q + 1) == r + 1)
}

/// Components of the breeding construction before any gating.
struct BorhoComponents {
    t: Nat,
    t_pow: Nat,
    p1: Nat,
    p2: Nat,
    truncated: bool,
    big_m: Nat,
    big_n: Nat,
}

fn borho_components(a: &Nat, u: &Nat, n: u32) -> Result<BorhoComponents> {
    if a.is_zero() || u.is_zero() || n == 0 {
        return Err(Error::BadParameter("a, u and n must all be positive".into()));
    }
    let t = sigma(u);
    let Some(t_minus_u) = t.checked_sub(u) else {
        return Err(Error::DegenerateSubtraction { t, u: u.clone() });
    };
    let t_pow = t.pow(n);
    let p1_plus_1 = &t_pow * &(u + 1);
    let p1 = minus_one(p1_plus_1.clone());
    let (p2, truncated) = (&p1_plus_1 * &t_minus_u).truncating_sub(&Nat::one());
    let big_m = &(&(a * u) * &t_pow) * &p1;
    let big_n = &(a * &t_pow) * &p2;
    Ok(BorhoComponents {
        t,
        t_pow,
        p1,
        p2,
        truncated,
        big_m,
        big_n,
    })
}

pub fn borho_candidate(a: &Nat, u: &Nat, n: u32) -> Result<BorhoCandidate> {
    let c = borho_components(a, u, n)?;
    let au = a * u;
    let mut hypothesis = BorhoHypothesis {
        breeder_amicable: check_amicable(&au, a).kind == PairKind::Amicable,
        coprime_au_t: gcd(&au, &c.t).is_one(),
        coprime_au_p1: gcd(&au, &c.p1).is_one(),
        coprime_a_p2: gcd(a, &c.p2).is_one(),
        ..BorhoHypothesis::default()
    };
    if !c.truncated {
        hypothesis.t_prime = primality(&c.t).is_prime();
        hypothesis.p1_prime = primality(&c.p1).is_prime();
        hypothesis.p2_prime = primality(&c.p2).is_prime();
    }
    let pair = (!c.truncated && hypothesis.holds()).then(|| GeneratedPair {
        m: c.big_m.clone(),
        n: c.big_n.clone(),
    });
    let verified = verified(&pair)?;
    Ok(BorhoCandidate {
        a: a.clone(),
        u: u.clone(),
        n,
        t: c.t,
        p1: c.p1,
        p2: c.p2,
        degenerate_subtraction: c.truncated,
        hypothesis,
        pair,
        verified,
    })
}

/// Recomputes t, tⁿ, p1, p2, M and N over signed integers, independently of
/// the construction path, and checks
/// p1 + 1 = tⁿ(u+1), p2 + 1 = (p1+1)(t−u), M = a·u·tⁿ·p1 and N = a·tⁿ·p2.
///
/// When t = u the exact value of p2 is −1; the construction then stores the
/// clamped value 0 and must have raised its truncation flag.
pub fn borho_structure_check(a: &Nat, u: &Nat, n: u32) -> Result<bool> {
    let c = borho_components(a, u, n)?;
    let int = |x: &Nat| BigInt::from(x.as_biguint().clone());
    let (a_i, u_i) = (int(a), int(u));
    let t_i = int(&sigma_brute(u));
    let mut t_pow_i = BigInt::from(1);
    for _ in 0..n {
        t_pow_i *= &t_i;
    }
    let p1_i: BigInt = &t_pow_i * (&u_i + 1) - 1;
    let p2_i: BigInt = &t_pow_i * (&u_i + 1) * (&t_i - &u_i) - 1;

    let p2_consistent = if p2_i.sign() == num_bigint::Sign::Minus {
        c.truncated && c.p2.is_zero()
    } else {
        !c.truncated && int(&c.p2) == p2_i
    };
    let identities = &p1_i + 1 == &t_pow_i * (&u_i + 1)
        && &p2_i + 1 == (&p1_i + 1) * (&t_i - &u_i)
        && int(&c.big_m) == &a_i * &u_i * &t_pow_i * &p1_i
        && int(&c.big_n) == &a_i * &t_pow_i * int(&c.p2);
    Ok(int(&c.t) == t_i
        && int(&c.t_pow) == t_pow_i
        && int(&c.p1) == p1_i
        && p2_consistent
        && identities)
}

fn verified(pair: &Option<GeneratedPair>) -> Result<bool> {
    match pair {
        Some(pair) => verify_pair_by_sigma(&pair.m, &pair.n),
        None => Ok(false),
    }
}
