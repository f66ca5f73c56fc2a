//! Factorization: trial division through the small-prime table, then Pollard
//! rho with Brent's cycle detection on whatever cofactor is left, recursing
//! until every piece is prime.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::primality::{is_prime_u64, mul_mod_u64};
use super::{gcd_u64, is_prime, SMALL_PRIMES};
use crate::{Error, Nat, Result};

/// Canonical prime-power decomposition. Primes are strictly increasing and
/// the product of `prime^exponent` over all factors equals `value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    factors: Vec<(Nat, u32)>,
    value: Nat,
}

impl Factorization {
    pub fn factors(&self) -> &[(Nat, u32)] {
        &self.factors
    }

    pub fn value(&self) -> &Nat {
        &self.value
    }

    /// Product of the prime powers, recomputed from the factor list.
    pub fn reconstruct(&self) -> Nat {
        self.factors.iter().map(|(p, e)| p.pow(*e)).product()
    }

    /// σ of the factored value: the product over pᵉ of 1 + p + … + pᵉ, each
    /// term built by multiply-accumulate.
    pub fn sigma(&self) -> Nat {
        self.factors
            .iter()
            .map(|(p, e)| {
                let p = p.as_biguint();
                let mut term = BigUint::one();
                for _ in 0..*e {
                    term = term * p + 1u32;
                }
                Nat::from(term)
            })
            .product()
    }

    fn from_map(map: BTreeMap<Nat, u32>, value: Nat) -> Self {
        Factorization {
            factors: map.into_iter().collect(),
            value,
        }
    }
}

pub fn factorize(n: &Nat) -> Result<Factorization> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    if let Some(small) = n.to_u64() {
        let factors = factor_u64(small)
            .into_iter()
            .map(|(p, e)| (Nat::from(p), e))
            .collect();
        return Ok(Factorization {
            factors,
            value: n.clone(),
        });
    }

    let mut map = BTreeMap::new();
    let mut rest = n.as_biguint().clone();
    for &p in &SMALL_PRIMES {
        let mut e = 0;
        while (&rest % p).is_zero() {
            rest /= p;
            e += 1;
        }
        if e > 0 {
            map.insert(Nat::from(p), e);
        }
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Ok(small) = u64::try_from(&m) {
            for (p, e) in factor_u64(small) {
                *map.entry(Nat::from(p)).or_insert(0) += e;
            }
            continue;
        }
        let nat = Nat::from(m.clone());
        if is_prime(&nat) {
            *map.entry(nat).or_insert(0) += 1;
            continue;
        }
        let d = rho_big(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    Ok(Factorization::from_map(map, n.clone()))
}

/// Prime factors of `n ≥ 1` with multiplicities, ascending.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factor_u64 requires a positive input");
    let mut out = Vec::new();
    for &p in &SMALL_PRIMES {
        if p * p > n {
            break;
        }
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    if n == 1 {
        return out;
    }
    const LAST: u64 = SMALL_PRIMES[SMALL_PRIMES.len() - 1];
    if n < LAST * LAST {
        out.push((n, 1));
        return out;
    }

    let mut map: BTreeMap<u64, u32> = out.into_iter().collect();
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *map.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = rho_u64(m);
        stack.push(m / d);
        stack.push(d);
    }
    map.into_iter().collect()
}

/// A nontrivial divisor of the odd composite `n`.
fn rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    // Perfect squares make rho slow to separate; catch them directly.
    let r = (n as f64).sqrt() as u64;
    for c in r.saturating_sub(1)..=r + 1 {
        if c > 1 && c.checked_mul(c) == Some(n) {
            return c;
        }
    }
    (1..)
        .find_map(|c| brent_u64(n, c))
        .expect("rho always finds a factor of a composite")
}

fn brent_u64(n: u64, c: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |x: u64| (mul_mod_u64(x, x, n) + c) % n;
    let (mut y, mut r, mut q, mut g) = (2u64, 1u64, 1u64, 1u64);
    let mut x = y;
    let mut ys = y;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod_u64(q, x.abs_diff(y), n);
            }
            g = gcd_u64(q, n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        // The batch overshot; replay it one step at a time.
        loop {
            ys = f(ys);
            g = gcd_u64(x.abs_diff(ys), n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

fn rho_big(n: &BigUint) -> BigUint {
    if n.is_even() {
        return BigUint::from(2u32);
    }
    let root = num_integer::Roots::sqrt(n);
    if &root * &root == *n {
        return root;
    }
    (1u32..)
        .find_map(|c| brent_big(n, &BigUint::from(c)))
        .expect("rho always finds a factor of a composite")
}

fn brent_big(n: &BigUint, c: &BigUint) -> Option<BigUint> {
    const BATCH: u64 = 128;
    let f = |x: &BigUint| (x * x + c) % n;
    let abs_diff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = one.clone();
    let mut g = one.clone();
    let mut r = 1u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = f(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            for _ in 0..BATCH.min(r - k) {
                y = f(&y);
                q = (q * abs_diff(&x, &y)) % n;
            }
            g = q.gcd(n);
            k += BATCH;
        }
        r *= 2;
    }
    if &g == n {
        loop {
            ys = f(&ys);
            g = abs_diff(&x, &ys).gcd(n);
            if g > one {
                break;
            }
        }
    }
    (&g != n).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(f: &Factorization) -> Vec<(u64, u32)> {
        f.factors()
            .iter()
            .map(|(p, e)| (p.to_u64().unwrap(), *e))
            .collect()
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(pairs(&factorize(&Nat::from(220u32)).unwrap()), [(2, 2), (5, 1), (11, 1)]);
        assert_eq!(pairs(&factorize(&Nat::from(284u32)).unwrap()), [(2, 2), (71, 1)]);
        assert!(factorize(&Nat::one()).unwrap().factors().is_empty());
        assert_eq!(factorize(&Nat::zero()), Err(Error::ZeroInput));
    }

    #[test]
    fn reconstructs_every_value_up_to_100k() {
        for n in 1..=100_000u64 {
            let f = factorize(&Nat::from(n)).unwrap();
            assert_eq!(f.reconstruct(), n);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors().iter().all(|(p, e)| *e > 0 && is_prime(p)));
        }
    }

    #[test]
    fn factors_large_word_sized_semiprimes() {
        let p = 4_294_967_291u64; // largest prime below 2^32
        let q = 4_294_967_279u64;
        assert_eq!(factor_u64(p * q), vec![(q, 1), (p, 1)]);
        assert_eq!(factor_u64(p * p), vec![(p, 2)]);
        assert_eq!(factor_u64(1_000_003 * 1_000_033 * 1_000_037), vec![(1_000_003, 1), (1_000_033, 1), (1_000_037, 1)]);
    }

    #[test]
    fn factors_beyond_machine_width() {
        // 2^67 − 1 = 193707721 · 761838257287
        let m67 = Nat::pow2(67).checked_sub(&Nat::one()).unwrap();
        let f = factorize(&m67).unwrap();
        assert_eq!(pairs(&f), [(193_707_721, 1), (761_838_257_287, 1)]);

        let composite = Nat::pow2(70) * Nat::from(1_000_003u64).pow(2) * 4_294_967_291u64;
        let f = factorize(&composite).unwrap();
        assert_eq!(f.reconstruct(), composite);
        assert_eq!(pairs(&f), [(2, 70), (1_000_003, 2), (4_294_967_291, 1)]);
    }

    #[test]
    fn sigma_from_factorization() {
        assert_eq!(factorize(&Nat::from(12u32)).unwrap().sigma(), 28u32);
        assert_eq!(factorize(&Nat::one()).unwrap().sigma(), 1u32);
    }
}
