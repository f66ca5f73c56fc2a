//! Primality testing.
//!
//! Below 2^64 the Miller-Rabin test with the first twelve prime bases is
//! exact: that witness set has no strong pseudoprime under 3.3 · 10^24.
//!
//! Above 2^64 we run Miller-Rabin with the same twelve fixed bases followed by
//! a strong Lucas test with Selfridge's parameters (a BPSW-style combination).
//! No counterexample to BPSW is known, but the answer is reported as
//! [`Primality::ProbablePrime`] rather than [`Primality::Prime`].

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::SMALL_PRIMES;
use crate::Nat;

/// Fixed Miller-Rabin bases. Deterministic for every n < 2^64.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Number of Miller-Rabin rounds run on operands above 2^64, before the
/// strong Lucas test.
pub const BIG_MR_BASES: usize = MR_BASES.len();

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Primality {
    Composite,
    /// Proven prime (deterministic test).
    Prime,
    /// Passed the BPSW-style test above 2^64.
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        !matches!(self, Primality::Composite)
    }

    pub fn is_probabilistic(self) -> bool {
        matches!(self, Primality::ProbablePrime)
    }
}

pub fn is_prime(n: &Nat) -> bool {
    primality(n).is_prime()
}

pub fn primality(n: &Nat) -> Primality {
    if let Some(small) = n.to_u64() {
        return if is_prime_u64(small) {
            Primality::Prime
        } else {
            Primality::Composite
        };
    }
    let n = n.as_biguint();
    if SMALL_PRIMES
        .iter()
        .any(|&p| (n % p).is_zero())
    {
        return Primality::Composite;
    }
    if MR_BASES
        .iter()
        .all(|&a| strong_probable_prime_big(n, &BigUint::from(a)))
        && strong_lucas_probable_prime(n)
    {
        Primality::ProbablePrime
    } else {
        Primality::Composite
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let mut d = n - 1;
    let s = d.trailing_zeros();
    d >>= s;
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Strong Fermat test to base `a` for odd `n > a`.
fn strong_probable_prime_big(n: &BigUint, a: &BigUint) -> bool {
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s as usize;
    let mut x = a.modpow(&d, n);
    if x == one || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol (a / n) for odd positive n, with `a` given as a signed word.
fn jacobi(a: i64, n: &BigUint) -> i32 {
    let mut a = if a >= 0 {
        BigUint::from(a as u64) % n
    } else {
        let r = BigUint::from(a.unsigned_abs()) % n;
        if r.is_zero() {
            r
        } else {
            n - r
        }
    };
    let mut n = n.clone();
    let mut result = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            a >>= tz as usize;
            let n_mod_8 = (&n % 8u32).to_u32().unwrap_or(0);
            if tz % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32() == Some(3) && (&n % 4u32).to_u32() == Some(3) {
            result = -result;
        }
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn sub_mod(a: &BigUint, b: &BigUint, n: &BigUint) -> BigUint {
    let b = b % n;
    if a >= &b {
        a - &b
    } else {
        a + n - &b
    }
}

/// x / 2 mod n, for odd n and x < n.
fn half_mod(x: BigUint, n: &BigUint) -> BigUint {
    if x.is_even() {
        x >> 1usize
    } else {
        (x + n) >> 1usize
    }
}

/// Strong Lucas probable-prime test with Selfridge's method A parameters
/// (P = 1, Q = (1 − D) / 4). `n` must be odd and greater than the small-prime
/// table.
fn strong_lucas_probable_prime(n: &BigUint) -> bool {
    let root = n.sqrt();
    if &root * &root == *n {
        return false;
    }

    // D = 5, -7, 9, -11, 13, ...
    let mut d: i64 = 5;
    loop {
        match jacobi(d, n) {
            -1 => break,
            0 => {
                // gcd(D, n) > 1 and n exceeds |D|.
                return false;
            }
            _ => {}
        }
        d = if d > 0 { -(d + 2) } else { -d + 2 };
    }
    let q: i64 = (1 - d) / 4;

    let to_residue = |v: i64| -> BigUint {
        if v >= 0 {
            BigUint::from(v as u64) % n
        } else {
            sub_mod(&BigUint::zero(), &BigUint::from(v.unsigned_abs()), n)
        }
    };
    let d_mod = to_residue(d);
    let q_mod = to_residue(q);
    let two = BigUint::from(2u32);

    let n_plus_1 = n + 1u32;
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let odd = &n_plus_1 >> s as usize;

    // Left-to-right binary evaluation of U_k, V_k and Q^k with P = 1.
    let mut u = BigUint::one();
    let mut v = BigUint::one();
    let mut qk = q_mod.clone();
    let bits = odd.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v) % n;
        v = sub_mod(&((&v * &v) % n), &((&two * &qk) % n), n);
        qk = (&qk * &qk) % n;
        if odd.bit(i) {
            let new_u = half_mod((&u + &v) % n, n);
            let new_v = half_mod(((&d_mod * &u) + &v) % n, n);
            u = new_u;
            v = new_v;
            qk = (&qk * &q_mod) % n;
        }
    }

    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = sub_mod(&((&v * &v) % n), &((&two * &qk) % n), n);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk) % n;
    }
    false
}
