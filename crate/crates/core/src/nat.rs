use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Error;

/// Arbitrary-precision natural number.
///
/// Arithmetic never wraps. Subtraction is only available as
/// [`Nat::checked_sub`] or [`Nat::truncating_sub`] so that every place that
/// could go negative has to say which semantics it wants.
///
/// Serializes as a decimal string so values above 2^53 survive JSON consumers.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nat(BigUint);

impl Nat {
    pub fn zero() -> Self {
        Nat(BigUint::zero())
    }

    pub fn one() -> Self {
        Nat(BigUint::one())
    }

    /// 2^exp.
    pub fn pow2(exp: u32) -> Self {
        Nat(BigUint::one() << exp as usize)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Nat(self.0.pow(exp))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_even(&self) -> bool {
        self.0.is_even()
    }

    pub fn bits(&self) -> u64 {
        self.0.bits()
    }

    /// The value as a `u64`, if it fits.
    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn checked_sub(&self, rhs: &Nat) -> Option<Nat> {
        if rhs.0 > self.0 {
            None
        } else {
            Some(Nat(&self.0 - &rhs.0))
        }
    }

    /// Natural-number subtraction clamped at zero. The flag is `true` when
    /// clamping happened.
    pub fn truncating_sub(&self, rhs: &Nat) -> (Nat, bool) {
        match self.checked_sub(rhs) {
            Some(diff) => (diff, false),
            None => (Nat::zero(), true),
        }
    }

    pub fn divides(&self, n: &Nat) -> bool {
        if self.is_zero() {
            n.is_zero()
        } else {
            (&n.0 % &self.0).is_zero()
        }
    }
}

impl fmt::Display for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Nat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Nat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim().replace('_', "");
        if trimmed.is_empty() || !trimmed.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::ParseNat(s.to_string()));
        }
        BigUint::parse_bytes(trimmed.as_bytes(), 10)
            .map(Nat)
            .ok_or_else(|| Error::ParseNat(s.to_string()))
    }
}

macro_rules! from_primitive {
    ($($t:ty),*) => {
        $(
            impl From<$t> for Nat {
                fn from(v: $t) -> Self {
                    Nat(BigUint::from(v))
                }
            }

            impl PartialEq<$t> for Nat {
                fn eq(&self, other: &$t) -> bool {
                    self.0 == BigUint::from(*other)
                }
            }
        )*
    };
}

from_primitive!(u8, u16, u32, u64, u128, usize);

impl From<BigUint> for Nat {
    fn from(v: BigUint) -> Self {
        Nat(v)
    }
}

impl From<Nat> for BigUint {
    fn from(v: Nat) -> Self {
        v.0
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Nat> for Nat {
            type Output = Nat;
            fn $method(self, rhs: Nat) -> Nat {
                Nat($trait::$method(self.0, rhs.0))
            }
        }

        impl<'a> $trait<&'a Nat> for Nat {
            type Output = Nat;
            fn $method(self, rhs: &'a Nat) -> Nat {
                Nat($trait::$method(self.0, &rhs.0))
            }
        }

        impl<'a> $trait<&'a Nat> for &'a Nat {
            type Output = Nat;
            fn $method(self, rhs: &'a Nat) -> Nat {
                Nat($trait::$method(&self.0, &rhs.0))
            }
        }

        impl $trait<u64> for Nat {
            type Output = Nat;
            fn $method(self, rhs: u64) -> Nat {
                Nat($trait::$method(self.0, rhs))
            }
        }

        impl<'a> $trait<u64> for &'a Nat {
            type Output = Nat;
            fn $method(self, rhs: u64) -> Nat {
                Nat($trait::$method(&self.0, rhs))
            }
        }
    };
}

binop!(Add, add);
binop!(Mul, mul);

impl std::iter::Sum for Nat {
    fn sum<I: Iterator<Item = Nat>>(iter: I) -> Nat {
        iter.fold(Nat::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for Nat {
    fn product<I: Iterator<Item = Nat>>(iter: I) -> Nat {
        iter.fold(Nat::one(), |acc, x| acc * x)
    }
}

impl Serialize for Nat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Nat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimal_only() {
        assert_eq!("220".parse::<Nat>().unwrap(), 220u64);
        assert_eq!("1_000".parse::<Nat>().unwrap(), 1000u64);
        assert!("".parse::<Nat>().is_err());
        assert!("-3".parse::<Nat>().is_err());
        assert!("0x10".parse::<Nat>().is_err());
    }

    #[test]
    fn truncating_sub_flags_clamp() {
        let five = Nat::from(5u8);
        let seven = Nat::from(7u8);
        assert_eq!(five.truncating_sub(&seven), (Nat::zero(), true));
        assert_eq!(seven.truncating_sub(&five), (Nat::from(2u8), false));
    }

    #[test]
    fn serializes_as_decimal_string() {
        let big = Nat::pow2(100);
        let json = serde_json::to_string(&big).unwrap();
        assert_eq!(json, "\"1267650600228229401496703205376\"");
        let back: Nat = serde_json::from_str(&json).unwrap();
        assert_eq!(back, big);
    }
}
