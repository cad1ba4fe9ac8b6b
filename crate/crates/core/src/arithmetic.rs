//! Exact integer kernel.
//!
//! Every scalar is a [`Nat`], an arbitrary-precision integer that is at least
//! one. The rest of the crate only combines naturals through the operations
//! here: [`gcd`], [`exact_div`] and [`nth_root_exact`], plus multiplication
//! and powers on `Nat` itself.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A strictly positive arbitrary-precision integer.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Nat(BigUint);

impl Nat {
    pub fn one() -> Nat {
        Nat(BigUint::one())
    }

    /// Wraps a `BigUint`, rejecting zero.
    pub fn new(value: BigUint) -> Result<Nat> {
        if value.is_zero() {
            return Err(Error::InvalidInput("0 is not a positive integer".into()));
        }
        Ok(Nat(value))
    }

    pub fn from_u64(value: u64) -> Result<Nat> {
        Nat::new(BigUint::from(value))
    }

    pub fn from_u128(value: u128) -> Result<Nat> {
        Nat::new(BigUint::from(value))
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn pow(&self, exponent: u32) -> Nat {
        Nat(num_traits::pow(self.0.clone(), exponent as usize))
    }

    /// Product of an iterator of naturals; the empty product is one.
    pub fn product<'a, I: IntoIterator<Item = &'a Nat>>(factors: I) -> Nat {
        let mut acc = BigUint::one();
        for f in factors {
            acc *= &f.0;
        }
        Nat(acc)
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

    fn from_str(s: &str) -> Result<Nat> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::InvalidInput(format!(
                "{s:?} is not a positive decimal integer"
            )));
        }
        let value = BigUint::from_str(s).map_err(|e| Error::InvalidInput(format!("{s:?}: {e}")))?;
        Nat::new(value)
    }
}

impl TryFrom<u64> for Nat {
    type Error = Error;

    fn try_from(value: u64) -> Result<Nat> {
        Nat::from_u64(value)
    }
}

impl Mul<&Nat> for &Nat {
    type Output = Nat;

    fn mul(self, rhs: &Nat) -> Nat {
        Nat(&self.0 * &rhs.0)
    }
}

impl Mul<Nat> for Nat {
    type Output = Nat;

    fn mul(self, rhs: Nat) -> Nat {
        Nat(self.0 * rhs.0)
    }
}

impl Mul<&Nat> for Nat {
    type Output = Nat;

    fn mul(self, rhs: &Nat) -> Nat {
        Nat(self.0 * &rhs.0)
    }
}

impl Serialize for Nat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

pub fn gcd(a: &Nat, b: &Nat) -> Nat {
    Nat(a.0.gcd(&b.0))
}

pub fn coprime(a: &Nat, b: &Nat) -> bool {
    gcd(a, b).is_one()
}

/// True when `divisor` divides `value`.
pub fn divides(divisor: &Nat, value: &Nat) -> bool {
    (&value.0 % &divisor.0).is_zero()
}

/// Returns `q` with `q * b == a`, or `NotDivisible`.
pub fn exact_div(a: &Nat, b: &Nat) -> Result<Nat> {
    let (q, r) = a.0.div_rem(&b.0);
    if !r.is_zero() {
        return Err(Error::NotDivisible {
            dividend: a.clone(),
            divisor: b.clone(),
        });
    }
    Ok(Nat(q))
}

/// Largest `r` with `r^n <= a`, found by bisection on `r`.
pub fn floor_root(a: &BigUint, n: u32) -> BigUint {
    assert!(n >= 1, "root degree must be at least 1");
    if n == 1 || a.is_zero() || a.is_one() {
        return a.clone();
    }
    // r^n <= a < 2^bits gives r < 2^(ceil(bits / n)).
    let bits = a.bits();
    let mut lo = BigUint::one();
    let mut hi = BigUint::one() << bits.div_ceil(n as u64);
    // invariant: lo^n <= a < hi^n
    while &hi - &lo > BigUint::one() {
        let mid: BigUint = (&lo + &hi) >> 1;
        if num_traits::pow(mid.clone(), n as usize) <= *a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Returns `r` with `r^n == a`, or `NotPerfectPower`.
pub fn nth_root_exact(a: &Nat, n: u32) -> Result<Nat> {
    if n == 0 {
        return Err(Error::InvalidInput("root degree must be at least 1".into()));
    }
    let r = floor_root(&a.0, n);
    if num_traits::pow(r.clone(), n as usize) != a.0 {
        return Err(Error::NotPerfectPower {
            value: a.clone(),
            degree: n,
        });
    }
    Ok(Nat(r))
}

#[cfg(test)]
pub(crate) fn nat(v: u64) -> Nat {
    Nat::from_u64(v).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&nat(17), &nat(1)), nat(1));
        assert_eq!(gcd(&nat(17), &nat(17)), nat(17));
        assert_eq!(gcd(&nat(12), &nat(18)), nat(6));
    }

    #[test]
    fn exact_div_examples() {
        assert_eq!(exact_div(&nat(36), &nat(12)).unwrap(), nat(3));
        assert_eq!(exact_div(&nat(41), &nat(1)).unwrap(), nat(41));
        assert_eq!(
            exact_div(&nat(5), &nat(2)),
            Err(Error::NotDivisible {
                dividend: nat(5),
                divisor: nat(2)
            })
        );
    }

    #[test]
    fn nth_root_examples() {
        assert_eq!(nth_root_exact(&nat(64), 3).unwrap(), nat(4));
        for n in 1..=9 {
            assert_eq!(nth_root_exact(&nat(1), n).unwrap(), nat(1));
        }
        assert!(matches!(
            nth_root_exact(&nat(50), 2),
            Err(Error::NotPerfectPower { degree: 2, .. })
        ));
        assert!(matches!(
            nth_root_exact(&nat(8), 0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn zero_is_rejected() {
        assert!(matches!(Nat::from_u64(0), Err(Error::InvalidInput(_))));
        assert!(matches!("0".parse::<Nat>(), Err(Error::InvalidInput(_))));
        assert!(matches!("000".parse::<Nat>(), Err(Error::InvalidInput(_))));
        assert!(matches!("-3".parse::<Nat>(), Err(Error::InvalidInput(_))));
        assert!(matches!("".parse::<Nat>(), Err(Error::InvalidInput(_))));
        assert!(matches!("+3".parse::<Nat>(), Err(Error::InvalidInput(_))));
        assert_eq!("0012".parse::<Nat>().unwrap(), nat(12));
    }

    #[test]
    fn huge_roots() {
        let r: Nat = "123456789012345678901234567890".parse().unwrap();
        for n in 1..=7 {
            assert_eq!(nth_root_exact(&r.pow(n), n).unwrap(), r);
        }
        let off = Nat::new(r.pow(5).into_biguint() + 1u32).unwrap();
        assert!(nth_root_exact(&off, 5).is_err());
    }

    // Floor root as the largest r with r^n <= a, by a linear scan.
    fn scan_floor_root(a: u64, n: u32) -> u64 {
        let mut r = 1u64;
        while (r + 1).checked_pow(n).is_some_and(|p| p <= a) {
            r += 1;
        }
        r
    }

    #[test]
    fn floor_root_matches_scan_on_small_values() {
        for n in 1..=6 {
            for a in 1..=5000u64 {
                let expected = scan_floor_root(a, n);
                assert_eq!(floor_root(&BigUint::from(a), n), BigUint::from(expected));
                let exact = nth_root_exact(&nat(a), n);
                assert_eq!(exact.is_ok(), expected.pow(n) == a, "a={a} n={n}");
            }
        }
    }

    proptest! {
        #[test]
        fn gcd_divides_and_leaves_coprime_cofactors(a in 1u64..1_000_000, b in 1u64..1_000_000) {
            let (a, b) = (nat(a), nat(b));
            let g = gcd(&a, &b);
            prop_assert!(divides(&g, &a) && divides(&g, &b));
            let a1 = exact_div(&a, &g).unwrap();
            let b1 = exact_div(&b, &g).unwrap();
            prop_assert!(coprime(&a1, &b1));
        }

        #[test]
        fn exact_div_round_trip(a in 1u64..u32::MAX as u64, b in 1u64..u32::MAX as u64) {
            let (a, b) = (nat(a), nat(b));
            prop_assert_eq!(exact_div(&(&a * &b), &b).unwrap(), a);
        }

        #[test]
        fn nth_root_round_trip(r in 1u64..1u64 << 40, n in 1u32..=6) {
            let r = nat(r);
            prop_assert_eq!(nth_root_exact(&r.pow(n), n).unwrap(), r);
        }

        #[test]
        fn floor_root_agrees_with_newton(a in 1u128..u128::MAX, n in 1u32..=6) {
            let a = BigUint::from(a);
            prop_assert_eq!(floor_root(&a, n), a.nth_root(n));
        }
    }
}
