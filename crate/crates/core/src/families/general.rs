//! `xy = k·zⁿ` for a fixed `k`.
//!
//! The family `x = k1·t1ⁿ`, `y = k2·t2ⁿ`, `z = t1·t2` (coprime `t1, t2`,
//! coprime `k1·k2 = k`) always yields solutions, but it only reaches the
//! solutions with `gcd(x, y) = 1`. For `k = 1, n = 2` the solution
//! `(2, 2, 2)` is not in its image: `x = 2 = t1²` has no integer root.
//! [`extract_general`] therefore declines non-coprime inputs with
//! [`Error::NotCoprime`].

use std::collections::BTreeMap;

use serde::Serialize;

use super::{require_coprime, serialize_named, take_fields, NamedParams};
use crate::arithmetic::{gcd, Nat};
use crate::decomp::split_scaled_power;
use crate::error::{Error, Result};
use crate::solution::Solution;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneralParams {
    pub k1: Nat,
    pub k2: Nat,
    pub t1: Nat,
    pub t2: Nat,
    pub n: u32,
    pub k: Nat,
}

impl GeneralParams {
    pub const FIELDS: [&'static str; 4] = ["k1", "k2", "t1", "t2"];

    pub fn from_named(k: Nat, n: u32, map: BTreeMap<String, Nat>) -> Result<GeneralParams> {
        let [k1, k2, t1, t2] = take_fields(map, Self::FIELDS)?;
        Ok(GeneralParams {
            k1,
            k2,
            t1,
            t2,
            n,
            k,
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        require_coprime(&[
            ("t1", &self.t1, "t2", &self.t2),
            ("k1", &self.k1, "k2", &self.k2),
        ])?;
        if &self.k1 * &self.k2 != self.k {
            return Err(Error::InvalidParams(format!(
                "k1·k2 = {}·{} must equal k = {}",
                self.k1, self.k2, self.k
            )));
        }
        Ok(())
    }
}

impl NamedParams for GeneralParams {
    fn field_names(&self) -> &'static [&'static str] {
        &Self::FIELDS
    }

    fn values(&self) -> Vec<&Nat> {
        vec![&self.k1, &self.k2, &self.t1, &self.t2]
    }
}

impl Serialize for GeneralParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_named(self, s)
    }
}

pub fn construct_general(params: &GeneralParams) -> Result<Solution> {
    params.validate()?;
    let GeneralParams {
        k1, k2, t1, t2, n, ..
    } = params;
    Ok(Solution::triple(
        k1 * &t1.pow(*n),
        k2 * &t2.pow(*n),
        t1 * t2,
    ))
}

/// Recovers `(k1, k2, t1, t2)` from a coprime solution of `xy = k·zⁿ`.
pub fn extract_general(k: &Nat, n: u32, x: &Nat, y: &Nat, z: &Nat) -> Result<GeneralParams> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if x * y != k * &z.pow(n) {
        return Err(Error::NotASolution(format!("{x}·{y} != {k}·{z}^{n}")));
    }
    let g = gcd(x, y);
    if !g.is_one() {
        return Err(Error::NotCoprime { gcd: g });
    }
    let split =
        split_scaled_power(x, y, k, z, n).map_err(|e| e.into_contract("x·y = k·zⁿ split"))?;
    Ok(GeneralParams {
        k1: split.a_coeff,
        k2: split.b_coeff,
        t1: split.a_root,
        t2: split.b_root,
        n,
        k: k.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::nat;

    fn params(k1: u64, k2: u64, t1: u64, t2: u64, n: u32, k: u64) -> GeneralParams {
        GeneralParams {
            k1: nat(k1),
            k2: nat(k2),
            t1: nat(t1),
            t2: nat(t2),
            n,
            k: nat(k),
        }
    }

    #[test]
    fn construct_examples() {
        let s = |p| construct_general(&p).unwrap();
        assert_eq!(
            s(params(3, 2, 1, 5, 2, 6)),
            Solution::triple(nat(3), nat(50), nat(5))
        );
        assert_eq!(
            s(params(1, 1, 1, 1, 1, 1)),
            Solution::triple(nat(1), nat(1), nat(1))
        );
        assert_eq!(
            s(params(1, 1, 2, 3, 3, 1)),
            Solution::triple(nat(8), nat(27), nat(6))
        );
    }

    #[test]
    fn construct_rejects_bad_params() {
        for p in [
            params(3, 2, 2, 4, 2, 6),
            params(2, 2, 1, 1, 2, 4),
            params(3, 2, 1, 1, 2, 5),
            params(1, 1, 1, 1, 0, 1),
        ] {
            assert!(matches!(
                construct_general(&p),
                Err(Error::InvalidParams(_))
            ));
        }
    }

    #[test]
    fn extract_examples() {
        let p = extract_general(&nat(6), 2, &nat(3), &nat(50), &nat(5)).unwrap();
        assert_eq!(p, params(3, 2, 1, 5, 2, 6));
        let p = extract_general(&nat(1), 2, &nat(4), &nat(9), &nat(6)).unwrap();
        assert_eq!(p, params(1, 1, 2, 3, 2, 1));
    }

    #[test]
    fn non_coprime_solution_is_declined() {
        assert_eq!(
            extract_general(&nat(1), 2, &nat(2), &nat(2), &nat(2)),
            Err(Error::NotCoprime { gcd: nat(2) })
        );
        assert!(matches!(
            extract_general(&nat(1), 2, &nat(2), &nat(3), &nat(2)),
            Err(Error::NotASolution(_))
        ));
    }
}
