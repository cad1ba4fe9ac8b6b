//! The system `xy = v²`, `yz = w²`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{require_coprime, serialize_named, take_fields, ExtractionTrace, NamedParams};
use crate::arithmetic::{exact_div, gcd, nth_root_exact, Nat};
use crate::error::{Error, Result};
use crate::solution::Solution;

/// `x = c·h·e²·j²·r²`, `y = c·h³·e²·j⁴·i²·f²`, `z = c·h·i²·t²`,
/// `v = c·e²·f·h²·i·j³·r`, `w = c·e·f·t·h²·i²·j²`.
///
/// Side conditions: `gcd(i, j) = 1 = gcd(e, f)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SystemParams {
    pub c: Nat,
    pub h: Nat,
    pub i: Nat,
    pub j: Nat,
    pub e: Nat,
    pub f: Nat,
    pub r: Nat,
    pub t: Nat,
}

impl SystemParams {
    pub const FIELDS: [&'static str; 8] = ["c", "h", "i", "j", "e", "f", "r", "t"];

    pub fn from_named(map: BTreeMap<String, Nat>) -> Result<SystemParams> {
        let [c, h, i, j, e, f, r, t] = take_fields(map, Self::FIELDS)?;
        Ok(SystemParams {
            c,
            h,
            i,
            j,
            e,
            f,
            r,
            t,
        })
    }

    pub fn validate(&self) -> Result<()> {
        require_coprime(&[("i", &self.i, "j", &self.j), ("e", &self.e, "f", &self.f)])
    }
}

impl NamedParams for SystemParams {
    fn field_names(&self) -> &'static [&'static str] {
        &Self::FIELDS
    }

    fn values(&self) -> Vec<&Nat> {
        vec![
            &self.c, &self.h, &self.i, &self.j, &self.e, &self.f, &self.r, &self.t,
        ]
    }
}

impl Serialize for SystemParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_named(self, s)
    }
}

pub fn construct_system(params: &SystemParams) -> Result<Solution> {
    params.validate()?;
    let SystemParams {
        c,
        h,
        i,
        j,
        e,
        f,
        r,
        t,
    } = params;
    let x = Nat::product([c, h, &e.pow(2), &j.pow(2), &r.pow(2)]);
    let y = Nat::product([c, &h.pow(3), &e.pow(2), &j.pow(4), &i.pow(2), &f.pow(2)]);
    let z = Nat::product([c, h, &i.pow(2), &t.pow(2)]);
    let v = v_without_r_factor(params) * r;
    let w = Nat::product([c, e, f, t, &h.pow(2), &i.pow(2), &j.pow(2)]);
    Ok(Solution::quint(x, y, z, v, w))
}

/// `c·i·f·h²·e²·j³`: the `v` formula with the factor `r` left out.
///
/// Only agrees with [`construct_system`] when `r = 1`; for `r > 1` its square
/// is `xy / r²`. Exists to demonstrate that discrepancy.
pub fn v_without_r_factor(params: &SystemParams) -> Nat {
    let SystemParams {
        c, h, i, j, e, f, ..
    } = params;
    Nat::product([c, i, f, &h.pow(2), &e.pow(2), &j.pow(3)])
}

fn square_root(value: &Nat, step: &str) -> Result<Nat> {
    nth_root_exact(value, 2).map_err(|e| e.into_contract(step))
}

fn quotient(a: &Nat, b: &Nat, step: &str) -> Result<Nat> {
    exact_div(a, b).map_err(|e| e.into_contract(step))
}

/// Recovers canonical parameters of a solution of the system.
///
/// Splits each square equation as in the `n = 2` family, then matches the
/// two resulting descriptions of `y` (`a·R² = b·T²`) through `c = gcd(a, b)`.
pub fn extract_system(
    x: &Nat,
    y: &Nat,
    z: &Nat,
    v: &Nat,
    w: &Nat,
) -> Result<(SystemParams, ExtractionTrace)> {
    if x * y != v.pow(2) || y * z != w.pow(2) {
        return Err(Error::NotASolution(format!(
            "({x}, {y}, {z}, {v}, {w}) does not satisfy xy = v², yz = w²"
        )));
    }
    let mut trace = ExtractionTrace::default();

    // xy = v²: x = a·r², y = a·R²
    let a = gcd(x, y);
    let r = square_root(&quotient(x, &a, "x/a")?, "r = √(x/a)")?;
    let big_r = square_root(&quotient(y, &a, "y/a")?, "R = √(y/a)")?;
    trace.record("a", &a);
    trace.record("r", &r);
    trace.record("R", &big_r);
    // yz = w²: z = b·t², y = b·T²
    let b = gcd(y, z);
    let big_t = square_root(&quotient(y, &b, "y/b")?, "T = √(y/b)")?;
    let t = square_root(&quotient(z, &b, "z/b")?, "t = √(z/b)")?;
    trace.record("b", &b);
    trace.record("T", &big_t);
    trace.record("t", &t);
    // a·R² = b·T²
    let c = gcd(&a, &b);
    let a1 = quotient(&a, &c, "a1 = a/c")?;
    let b1 = quotient(&b, &c, "b1 = b/c")?;
    trace.record("c", &c);
    trace.record("a1", &a1);
    trace.record("b1", &b1);
    // a1 | T²
    let k = quotient(&big_t.pow(2), &a1, "k = T²/a1")?;
    trace.record("k", &k);
    // T² = a1·k
    let d = gcd(&a1, &k);
    let e = square_root(&quotient(&a1, &d, "a1/d")?, "e = √(a1/d)")?;
    let f = square_root(&quotient(&k, &d, "k/d")?, "f = √(k/d)")?;
    trace.record("d", &d);
    trace.record("e", &e);
    trace.record("f", &f);
    // R² = b1·d·f²
    let g = quotient(&big_r, &f, "g = R/f")?;
    trace.record("g", &g);
    // g² = b1·d
    let h = gcd(&b1, &d);
    let i = square_root(&quotient(&b1, &h, "b1/h")?, "i = √(b1/h)")?;
    let j = square_root(&quotient(&d, &h, "d/h")?, "j = √(d/h)")?;
    trace.record("h", &h);
    trace.record("i", &i);
    trace.record("j", &j);

    Ok((
        SystemParams {
            c,
            h,
            i,
            j,
            e,
            f,
            r,
            t,
        },
        trace,
    ))
}
