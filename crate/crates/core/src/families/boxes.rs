//! `xyz = w²`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{require_coprime, serialize_named, take_fields, ExtractionTrace, NamedParams};
use crate::arithmetic::{exact_div, gcd, Nat};
use crate::decomp::{reduce_box, split_scaled_power};
use crate::error::{Error, Result};
use crate::solution::Solution;

/// `x = d·r1²·u1`, `y = d·r2²·u2`, `z = t²·u1·u2`, `w = d·r1·r2·t·u1·u2`.
///
/// Side conditions: `gcd(r1, r2) = gcd(u1, u2) = gcd(t, r1·r2) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoxParams {
    pub d: Nat,
    pub r1: Nat,
    pub r2: Nat,
    pub t: Nat,
    pub u1: Nat,
    pub u2: Nat,
}

impl BoxParams {
    pub const FIELDS: [&'static str; 6] = ["d", "r1", "r2", "t", "u1", "u2"];

    pub fn from_named(map: BTreeMap<String, Nat>) -> Result<BoxParams> {
        let [d, r1, r2, t, u1, u2] = take_fields(map, Self::FIELDS)?;
        Ok(BoxParams {
            d,
            r1,
            r2,
            t,
            u1,
            u2,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let r = &self.r1 * &self.r2;
        require_coprime(&[
            ("r1", &self.r1, "r2", &self.r2),
            ("u1", &self.u1, "u2", &self.u2),
            ("t", &self.t, "r1·r2", &r),
        ])
    }
}

impl NamedParams for BoxParams {
    fn field_names(&self) -> &'static [&'static str] {
        &Self::FIELDS
    }

    fn values(&self) -> Vec<&Nat> {
        vec![&self.d, &self.r1, &self.r2, &self.t, &self.u1, &self.u2]
    }
}

impl Serialize for BoxParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_named(self, s)
    }
}

pub fn construct_box(params: &BoxParams) -> Result<Solution> {
    params.validate()?;
    let BoxParams {
        d,
        r1,
        r2,
        t,
        u1,
        u2,
    } = params;
    let u = u1 * u2;
    Ok(Solution::quad(
        &(d * &r1.pow(2)) * u1,
        &(d * &r2.pow(2)) * u2,
        &t.pow(2) * &u,
        Nat::product([d, r1, r2, t, &u]),
    ))
}

/// Recovers canonical parameters of a solution of `xyz = w²`.
pub fn extract_box(x: &Nat, y: &Nat, z: &Nat, w: &Nat) -> Result<(BoxParams, ExtractionTrace)> {
    if &(x * y) * z != w.pow(2) {
        return Err(Error::NotASolution(format!("{x}·{y}·{z} != {w}²")));
    }
    let mut trace = ExtractionTrace::default();
    let red = reduce_box(x, y, z, w, 2).map_err(|e| e.into_contract("gcd reduction"))?;
    trace.record("delta", &red.delta);
    trace.record("X", &red.x_cof);
    trace.record("Y", &red.y_cof);
    trace.record("d", &red.d);
    trace.record("W", &red.w_cof);
    trace.record("v", &red.v);
    trace.record("D", &red.residual);
    if !red.v.is_one() || !red.residual.is_one() {
        return Err(Error::InternalContractViolation(format!(
            "square case must force D = v = 1, got D = {}, v = {}",
            red.residual, red.v
        )));
    }
    // X·Y·z = W²
    let p = gcd(z, &red.w_cof);
    let t = exact_div(z, &p).map_err(|e| e.into_contract("t = z/p"))?;
    let r = exact_div(&red.w_cof, &p).map_err(|e| e.into_contract("r = W/p"))?;
    trace.record("p", &p);
    trace.record("t", &t);
    trace.record("r", &r);
    // X·Y·t = r²·p with gcd(t, r) = 1, so t | p.
    let u = exact_div(&p, &t).map_err(|e| e.into_contract("u = p/t"))?;
    trace.record("u", &u);
    // X·Y = u·r²
    let split = split_scaled_power(&red.x_cof, &red.y_cof, &u, &r, 2)
        .map_err(|e| e.into_contract("X·Y = u·r² split"))?;
    trace.record("u1", &split.a_coeff);
    trace.record("u2", &split.b_coeff);
    trace.record("r1", &split.a_root);
    trace.record("r2", &split.b_root);
    Ok((
        BoxParams {
            d: red.d,
            r1: split.a_root,
            r2: split.b_root,
            t,
            u1: split.a_coeff,
            u2: split.b_coeff,
        },
        trace,
    ))
}
