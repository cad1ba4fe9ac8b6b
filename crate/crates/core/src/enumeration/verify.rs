use std::thread;

use serde::Serialize;

use super::{enumerate, EnumConfig, Method, SolutionSet, Target};
use crate::arithmetic::{coprime, Nat};
use crate::error::Result;
use crate::families::{
    construct_box, construct_general, construct_power, construct_system, extract_box,
    extract_general, extract_power, extract_system, replay,
};
use crate::solution::{BoundKind, Equation, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Equal,
    Mismatch,
}

/// Record of a brute-versus-parametric comparison up to a bound.
///
/// Serializes with its keys in declaration order; every number is a
/// decimal string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub equation: Equation,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "opt_decimal"
    )]
    pub k: Option<u64>,
    #[serde(
        skip_serializing_if = "Option::is_none",
        serialize_with = "opt_decimal"
    )]
    pub n: Option<u32>,
    #[serde(serialize_with = "decimal")]
    pub bound: u64,
    pub bound_kind: BoundKind,
    pub method_a: String,
    pub method_b: String,
    #[serde(serialize_with = "decimal")]
    pub count_a: usize,
    #[serde(serialize_with = "decimal")]
    pub count_b: usize,
    /// SHA-256 of the canonical serialization of the method-a set.
    pub digest: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_discrepancy: Option<Solution>,
    pub tool_version: String,
}

fn decimal<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn opt_decimal<S: serde::Serializer, T: std::fmt::Display>(
    v: &Option<T>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_str(v),
        None => s.serialize_none(),
    }
}

/// Smallest element of the symmetric difference of two sorted sets.
fn first_difference(a: &[Solution], b: &[Solution]) -> Option<Solution> {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
            std::cmp::Ordering::Less => return Some(a[i].clone()),
            std::cmp::Ordering::Greater => return Some(b[j].clone()),
        }
    }
    a.get(i).or_else(|| b.get(j)).cloned()
}

/// Extracts, validates and reconstructs one solution. `false` on any failure.
fn round_trips(target: &Target, s: &Solution) -> bool {
    let rebuilt = match (target.equation, s) {
        (Equation::Power(n), Solution::Triple { x, y, z }) => {
            extract_power(n, x, y, z).and_then(|(p, trace)| {
                let via_trace = replay(target.equation, &trace)?;
                Ok((construct_power(&p)?, Some(via_trace)))
            })
        }
        (Equation::Box, Solution::Quad { x, y, z, w }) => {
            extract_box(x, y, z, w).and_then(|(p, trace)| {
                let via_trace = replay(target.equation, &trace)?;
                Ok((construct_box(&p)?, Some(via_trace)))
            })
        }
        (Equation::System, Solution::Quint { x, y, z, v, w }) => extract_system(x, y, z, v, w)
            .and_then(|(p, trace)| {
                let via_trace = replay(target.equation, &trace)?;
                Ok((construct_system(&p)?, Some(via_trace)))
            }),
        (Equation::GeneralK, Solution::Triple { x, y, z }) => {
            // non-coprime solutions are outside the family; the set comparison reports them
            if !coprime(x, y) {
                return true;
            }
            let g = target.general.expect("validated by enumerate");
            let k = Nat::from_u64(g.k).expect("k > 0");
            extract_general(&k, g.n, x, y, z).and_then(|p| Ok((construct_general(&p)?, None)))
        }
        _ => return false,
    };
    match rebuilt {
        Ok((direct, via_trace)) => &direct == s && via_trace.is_none_or(|t| &t == s),
        Err(_) => false,
    }
}

/// First solution (in canonical order) that fails to round-trip.
fn first_round_trip_failure(target: &Target, set: &SolutionSet, jobs: usize) -> Option<Solution> {
    let sols = set.solutions();
    let chunk = sols.len().div_ceil(jobs.max(1)).max(1);
    thread::scope(|scope| {
        let handles: Vec<_> = sols
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().find(|s| !round_trips(target, s)).cloned()))
            .collect();
        handles
            .into_iter()
            .filter_map(|h| h.join().expect("round-trip thread panicked"))
            .min()
    })
}

/// Enumerates `target` both ways up to `bound`, compares the sets, and
/// round-trips every brute-force solution through extraction.
pub fn verify_equivalence(target: &Target, bound: u64, cfg: &EnumConfig) -> Result<Certificate> {
    let a = enumerate(target, bound, Method::Brute, cfg)?;
    let b = enumerate(target, bound, Method::Parametric, cfg)?;
    let first_discrepancy = first_difference(a.solutions(), b.solutions())
        .or_else(|| first_round_trip_failure(target, &a, cfg.jobs));
    Ok(Certificate {
        equation: target.equation,
        k: target.general.map(|g| g.k),
        n: target.general.map(|g| g.n),
        bound,
        bound_kind: a.bound_kind,
        method_a: Method::Brute.to_string(),
        method_b: Method::Parametric.to_string(),
        count_a: a.len(),
        count_b: b.len(),
        digest: a.digest(),
        status: if first_discrepancy.is_none() {
            Status::Equal
        } else {
            Status::Mismatch
        },
        first_discrepancy,
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    })
}
