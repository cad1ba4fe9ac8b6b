//! Parametric solution families: forward constructors and canonical extractors.
//!
//! Every family comes as a pair. `construct_*` maps a parameter tuple that
//! satisfies the family's gcd side conditions to a solution. `extract_*`
//! runs the gcd chain of the family's completeness argument on a solution and
//! returns the parameter tuple it lands on, together with an
//! [`ExtractionTrace`] of every intermediate value it computed.
//!
//! The maps are not injective; "canonical" parameters are simply the ones
//! the extraction chain produces.

mod boxes;
mod general;
mod power;
mod replay;
mod system;

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::arithmetic::{coprime, Nat};
use crate::error::{Error, Result};

pub use boxes::{construct_box, extract_box, BoxParams};
pub use general::{construct_general, extract_general, GeneralParams};
pub use power::{construct_power, extract_power, PowerParams};
pub use replay::replay;
pub use system::{construct_system, extract_system, v_without_r_factor, SystemParams};

/// One recorded intermediate of an extraction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub symbol: &'static str,
    pub value: Nat,
}

/// Ordered ledger of the intermediates computed by an extraction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtractionTrace {
    entries: Vec<TraceEntry>,
}

impl ExtractionTrace {
    pub(crate) fn record(&mut self, symbol: &'static str, value: &Nat) {
        debug_assert!(self.get(symbol).is_none(), "symbol {symbol} recorded twice");
        self.entries.push(TraceEntry {
            symbol,
            value: value.clone(),
        });
    }

    pub fn get(&self, symbol: &str) -> Option<&Nat> {
        self.entries
            .iter()
            .find(|e| e.symbol == symbol)
            .map(|e| &e.value)
    }

    pub fn entries(&self) -> &[TraceEntry] {
        &self.entries
    }

    pub fn symbols(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.symbol).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for ExtractionTrace {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for e in &self.entries {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

/// Fails with `InvalidParams` naming the first non-coprime pair.
pub(crate) fn require_coprime(pairs: &[(&str, &Nat, &str, &Nat)]) -> Result<()> {
    for (an, a, bn, b) in pairs {
        if !coprime(a, b) {
            return Err(Error::InvalidParams(format!(
                "gcd({an}, {bn}) = gcd({a}, {b}) must be 1"
            )));
        }
    }
    Ok(())
}

/// Parameter tuples addressable by field name.
pub trait NamedParams: Sized {
    /// Field names in declaration order.
    fn field_names(&self) -> &'static [&'static str];

    fn values(&self) -> Vec<&Nat>;

    fn named(&self) -> Vec<(&'static str, &Nat)> {
        self.field_names()
            .iter()
            .copied()
            .zip(self.values())
            .collect()
    }
}

/// Pulls every name in `names` out of `map`, rejecting missing or unknown keys.
pub(crate) fn take_fields<const N: usize>(
    mut map: BTreeMap<String, Nat>,
    names: [&str; N],
) -> Result<[Nat; N]> {
    let mut out = Vec::with_capacity(N);
    for name in names {
        match map.remove(name) {
            Some(v) => out.push(v),
            None => {
                return Err(Error::InvalidInput(format!(
                    "missing parameter {name:?} (expected {})",
                    names.join(", ")
                )))
            }
        }
    }
    if let Some(extra) = map.keys().next() {
        return Err(Error::InvalidInput(format!(
            "unknown parameter {extra:?} (expected {})",
            names.join(", ")
        )));
    }
    Ok(out.try_into().expect("length N"))
}

pub(crate) fn serialize_named<S: Serializer, P: NamedParams>(
    params: &P,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let named = params.named();
    let mut map = s.serialize_map(Some(named.len()))?;
    for (k, v) in named {
        map.serialize_entry(k, v)?;
    }
    map.end()
}
