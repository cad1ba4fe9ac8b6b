//! Equation identifiers and solution tuples.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arithmetic::Nat;
use crate::error::{Error, Result};

/// One of the equations this crate parametrizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Equation {
    /// `xy = zⁿ`, `2 ≤ n ≤ 6`.
    Power(u32),
    /// `xyz = w²`.
    Box,
    /// `xy = v²` and `yz = w²`.
    System,
    /// `xy = k·zⁿ`; `k` and `n` travel separately.
    GeneralK,
}

impl Equation {
    pub fn power(n: u32) -> Result<Equation> {
        if !(2..=6).contains(&n) {
            return Err(Error::InvalidInput(format!(
                "xy = z^n is parametrized for 2 <= n <= 6, got n = {n}"
            )));
        }
        Ok(Equation::Power(n))
    }

    pub fn all_families() -> [Equation; 8] {
        [
            Equation::Power(2),
            Equation::Power(3),
            Equation::Power(4),
            Equation::Power(5),
            Equation::Power(6),
            Equation::Box,
            Equation::System,
            Equation::GeneralK,
        ]
    }

    /// Names of the tuple fields, in tuple order.
    pub fn fields(&self) -> &'static [&'static str] {
        match self {
            Equation::Power(_) | Equation::GeneralK => &["x", "y", "z"],
            Equation::Box => &["x", "y", "z", "w"],
            Equation::System => &["x", "y", "z", "v", "w"],
        }
    }

    pub fn bound_kind(&self) -> BoundKind {
        match self {
            Equation::Power(_) | Equation::GeneralK => BoundKind::ZMax,
            Equation::Box => BoundKind::WMax,
            Equation::System => BoundKind::CoordinateMax,
        }
    }

    /// What a solution looks like geometrically, used in summaries.
    pub fn shape_label(&self) -> &'static str {
        match self {
            Equation::Power(_) | Equation::GeneralK => "rectangle",
            Equation::Box => "box",
            Equation::System => "box with square face pairs",
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Equation::Power(n) => write!(f, "pow{n}"),
            Equation::Box => f.write_str("box"),
            Equation::System => f.write_str("system"),
            Equation::GeneralK => f.write_str("general-k"),
        }
    }
}

impl FromStr for Equation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Equation> {
        match s {
            "box" => Ok(Equation::Box),
            "system" => Ok(Equation::System),
            "general-k" => Ok(Equation::GeneralK),
            _ => match s.strip_prefix("pow").and_then(|n| n.parse::<u32>().ok()) {
                Some(n) if (2..=6).contains(&n) => Ok(Equation::Power(n)),
                _ => Err(Error::InvalidInput(format!("unknown equation {s:?}"))),
            },
        }
    }
}

impl Serialize for Equation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which coordinate an enumeration bound applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    #[serde(rename = "z-max")]
    ZMax,
    #[serde(rename = "w-max")]
    WMax,
    #[serde(rename = "coordinate-max")]
    CoordinateMax,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::ZMax => "z-max",
            BoundKind::WMax => "w-max",
            BoundKind::CoordinateMax => "coordinate-max",
        })
    }
}

/// A solution tuple. Ordering is lexicographic by numeric value within a shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Solution {
    /// `(x, y, z)`.
    Triple { x: Nat, y: Nat, z: Nat },
    /// `(x, y, z, w)`.
    Quad { x: Nat, y: Nat, z: Nat, w: Nat },
    /// `(x, y, z, v, w)`.
    Quint {
        x: Nat,
        y: Nat,
        z: Nat,
        v: Nat,
        w: Nat,
    },
}

impl Solution {
    pub fn triple(x: Nat, y: Nat, z: Nat) -> Solution {
        Solution::Triple { x, y, z }
    }

    pub fn quad(x: Nat, y: Nat, z: Nat, w: Nat) -> Solution {
        Solution::Quad { x, y, z, w }
    }

    pub fn quint(x: Nat, y: Nat, z: Nat, v: Nat, w: Nat) -> Solution {
        Solution::Quint { x, y, z, v, w }
    }

    /// Builds the tuple shape `equation` expects from raw values.
    pub fn from_values(equation: Equation, values: Vec<Nat>) -> Result<Solution> {
        let expected = equation.fields().len();
        if values.len() != expected {
            return Err(Error::InvalidInput(format!(
                "{equation} takes {expected} values, got {}",
                values.len()
            )));
        }
        let mut it = values.into_iter();
        let mut next = || it.next().expect("arity checked");
        Ok(match expected {
            3 => Solution::triple(next(), next(), next()),
            4 => Solution::quad(next(), next(), next(), next()),
            _ => Solution::quint(next(), next(), next(), next(), next()),
        })
    }

    pub fn values(&self) -> Vec<&Nat> {
        match self {
            Solution::Triple { x, y, z } => vec![x, y, z],
            Solution::Quad { x, y, z, w } => vec![x, y, z, w],
            Solution::Quint { x, y, z, v, w } => vec![x, y, z, v, w],
        }
    }

    /// Space-separated decimal fields, as used by the digest serialization.
    pub fn canonical_line(&self) -> String {
        self.values()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.canonical_line().replace(' ', ", "))
    }
}

/// Serializes as a flat object keyed by the tuple's field names.
impl Serialize for Solution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let names: &[&str] = match self {
            Solution::Triple { .. } => &["x", "y", "z"],
            Solution::Quad { .. } => &["x", "y", "z", "w"],
            Solution::Quint { .. } => &["x", "y", "z", "v", "w"],
        };
        let values = self.values();
        let mut map = s.serialize_map(Some(values.len()))?;
        for (name, value) in names.iter().zip(values) {
            map.serialize_entry(name, value)?;
        }
        map.end()
    }
}

/// Checks the defining equation. For `GeneralK`, `k` and `n` must be given.
pub fn is_solution(equation: Equation, solution: &Solution, general: Option<(&Nat, u32)>) -> bool {
    match (equation, solution) {
        (Equation::Power(n), Solution::Triple { x, y, z }) => x * y == z.pow(n),
        (Equation::GeneralK, Solution::Triple { x, y, z }) => match general {
            Some((k, n)) => x * y == k * &z.pow(n),
            None => false,
        },
        (Equation::Box, Solution::Quad { x, y, z, w }) => &(x * y) * z == w.pow(2),
        (Equation::System, Solution::Quint { x, y, z, v, w }) => {
            x * y == v.pow(2) && y * z == w.pow(2)
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::nat;

    #[test]
    fn equation_ids_round_trip() {
        for eq in Equation::all_families() {
            assert_eq!(eq.to_string().parse::<Equation>().unwrap(), eq);
        }
        assert!("pow7".parse::<Equation>().is_err());
        assert!("pow1".parse::<Equation>().is_err());
        assert!("cube".parse::<Equation>().is_err());
    }

    #[test]
    fn membership() {
        let s = Solution::triple(nat(4), nat(9), nat(6));
        assert!(is_solution(Equation::Power(2), &s, None));
        assert!(!is_solution(Equation::Power(3), &s, None));
        let s = Solution::triple(nat(2), nat(3), nat(4));
        assert!(!is_solution(Equation::Power(2), &s, None));
        let s = Solution::quad(nat(2), nat(3), nat(6), nat(6));
        assert!(is_solution(Equation::Box, &s, None));
        let s = Solution::quint(nat(1), nat(4), nat(1), nat(2), nat(2));
        assert!(is_solution(Equation::System, &s, None));
        let s = Solution::triple(nat(3), nat(50), nat(5));
        assert!(is_solution(Equation::GeneralK, &s, Some((&nat(6), 2))));
        assert!(!is_solution(Equation::GeneralK, &s, None));
    }

    #[test]
    fn ordering_is_numeric() {
        let a = Solution::triple(nat(2), nat(50), nat(10));
        let b = Solution::triple(nat(10), nat(10), nat(10));
        assert!(a < b);
    }
}
