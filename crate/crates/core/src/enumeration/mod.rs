//! Exhaustive enumeration and equivalence certificates.
//!
//! Each equation can be enumerated two ways up to a bound: by a brute-force
//! oracle that scans divisors and tests the equation directly
//! ([`Method::Brute`]), and by sweeping the parametric family
//! ([`Method::Parametric`]). Completeness of a family up to the bound is the
//! statement that both produce the same [`SolutionSet`];
//! [`verify_equivalence`] checks it and issues a [`Certificate`].

mod brute;
mod counting;
mod parametric;
mod verify;

use std::fmt;
use std::str::FromStr;
use std::thread;

use sha2::{Digest, Sha256};

use crate::arithmetic::Nat;
use crate::error::{Error, Result};
use crate::solution::{BoundKind, Equation, Solution};

pub use brute::divisors;
pub use counting::{factorize, system_count, tau3_square, tau_power, tau_scaled_power};
pub use verify::{verify_equivalence, Certificate, Status};

/// Default cap on the number of solutions a single enumeration may emit.
pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Brute,
    Parametric,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Brute => "brute",
            Method::Parametric => "parametric",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s {
            "brute" => Ok(Method::Brute),
            "parametric" => Ok(Method::Parametric),
            _ => Err(Error::InvalidInput(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumConfig {
    /// Maximum number of solutions to emit.
    pub cap: u64,
    /// Worker threads; output never depends on this.
    pub jobs: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig {
            cap: DEFAULT_CAP,
            jobs: 1,
        }
    }
}

/// `k` and `n` of the equation `xy = k·zⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneralTarget {
    pub k: u64,
    pub n: u32,
}

/// What to enumerate: an equation, plus `k` and `n` for general-k.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Target {
    pub equation: Equation,
    pub general: Option<GeneralTarget>,
}

impl Target {
    pub fn new(equation: Equation) -> Target {
        Target {
            equation,
            general: None,
        }
    }

    pub fn general(k: u64, n: u32) -> Target {
        Target {
            equation: Equation::GeneralK,
            general: Some(GeneralTarget { k, n }),
        }
    }

    fn require_general(&self) -> Result<GeneralTarget> {
        let g = self
            .general
            .ok_or_else(|| Error::InvalidInput("general-k requires k and n".into()))?;
        if g.k == 0 || g.n == 0 {
            return Err(Error::InvalidInput("k and n must be positive".into()));
        }
        Ok(g)
    }
}

/// A canonically ordered, duplicate-free set of solutions within a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub equation: Equation,
    pub bound: u64,
    pub bound_kind: BoundKind,
    solutions: Vec<Solution>,
}

impl SolutionSet {
    fn from_unsorted(equation: Equation, bound: u64, mut solutions: Vec<Solution>) -> SolutionSet {
        solutions.sort_unstable();
        solutions.dedup();
        SolutionSet {
            equation,
            bound,
            bound_kind: equation.bound_kind(),
            solutions,
        }
    }

    pub fn solutions(&self) -> &[Solution] {
        &self.solutions
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn contains(&self, s: &Solution) -> bool {
        self.solutions.binary_search(s).is_ok()
    }

    /// One solution per line, fields space-separated, newline-terminated.
    pub fn canonical_serialization(&self) -> String {
        let mut out = String::new();
        for s in &self.solutions {
            out.push_str(&s.canonical_line());
            out.push('\n');
        }
        out
    }

    /// Lowercase hex SHA-256 of [`Self::canonical_serialization`].
    pub fn digest(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_serialization().as_bytes()))
    }
}

impl IntoIterator for SolutionSet {
    type Item = Solution;
    type IntoIter = std::vec::IntoIter<Solution>;

    fn into_iter(self) -> Self::IntoIter {
        self.solutions.into_iter()
    }
}

pub(crate) fn widen(v: u128) -> Nat {
    Nat::from_u128(v).expect("enumerated values are positive")
}

/// Runs `f` on every anchor `1..=max`, split round-robin over `jobs` threads.
pub(crate) fn anchors_partitioned<F>(max: u64, jobs: usize, f: F) -> Result<Vec<Solution>>
where
    F: Fn(u64) -> Vec<Solution> + Sync,
{
    let jobs = jobs.max(1) as u64;
    let parts: Vec<Vec<Solution>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|job| {
                let f = &f;
                scope.spawn(move || {
                    (1..=max)
                        .filter(|a| (a - 1) % jobs == job)
                        .flat_map(f)
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("enumeration thread panicked"))
            .collect()
    });
    Ok(parts.into_iter().flatten().collect())
}

/// Number of solutions at one anchor value: `τ(anchorⁿ)` for `xy = zⁿ`,
/// `τ(k·anchorⁿ)` for general-k, `τ₃(anchor²)` for the box equation.
pub fn count_for_anchor(target: &Target, anchor: u64) -> Result<u128> {
    if anchor == 0 {
        return Err(Error::InvalidInput("anchor must be positive".into()));
    }
    match target.equation {
        Equation::Power(n) => Ok(tau_power(anchor, n)),
        Equation::GeneralK => {
            let g = target.require_general()?;
            Ok(tau_scaled_power(g.k, anchor, g.n))
        }
        Equation::Box => Ok(tau3_square(anchor)),
        Equation::System => Err(Error::InvalidInput(
            "the system has no single anchor coordinate; see system_count".into(),
        )),
    }
}

/// Exact number of solutions within `bound`, from divisor counts alone.
pub fn projected_count(target: &Target, bound: u64) -> Result<u128> {
    match target.equation {
        Equation::System => Ok(system_count(bound)),
        _ => (1..=bound).map(|a| count_for_anchor(target, a)).sum(),
    }
}

fn check_cap(target: &Target, bound: u64, cfg: &EnumConfig) -> Result<()> {
    if bound == 0 {
        return Err(Error::InvalidInput("bound must be at least 1".into()));
    }
    // at least one solution per anchor value, so the bound alone can exceed the cap
    if bound > cfg.cap {
        return Err(Error::BoundTooLarge {
            projected: bound as u128,
            cap: cfg.cap,
        });
    }
    let projected = projected_count(target, bound)?;
    if projected > cfg.cap as u128 {
        return Err(Error::BoundTooLarge {
            projected,
            cap: cfg.cap,
        });
    }
    Ok(())
}

/// Enumerates every solution of `target` within `bound`.
pub fn enumerate(
    target: &Target,
    bound: u64,
    method: Method,
    cfg: &EnumConfig,
) -> Result<SolutionSet> {
    check_cap(target, bound, cfg)?;
    let jobs = cfg.jobs;
    let raw = match (target.equation, method) {
        (Equation::Power(n), Method::Brute) => brute::scaled_power(1, n, bound, jobs)?,
        (Equation::Power(n), Method::Parametric) => parametric::power(n, bound, jobs)?,
        (Equation::GeneralK, m) => {
            let g = target.require_general()?;
            match m {
                Method::Brute => brute::scaled_power(g.k, g.n, bound, jobs)?,
                Method::Parametric => parametric::general(g.k, g.n, bound, jobs)?,
            }
        }
        (Equation::Box, Method::Brute) => brute::boxes(bound, jobs)?,
        (Equation::Box, Method::Parametric) => parametric::boxes(bound, jobs)?,
        (Equation::System, Method::Brute) => brute::system(bound, jobs)?,
        (Equation::System, Method::Parametric) => parametric::system(bound, jobs)?,
    };
    Ok(SolutionSet::from_unsorted(target.equation, bound, raw))
}

/// Solutions of `xy = zⁿ` with `z ≤ z_max`.
pub fn enumerate_power(
    n: u32,
    z_max: u64,
    method: Method,
    cfg: &EnumConfig,
) -> Result<SolutionSet> {
    enumerate(&Target::new(Equation::power(n)?), z_max, method, cfg)
}

/// Solutions of `xyz = w²` with `w ≤ w_max`.
pub fn enumerate_box(w_max: u64, method: Method, cfg: &EnumConfig) -> Result<SolutionSet> {
    enumerate(&Target::new(Equation::Box), w_max, method, cfg)
}

/// Solutions of `xy = v²`, `yz = w²` with `x, y, z ≤ coord_max`.
pub fn enumerate_system(coord_max: u64, method: Method, cfg: &EnumConfig) -> Result<SolutionSet> {
    enumerate(&Target::new(Equation::System), coord_max, method, cfg)
}

/// Solutions of `xy = k·zⁿ` with `z ≤ z_max`.
///
/// The brute set contains every solution; the parametric set only the
/// image of the `(k1, k2, t1, t2)` family, which misses non-coprime ones.
pub fn enumerate_general(
    k: u64,
    n: u32,
    z_max: u64,
    method: Method,
    cfg: &EnumConfig,
) -> Result<SolutionSet> {
    enumerate(&Target::general(k, n), z_max, method, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::nat;

    fn cfg() -> EnumConfig {
        EnumConfig::default()
    }

    fn triples(v: &[(u64, u64, u64)]) -> Vec<Solution> {
        v.iter()
            .map(|&(x, y, z)| Solution::triple(nat(x), nat(y), nat(z)))
            .collect()
    }

    #[test]
    fn power_examples() {
        let s = enumerate_power(2, 2, Method::Brute, &cfg()).unwrap();
        assert_eq!(
            s.solutions(),
            triples(&[(1, 1, 1), (1, 4, 2), (2, 2, 2), (4, 1, 2)])
        );
        for m in [Method::Brute, Method::Parametric] {
            let s = enumerate_power(2, 1, m, &cfg()).unwrap();
            assert_eq!(s.solutions(), triples(&[(1, 1, 1)]));
        }
        assert_eq!(
            enumerate_power(3, 2, Method::Brute, &cfg()).unwrap().len(),
            5
        );
    }

    #[test]
    fn box_examples() {
        for m in [Method::Brute, Method::Parametric] {
            let s = enumerate_box(1, m, &cfg()).unwrap();
            assert_eq!(
                s.solutions(),
                [Solution::quad(nat(1), nat(1), nat(1), nat(1))]
            );
        }
        assert_eq!(enumerate_box(2, Method::Brute, &cfg()).unwrap().len(), 7);
        let s = enumerate_box(6, Method::Brute, &cfg()).unwrap();
        assert!(s.contains(&Solution::quad(nat(2), nat(3), nat(6), nat(6))));
    }

    #[test]
    fn system_examples() {
        let s = enumerate_system(2, Method::Brute, &cfg()).unwrap();
        assert_eq!(
            s.solutions(),
            [
                Solution::quint(nat(1), nat(1), nat(1), nat(1), nat(1)),
                Solution::quint(nat(2), nat(2), nat(2), nat(2), nat(2)),
            ]
        );
        for m in [Method::Brute, Method::Parametric] {
            assert_eq!(enumerate_system(1, m, &cfg()).unwrap().len(), 1);
        }
        let s = enumerate_system(4, Method::Brute, &cfg()).unwrap();
        assert!(s.contains(&Solution::quint(nat(1), nat(4), nat(1), nat(2), nat(2))));
    }

    #[test]
    fn anchor_counts() {
        let pow2 = Target::new(Equation::Power(2));
        assert_eq!(count_for_anchor(&pow2, 6).unwrap(), 9);
        assert_eq!(count_for_anchor(&pow2, 1).unwrap(), 1);
        assert_eq!(count_for_anchor(&Target::new(Equation::Box), 2).unwrap(), 6);
        assert!(count_for_anchor(&Target::new(Equation::System), 2).is_err());
        assert!(count_for_anchor(&Target::new(Equation::GeneralK), 2).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let tight = EnumConfig { cap: 3, jobs: 1 };
        assert_eq!(
            enumerate_power(2, 2, Method::Brute, &tight),
            Err(Error::BoundTooLarge {
                projected: 4,
                cap: 3
            })
        );
        assert!(matches!(
            enumerate_box(10, Method::Parametric, &tight),
            Err(Error::BoundTooLarge { .. })
        ));
        assert!(matches!(
            enumerate_power(2, 0, Method::Brute, &cfg()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn serialization_format() {
        let s = enumerate_power(2, 2, Method::Brute, &cfg()).unwrap();
        assert_eq!(s.canonical_serialization(), "1 1 1\n1 4 2\n2 2 2\n4 1 2\n");
        assert_eq!(s.digest().len(), 64);
        assert!(s
            .digest()
            .bytes()
            .all(|b| b.is_ascii_hexdigit() && !b.is_ascii_uppercase()));
    }

    #[test]
    fn general_brute_includes_non_coprime_solutions() {
        let brute = enumerate_general(1, 2, 2, Method::Brute, &cfg()).unwrap();
        let param = enumerate_general(1, 2, 2, Method::Parametric, &cfg()).unwrap();
        let two = Solution::triple(nat(2), nat(2), nat(2));
        assert!(brute.contains(&two));
        assert!(!param.contains(&two));
        assert!(param.solutions().iter().all(|s| brute.contains(s)));
    }
}
