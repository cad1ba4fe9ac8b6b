//! Seeded random soundness checks.
//!
//! For each family, draws parameter tuples uniformly from `1..=limit`
//! (redrawing until the gcd side conditions hold), constructs the solution,
//! re-checks the defining equation exactly and round-trips the solution
//! through extraction. The sample stream depends only on the seed and the
//! family, so reports are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arithmetic::{coprime, Nat};
use crate::families::{
    construct_box, construct_general, construct_power, construct_system, extract_box,
    extract_general, extract_power, extract_system, v_without_r_factor, BoxParams, GeneralParams,
    PowerParams, SystemParams,
};
use crate::solution::{is_solution, Equation, Solution};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StressConfig {
    pub seed: u64,
    /// Samples per family.
    pub count: u64,
    /// Largest parameter value drawn.
    pub limit: u64,
    /// Build the system's `v` without its factor `r`.
    pub v_without_r: bool,
}

impl Default for StressConfig {
    fn default() -> Self {
        StressConfig {
            seed: 0,
            count: 1000,
            limit: 50,
            v_without_r: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub family: Equation,
    pub sampled: u64,
    pub passed: u64,
    /// General-k samples with `gcd(x, y) > 1`, where extraction does not apply.
    pub round_trip_skipped: u64,
    /// System samples with `r > 1`, and how many of them failed.
    pub r_above_one: u64,
    pub r_above_one_failed: u64,
    /// System samples with `r = 1`, and how many of them failed.
    pub r_one: u64,
    pub r_one_failed: u64,
    pub first_failure: Option<String>,
}

impl FamilyReport {
    fn new(family: Equation) -> FamilyReport {
        FamilyReport {
            family,
            sampled: 0,
            passed: 0,
            round_trip_skipped: 0,
            r_above_one: 0,
            r_above_one_failed: 0,
            r_one: 0,
            r_one_failed: 0,
            first_failure: None,
        }
    }

    pub fn failed(&self) -> u64 {
        self.sampled - self.passed
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.sampled
    }
}

struct Sampler {
    rng: ChaCha8Rng,
    limit: u64,
}

impl Sampler {
    fn value(&mut self) -> u64 {
        self.rng.gen_range(1..=self.limit)
    }

    fn nat(&mut self) -> Nat {
        Nat::from_u64(self.value()).expect("limit >= 1")
    }

    /// Draws `N` values until every listed pair is coprime.
    fn tuple<const N: usize>(&mut self, pairs: &[(usize, usize)]) -> [Nat; N] {
        loop {
            let t: [Nat; N] = std::array::from_fn(|_| self.nat());
            if pairs.iter().all(|&(a, b)| coprime(&t[a], &t[b])) {
                return t;
            }
        }
    }
}

fn family_stream(family: Equation) -> u64 {
    match family {
        Equation::Power(n) => n as u64,
        Equation::Box => 7,
        Equation::System => 8,
        Equation::GeneralK => 9,
    }
}

enum Outcome {
    Pass,
    PassSkippedRoundTrip,
    Fail(String),
}

fn sample_power(s: &mut Sampler, n: u32) -> Outcome {
    let params = match n {
        2 => {
            let [delta, p1, p2] = s.tuple(&[(1, 2)]);
            PowerParams::Square { delta, p1, p2 }
        }
        3 => {
            let [d, v1, v2, m, l] = s.tuple(&[(1, 2), (3, 4)]);
            PowerParams::Cube { d, v1, v2, m, l }
        }
        4 => {
            let [d, t1, t2, f, g] = s.tuple(&[(1, 2), (3, 4)]);
            PowerParams::Fourth { d, t1, t2, f, g }
        }
        5 => {
            let [q, e1, e2, r1, r2, i1, i2] = s.tuple(&[(1, 2), (3, 4), (5, 6)]);
            PowerParams::Fifth {
                q,
                e1,
                e2,
                r1,
                r2,
                i1,
                i2,
            }
        }
        _ => {
            let [p, e1, e2, n1, n2, j1, j2] = s.tuple(&[(1, 2), (3, 4), (5, 6)]);
            PowerParams::Sixth {
                p,
                e1,
                e2,
                n1,
                n2,
                j1,
                j2,
            }
        }
    };
    let sol = match construct_power(&params) {
        Ok(sol) => sol,
        Err(e) => return Outcome::Fail(format!("{params:?}: {e}")),
    };
    if !is_solution(Equation::Power(n), &sol, None) {
        return Outcome::Fail(format!("{params:?} gives non-solution {sol}"));
    }
    let Solution::Triple { x, y, z } = &sol else {
        unreachable!("power families build triples")
    };
    round_trip(
        &sol,
        extract_power(n, x, y, z).and_then(|(p, _)| construct_power(&p)),
    )
}

fn sample_box(s: &mut Sampler) -> Outcome {
    let params = loop {
        let [d, r1, r2, t, u1, u2] = s.tuple(&[(1, 2), (4, 5)]);
        if coprime(&t, &(&r1 * &r2)) {
            break BoxParams {
                d,
                r1,
                r2,
                t,
                u1,
                u2,
            };
        }
    };
    let sol = match construct_box(&params) {
        Ok(sol) => sol,
        Err(e) => return Outcome::Fail(format!("{params:?}: {e}")),
    };
    if !is_solution(Equation::Box, &sol, None) {
        return Outcome::Fail(format!("{params:?} gives non-solution {sol}"));
    }
    let Solution::Quad { x, y, z, w } = &sol else {
        unreachable!()
    };
    round_trip(
        &sol,
        extract_box(x, y, z, w).and_then(|(p, _)| construct_box(&p)),
    )
}

fn sample_system(s: &mut Sampler, v_without_r: bool) -> (Outcome, bool) {
    let [c, h, i, j, e, f, r, t] = s.tuple(&[(2, 3), (4, 5)]);
    let params = SystemParams {
        c,
        h,
        i,
        j,
        e,
        f,
        r,
        t,
    };
    let r_above_one = !params.r.is_one();
    let mut sol = match construct_system(&params) {
        Ok(sol) => sol,
        Err(e) => return (Outcome::Fail(format!("{params:?}: {e}")), r_above_one),
    };
    if v_without_r {
        if let Solution::Quint { v, .. } = &mut sol {
            *v = v_without_r_factor(&params);
        }
    }
    if !is_solution(Equation::System, &sol, None) {
        return (
            Outcome::Fail(format!("{params:?} gives non-solution {sol}")),
            r_above_one,
        );
    }
    let Solution::Quint { x, y, z, v, w } = &sol else {
        unreachable!()
    };
    let outcome = round_trip(
        &sol,
        extract_system(x, y, z, v, w).and_then(|(p, _)| construct_system(&p)),
    );
    (outcome, r_above_one)
}

fn sample_general(s: &mut Sampler) -> Outcome {
    let n = s.rng.gen_range(1..=6u32);
    let [k1, k2, t1, t2] = s.tuple(&[(0, 1), (2, 3)]);
    let k = &k1 * &k2;
    let params = GeneralParams {
        k1,
        k2,
        t1,
        t2,
        n,
        k: k.clone(),
    };
    let sol = match construct_general(&params) {
        Ok(sol) => sol,
        Err(e) => return Outcome::Fail(format!("{params:?}: {e}")),
    };
    if !is_solution(Equation::GeneralK, &sol, Some((&k, n))) {
        return Outcome::Fail(format!("{params:?} gives non-solution {sol}"));
    }
    let Solution::Triple { x, y, z } = &sol else {
        unreachable!()
    };
    if !coprime(x, y) {
        return Outcome::PassSkippedRoundTrip;
    }
    round_trip(
        &sol,
        extract_general(&k, n, x, y, z).and_then(|p| construct_general(&p)),
    )
}

fn round_trip(sol: &Solution, rebuilt: crate::error::Result<Solution>) -> Outcome {
    match rebuilt {
        Ok(back) if &back == sol => Outcome::Pass,
        Ok(back) => Outcome::Fail(format!("{sol} round-tripped to {back}")),
        Err(e) => Outcome::Fail(format!("{sol}: extraction failed: {e}")),
    }
}

/// Runs `cfg.count` samples for one family.
pub fn stress_family(family: Equation, cfg: &StressConfig) -> FamilyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(family_stream(family));
    let mut sampler = Sampler {
        rng,
        limit: cfg.limit.max(1),
    };
    let mut report = FamilyReport::new(family);
    for _ in 0..cfg.count {
        let (outcome, r_above_one) = match family {
            Equation::Power(n) => (sample_power(&mut sampler, n), None),
            Equation::Box => (sample_box(&mut sampler), None),
            Equation::System => {
                let (o, r) = sample_system(&mut sampler, cfg.v_without_r);
                (o, Some(r))
            }
            Equation::GeneralK => (sample_general(&mut sampler), None),
        };
        report.sampled += 1;
        let failed = matches!(outcome, Outcome::Fail(_));
        match outcome {
            Outcome::Pass => report.passed += 1,
            Outcome::PassSkippedRoundTrip => {
                report.passed += 1;
                report.round_trip_skipped += 1;
            }
            Outcome::Fail(msg) => {
                report.first_failure.get_or_insert(msg);
            }
        }
        match r_above_one {
            Some(true) => {
                report.r_above_one += 1;
                report.r_above_one_failed += failed as u64;
            }
            Some(false) => {
                report.r_one += 1;
                report.r_one_failed += failed as u64;
            }
            None => {}
        }
    }
    report
}

/// Runs every family in `families`.
pub fn stress(families: &[Equation], cfg: &StressConfig) -> Vec<FamilyReport> {
    families.iter().map(|&f| stress_family(f, cfg)).collect()
}
