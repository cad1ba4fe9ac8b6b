//! Parametric enumerators: bounded sweeps of each family's parameter space.
//!
//! A family's bound is a set of monomials in its parameters (the `z`
//! formula, the `w` formula, or all three coordinate formulas), each of which
//! must stay `≤ bound`. Since every parameter is at least one, the product of
//! the parameters chosen so far is a lower bound for each monomial, and the
//! sweep stops increasing a parameter as soon as any monomial overshoots.

use std::thread;

use super::widen;
use crate::arithmetic::Nat;
use crate::error::Result;
use crate::families::{
    construct_box, construct_general, construct_power, construct_system, BoxParams, GeneralParams,
    PowerParams, SystemParams,
};
use crate::solution::Solution;

/// Exponent vectors, one per bounded monomial, over `vars` parameters.
struct Sweep<'a> {
    vars: usize,
    monomials: &'a [&'a [u32]],
    bound: u64,
}

impl Sweep<'_> {
    /// Calls `visit` on every tuple within the bound whose first parameter
    /// satisfies `first`, in lexicographic order.
    fn run(&self, first: &dyn Fn(u64) -> bool, visit: &mut dyn FnMut(&[u64])) {
        let mut tuple = vec![1u64; self.vars];
        let partial = vec![1u128; self.monomials.len()];
        self.descend(0, &mut tuple, &partial, first, visit);
    }

    fn descend(
        &self,
        depth: usize,
        tuple: &mut Vec<u64>,
        partial: &[u128],
        first: &dyn Fn(u64) -> bool,
        visit: &mut dyn FnMut(&[u64]),
    ) {
        if depth == self.vars {
            visit(tuple);
            return;
        }
        let bound = self.bound as u128;
        let mut value = 1u64;
        loop {
            let next: Option<Vec<u128>> = self
                .monomials
                .iter()
                .zip(partial)
                .map(|(exps, &acc)| {
                    (value as u128)
                        .checked_pow(exps[depth])
                        .and_then(|p| p.checked_mul(acc))
                        .filter(|&m| m <= bound)
                })
                .collect();
            let Some(next) = next else { break };
            if depth > 0 || first(value) {
                tuple[depth] = value;
                self.descend(depth + 1, tuple, &next, first, visit);
            }
            value += 1;
        }
    }

    /// Runs the sweep on `jobs` threads, splitting on the first parameter.
    fn collect<F>(&self, jobs: usize, build: F) -> Result<Vec<Solution>>
    where
        F: Fn(&[u64]) -> Result<Option<Solution>> + Sync,
    {
        let jobs = jobs.max(1) as u64;
        let parts: Vec<Result<Vec<Solution>>> = thread::scope(|scope| {
            let handles: Vec<_> = (0..jobs)
                .map(|job| {
                    let build = &build;
                    scope.spawn(move || {
                        let mut out = Vec::new();
                        let mut err = None;
                        self.run(&|v| (v - 1) % jobs == job, &mut |t| {
                            if err.is_some() {
                                return;
                            }
                            match build(t) {
                                Ok(Some(s)) => out.push(s),
                                Ok(None) => {}
                                Err(e) => err = Some(e),
                            }
                        });
                        match err {
                            Some(e) => Err(e),
                            None => Ok(out),
                        }
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sweep thread panicked"))
                .collect()
        });
        let mut all = Vec::new();
        for part in parts {
            all.extend(part?);
        }
        Ok(all)
    }
}

fn nats<const N: usize>(t: &[u64]) -> [Nat; N] {
    std::array::from_fn(|i| widen(t[i] as u128))
}

fn coprime_pairs(t: &[u64], pairs: &[(usize, usize)]) -> bool {
    pairs
        .iter()
        .all(|&(a, b)| num_integer::gcd(t[a], t[b]) == 1)
}

/// Images of every valid `PowerParams` tuple with `z ≤ z_max`.
pub fn power(n: u32, z_max: u64, jobs: usize) -> Result<Vec<Solution>> {
    // exponents of each parameter in the z formula, and the coprime pairs
    let (z_exps, pairs): (&[u32], &[(usize, usize)]) = match n {
        2 => (&[1, 1, 1], &[(1, 2)]),
        3 => (&[2, 1, 1, 1, 1], &[(1, 2), (3, 4)]),
        4 => (&[1, 1, 1, 1, 1], &[(1, 2), (3, 4)]),
        5 => (&[2, 1, 1, 1, 1, 1, 1], &[(1, 2), (3, 4), (5, 6)]),
        _ => (&[1, 1, 1, 1, 1, 1, 1], &[(1, 2), (3, 4), (5, 6)]),
    };
    let sweep = Sweep {
        vars: z_exps.len(),
        monomials: &[z_exps],
        bound: z_max,
    };
    sweep.collect(jobs, |t| {
        if !coprime_pairs(t, pairs) {
            return Ok(None);
        }
        let params = match n {
            2 => {
                let [delta, p1, p2] = nats(t);
                PowerParams::Square { delta, p1, p2 }
            }
            3 => {
                let [d, v1, v2, m, l] = nats(t);
                PowerParams::Cube { d, v1, v2, m, l }
            }
            4 => {
                let [d, t1, t2, f, g] = nats(t);
                PowerParams::Fourth { d, t1, t2, f, g }
            }
            5 => {
                let [q, e1, e2, r1, r2, i1, i2] = nats(t);
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
                let [p, e1, e2, n1, n2, j1, j2] = nats(t);
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
        construct_power(&params).map(Some)
    })
}

/// Images of every valid `BoxParams` tuple with `w ≤ w_max`.
pub fn boxes(w_max: u64, jobs: usize) -> Result<Vec<Solution>> {
    let sweep = Sweep {
        vars: 6,
        monomials: &[&[1, 1, 1, 1, 1, 1]],
        bound: w_max,
    };
    sweep.collect(jobs, |t| {
        // d, r1, r2, t, u1, u2
        if !coprime_pairs(t, &[(1, 2), (4, 5)]) || num_integer::gcd(t[3], t[1] * t[2]) != 1 {
            return Ok(None);
        }
        let [d, r1, r2, t, u1, u2] = nats(t);
        construct_box(&BoxParams {
            d,
            r1,
            r2,
            t,
            u1,
            u2,
        })
        .map(Some)
    })
}

/// Images of every valid `SystemParams` tuple with `x, y, z ≤ coord_max`.
pub fn system(coord_max: u64, jobs: usize) -> Result<Vec<Solution>> {
    // parameters: c, h, i, j, e, f, r, t
    let sweep = Sweep {
        vars: 8,
        monomials: &[
            &[1, 1, 0, 2, 2, 0, 2, 0], // x = c·h·e²·j²·r²
            &[1, 3, 2, 4, 2, 2, 0, 0], // y = c·h³·e²·j⁴·i²·f²
            &[1, 1, 2, 0, 0, 0, 0, 2], // z = c·h·i²·t²
        ],
        bound: coord_max,
    };
    sweep.collect(jobs, |t| {
        if !coprime_pairs(t, &[(2, 3), (4, 5)]) {
            return Ok(None);
        }
        let [c, h, i, j, e, f, r, t] = nats(t);
        construct_system(&SystemParams {
            c,
            h,
            i,
            j,
            e,
            f,
            r,
            t,
        })
        .map(Some)
    })
}

/// Images of every valid `GeneralParams` tuple for `k`, `n` with `z ≤ z_max`.
pub fn general(k: u64, n: u32, z_max: u64, jobs: usize) -> Result<Vec<Solution>> {
    let k_nat = widen(k as u128);
    let splits: Vec<(u64, u64)> = (1..=k)
        .filter(|k1| k.is_multiple_of(*k1))
        .map(|k1| (k1, k / k1))
        .filter(|&(a, b)| num_integer::gcd(a, b) == 1)
        .collect();
    // parameters: t1, t2 with z = t1·t2
    let sweep = Sweep {
        vars: 2,
        monomials: &[&[1, 1]],
        bound: z_max,
    };
    let mut out = Vec::new();
    for (k1, k2) in splits {
        out.extend(sweep.collect(jobs, |t| {
            if num_integer::gcd(t[0], t[1]) != 1 {
                return Ok(None);
            }
            let [t1, t2] = nats(t);
            construct_general(&GeneralParams {
                k1: widen(k1 as u128),
                k2: widen(k2 as u128),
                t1,
                t2,
                n,
                k: k_nat.clone(),
            })
            .map(Some)
        })?);
    }
    Ok(out)
}
