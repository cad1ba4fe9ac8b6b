//! Brute-force oracles.
//!
//! These never touch the parametric families or the decomposition engine:
//! they scan divisors with machine integers and test the defining equations
//! directly.

use super::{anchors_partitioned, widen};
use crate::error::{Error, Result};
use crate::solution::Solution;

/// All divisors of `m` in increasing order, by trial division up to `√m`.
pub fn divisors(m: u128) -> Vec<u128> {
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1u128;
    while d * d <= m {
        if m.is_multiple_of(d) {
            low.push(d);
            if d * d != m {
                high.push(m / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

fn checked_scaled_power(k: u64, z: u64, n: u32) -> Result<u128> {
    (z as u128)
        .checked_pow(n)
        .and_then(|p| p.checked_mul(k as u128))
        .ok_or_else(|| Error::InvalidInput(format!("{k}·{z}^{n} exceeds 128 bits")))
}

fn triple(x: u128, y: u128, z: u64) -> Solution {
    Solution::triple(widen(x), widen(y), widen(z as u128))
}

/// Every `(x, y, z)` with `xy = k·zⁿ` and `z ≤ z_max`.
pub fn scaled_power(k: u64, n: u32, z_max: u64, jobs: usize) -> Result<Vec<Solution>> {
    checked_scaled_power(k, z_max, n)?;
    anchors_partitioned(z_max, jobs, |z| {
        let m = checked_scaled_power(k, z, n).expect("checked at z_max");
        divisors(m)
            .into_iter()
            .map(|x| triple(x, m / x, z))
            .collect()
    })
}

/// Every `(x, y, z, w)` with `xyz = w²` and `w ≤ w_max`.
pub fn boxes(w_max: u64, jobs: usize) -> Result<Vec<Solution>> {
    anchors_partitioned(w_max, jobs, |w| {
        let m = (w as u128) * (w as u128);
        let all = divisors(m);
        let mut out = Vec::new();
        for &x in &all {
            let rest = m / x;
            for &y in all.iter().take_while(|&&y| y <= rest) {
                if rest.is_multiple_of(y) {
                    out.push(Solution::quad(
                        widen(x),
                        widen(y),
                        widen(rest / y),
                        widen(w as u128),
                    ));
                }
            }
        }
        out
    })
}

fn exact_sqrt(m: u64) -> Option<u64> {
    let r = m.isqrt();
    (r * r == m).then_some(r)
}

/// Every `(x, y, z, v, w)` with `xy = v²`, `yz = w²` and `x, y, z ≤ coord_max`.
pub fn system(coord_max: u64, jobs: usize) -> Result<Vec<Solution>> {
    if coord_max > u32::MAX as u64 {
        return Err(Error::InvalidInput(format!(
            "coordinate bound {coord_max} exceeds 32 bits"
        )));
    }
    anchors_partitioned(coord_max, jobs, |y| {
        // partners of y: every c ≤ coord_max with y·c a square
        let partners: Vec<(u64, u64)> = (1..=coord_max)
            .filter_map(|c| exact_sqrt(y * c).map(|r| (c, r)))
            .collect();
        let mut out = Vec::new();
        for &(x, v) in &partners {
            for &(z, w) in &partners {
                out.push(Solution::quint(
                    widen(x as u128),
                    widen(y as u128),
                    widen(z as u128),
                    widen(v as u128),
                    widen(w as u128),
                ));
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_sorted_and_complete() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert_eq!(divisors(13), vec![1, 13]);
    }
}
