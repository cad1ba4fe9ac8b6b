//! Divisor counts by trial-division factorization.

/// Prime factorization of `m` as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Merges two factorizations by adding exponents.
fn merge(a: &[(u64, u32)], b: &[(u64, u32)]) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = a.to_vec();
    for &(p, e) in b {
        match out.iter_mut().find(|(q, _)| *q == p) {
            Some((_, f)) => *f += e,
            None => out.push((p, e)),
        }
    }
    out
}

/// `τ(k·zⁿ)`, the number of ordered pairs `(x, y)` with `xy = k·zⁿ`.
pub fn tau_scaled_power(k: u64, z: u64, n: u32) -> u128 {
    let zf: Vec<(u64, u32)> = factorize(z).into_iter().map(|(p, e)| (p, e * n)).collect();
    merge(&factorize(k), &zf)
        .iter()
        .map(|&(_, e)| e as u128 + 1)
        .product()
}

/// `τ(zⁿ)`.
pub fn tau_power(z: u64, n: u32) -> u128 {
    tau_scaled_power(1, z, n)
}

/// `τ₃(w²)`, the number of ordered triples with product `w²`.
///
/// A prime power `p^a` splits into three ordered factors in `C(a + 2, 2)` ways.
pub fn tau3_square(w: u64) -> u128 {
    factorize(w)
        .iter()
        .map(|&(_, e)| {
            let a = 2 * e as u128;
            (a + 2) * (a + 1) / 2
        })
        .product()
}

pub fn is_squarefree(m: u64) -> bool {
    factorize(m).iter().all(|&(_, e)| e == 1)
}

/// Number of `(x, y, z)` with coordinates `≤ bound` such that `xy` and `yz`
/// are both squares.
///
/// Such triples share one squarefree kernel `s`, and each coordinate is then
/// `s·m²`, so the count is `Σ_s ⌊√(bound/s)⌋³`.
pub fn system_count(bound: u64) -> u128 {
    (1..=bound)
        .filter(|&s| is_squarefree(s))
        .map(|s| ((bound / s).isqrt() as u128).pow(3))
        .sum()
}
