//! Constructive decompositions behind every parametrization.
//!
//! Each function follows its argument step by step: take a gcd, divide it
//! out, then take exact roots. Gcds are unique, so every result here is
//! deterministic, and every hypothesis is checked before any step runs.
//!
//! | function | splits |
//! |---|---|
//! | [`split_coprime_power`] | coprime `a·b = cⁿ` into `a = a₁ⁿ`, `b = b₁ⁿ` |
//! | [`split_scaled_power`] | coprime `a·b = k·cⁿ` into `a = d·a₁ⁿ`, `b = K·b₁ⁿ` |
//! | [`reduce_power`] | `xy = zⁿ` into the gcd system `d²XY = Zⁿw^{n-2}`, `w^{n-2} = vd²` |
//! | [`reduce_box`] | `xyz = wⁿ` into the gcd system `d^{n-2} = Dv²`, `XYz = WⁿD` |

use serde::Serialize;

use crate::arithmetic::{coprime, exact_div, gcd, nth_root_exact, Nat};
use crate::error::{Error, Result};

/// `a = a_root^n`, `b = b_root^n` with coprime roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RootSplit {
    pub a_root: Nat,
    pub b_root: Nat,
}

/// `a = a_coeff · a_root^n`, `b = b_coeff · b_root^n`, `a_coeff · b_coeff = k`.
///
/// Both the roots and the coefficients are pairwise coprime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScaledSplit {
    pub a_coeff: Nat,
    pub b_coeff: Nat,
    pub a_root: Nat,
    pub b_root: Nat,
}

/// The gcd chain of a solution of `xy = zⁿ`.
///
/// `x = delta·x_cof`, `y = delta·y_cof`, `z = w·z_cof`, `delta = w·d`, with
/// `gcd(x_cof, y_cof) = 1 = gcd(z_cof, d)`, `d²·x_cof·y_cof = z_cofⁿ·w^{n-2}`
/// and `w^{n-2} = v·d²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerReduction {
    pub delta: Nat,
    pub x_cof: Nat,
    pub y_cof: Nat,
    pub w: Nat,
    pub d: Nat,
    pub z_cof: Nat,
    pub v: Nat,
}

/// The gcd chain of a solution of `xyz = wⁿ`.
///
/// `x = delta·x_cof`, `y = delta·y_cof`, `w = d·w_cof`, `delta = d·v`, with
/// `gcd(x_cof, y_cof) = 1 = gcd(w_cof, v)`, `d^{n-2} = residual·v²` and
/// `x_cof·y_cof·z = w_cofⁿ·residual`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoxReduction {
    pub delta: Nat,
    pub x_cof: Nat,
    pub y_cof: Nat,
    pub d: Nat,
    pub w_cof: Nat,
    pub v: Nat,
    pub residual: Nat,
}

fn require_degree(n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::InvalidInput(format!(
            "exponent must be at least {min}, got {n}"
        )));
    }
    Ok(())
}

/// Splits coprime `a`, `b` with `a·b = cⁿ` into `a = a₁ⁿ`, `b = b₁ⁿ`, `c = a₁b₁`.
pub fn split_coprime_power(a: &Nat, b: &Nat, c: &Nat, n: u32) -> Result<RootSplit> {
    require_degree(n, 1)?;
    if a * b != c.pow(n) {
        return Err(Error::PreconditionViolated(format!("{a}·{b} != {c}^{n}")));
    }
    if !coprime(a, b) {
        return Err(Error::PreconditionViolated(format!("gcd({a}, {b}) != 1")));
    }
    let a_root = nth_root_exact(a, n)?;
    let b_root = nth_root_exact(b, n)?;
    Ok(RootSplit { a_root, b_root })
}

/// Splits coprime `a`, `b` with `a·b = k·cⁿ` into `a = d·a₁ⁿ`, `b = K·b₁ⁿ`.
///
/// `d = gcd(a, k)` and `K = k / d`; `K` must then divide `b`, and the two
/// cofactors left behind are coprime and multiply to `cⁿ`.
pub fn split_scaled_power(a: &Nat, b: &Nat, k: &Nat, c: &Nat, n: u32) -> Result<ScaledSplit> {
    require_degree(n, 1)?;
    if a * b != k * &c.pow(n) {
        return Err(Error::PreconditionViolated(format!(
            "{a}·{b} != {k}·{c}^{n}"
        )));
    }
    if !coprime(a, b) {
        return Err(Error::PreconditionViolated(format!("gcd({a}, {b}) != 1")));
    }
    let a_coeff = gcd(a, k);
    let a_rest = exact_div(a, &a_coeff)?;
    let b_coeff = exact_div(k, &a_coeff)?;
    let b_rest = exact_div(b, &b_coeff)?;
    let a_root = nth_root_exact(&a_rest, n)?;
    let b_root = nth_root_exact(&b_rest, n)?;
    Ok(ScaledSplit {
        a_coeff,
        b_coeff,
        a_root,
        b_root,
    })
}

/// Reduces a solution of `xy = zⁿ` (`n ≥ 2`) to its gcd chain.
pub fn reduce_power(x: &Nat, y: &Nat, z: &Nat, n: u32) -> Result<PowerReduction> {
    require_degree(n, 2)?;
    if x * y != z.pow(n) {
        return Err(Error::PreconditionViolated(format!("{x}·{y} != {z}^{n}")));
    }
    let delta = gcd(x, y);
    let x_cof = exact_div(x, &delta)?;
    let y_cof = exact_div(y, &delta)?;
    let w = gcd(z, &delta);
    let d = exact_div(&delta, &w)?;
    let z_cof = exact_div(z, &w)?;
    // d² | w^{n-2}: gcd(z_cof, d) = 1 and d²·x_cof·y_cof = z_cofⁿ·w^{n-2}
    let v = exact_div(&w.pow(n - 2), &d.pow(2))?;
    Ok(PowerReduction {
        delta,
        x_cof,
        y_cof,
        w,
        d,
        z_cof,
        v,
    })
}

/// Reduces a solution of `xyz = wⁿ` (`n ≥ 2`) to its gcd chain.
///
/// For `n = 2` the chain forces `residual = v = 1`, so `gcd(x, y)` divides `w`.
pub fn reduce_box(x: &Nat, y: &Nat, z: &Nat, w: &Nat, n: u32) -> Result<BoxReduction> {
    require_degree(n, 2)?;
    if &(x * y) * z != w.pow(n) {
        return Err(Error::PreconditionViolated(format!(
            "{x}·{y}·{z} != {w}^{n}"
        )));
    }
    let delta = gcd(x, y);
    let x_cof = exact_div(x, &delta)?;
    let y_cof = exact_div(y, &delta)?;
    let d = gcd(w, &delta);
    let w_cof = exact_div(w, &d)?;
    let v = exact_div(&delta, &d)?;
    let residual = exact_div(&d.pow(n - 2), &v.pow(2))?;
    Ok(BoxReduction {
        delta,
        x_cof,
        y_cof,
        d,
        w_cof,
        v,
        residual,
    })
}
