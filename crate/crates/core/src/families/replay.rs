//! Bottom-up recomposition of extraction traces.
//!
//! Starting from the deepest symbols of a trace, every intermediate is
//! rebuilt from the back-substitution identities (`w = v·d²`, `δ = w·d`, ...)
//! and compared against the recorded value before the solution is
//! reassembled. This is a second route to the constructors' formulas.

use super::ExtractionTrace;
use crate::arithmetic::Nat;
use crate::error::{Error, Result};
use crate::solution::{Equation, Solution};

struct Replayer<'a> {
    trace: &'a ExtractionTrace,
}

impl Replayer<'_> {
    fn leaf(&self, symbol: &str) -> Result<Nat> {
        self.trace
            .get(symbol)
            .cloned()
            .ok_or_else(|| Error::InvalidInput(format!("trace has no symbol {symbol:?}")))
    }

    fn derive(&self, symbol: &str, computed: Nat) -> Result<Nat> {
        let recorded = self.leaf(symbol)?;
        if recorded != computed {
            return Err(Error::InternalContractViolation(format!(
                "trace symbol {symbol}: recorded {recorded}, recomposed {computed}"
            )));
        }
        Ok(computed)
    }
}

/// Recomposes the solution an extraction trace was recorded from.
pub fn replay(equation: Equation, trace: &ExtractionTrace) -> Result<Solution> {
    let rp = Replayer { trace };
    match equation {
        Equation::Power(n) => replay_power(&rp, n),
        Equation::Box => replay_box(&rp),
        Equation::System => replay_system(&rp),
        Equation::GeneralK => Err(Error::InvalidInput(
            "general-k extraction records no trace".into(),
        )),
    }
}

fn replay_power(rp: &Replayer, n: u32) -> Result<Solution> {
    // Rebuild (X, Y, Z, w, d) from the deepest symbols of each chain.
    let (x_cof, y_cof, z_cof, w, d) = match n {
        2 => {
            let (p1, p2) = (rp.leaf("p1")?, rp.leaf("p2")?);
            let d = rp.derive("d", Nat::one())?;
            rp.derive("v", Nat::one())?;
            let delta = rp.leaf("delta")?;
            (p1.pow(2), p2.pow(2), &p1 * &p2, delta, d)
        }
        3 => {
            let d = rp.leaf("d")?;
            let (v1, v2) = (rp.leaf("v1")?, rp.leaf("v2")?);
            let (m, l) = (rp.leaf("m")?, rp.leaf("l")?);
            let v = rp.derive("v", &v1 * &v2)?;
            let w = v * d.pow(2);
            (&v1 * &m.pow(3), &v2 * &l.pow(3), &m * &l, w, d)
        }
        4 => {
            let d = rp.leaf("d")?;
            let (t1, t2) = (rp.leaf("t1")?, rp.leaf("t2")?);
            let (f, g) = (rp.leaf("f")?, rp.leaf("g")?);
            let big_f = rp.derive("F", &t1 * &f.pow(2))?;
            let big_g = rp.derive("G", &t2 * &g.pow(2))?;
            let t = rp.derive("t", &t1 * &t2)?;
            rp.derive("v", t.pow(2))?;
            let w = &t * &d;
            (big_f.pow(2), big_g.pow(2), &f * &g, w, d)
        }
        5 => {
            let q = rp.leaf("q")?;
            let (e1, e2) = (rp.leaf("e1")?, rp.leaf("e2")?);
            let (r1, r2) = (rp.leaf("r1")?, rp.leaf("r2")?);
            let (i1, i2) = (rp.leaf("i1")?, rp.leaf("i2")?);
            let v1 = rp.derive("v1", &e1 * &r1.pow(3))?;
            let v2 = rp.derive("v2", &e2 * &r2.pow(3))?;
            let e = rp.derive("e", &e1 * &e2)?;
            let r = rp.derive("r", &r1 * &r2)?;
            let big_d = rp.derive("D", &q.pow(2) * &e)?;
            rp.derive("q", q.clone())?;
            rp.derive("v", &v1 * &v2)?;
            let w = &big_d * &r;
            let d = &big_d * &q;
            (&v1 * &i1.pow(5), &v2 * &i2.pow(5), &i1 * &i2, w, d)
        }
        6 => {
            let p = rp.leaf("p")?;
            let (e1, e2) = (rp.leaf("e1")?, rp.leaf("e2")?);
            let (n1, n2) = (rp.leaf("n1")?, rp.leaf("n2")?);
            let (j1, j2) = (rp.leaf("j1")?, rp.leaf("j2")?);
            let m1 = rp.derive("m1", &e1 * &n1.pow(2))?;
            let m2 = rp.derive("m2", &e2 * &n2.pow(2))?;
            let e = rp.derive("e", &e1 * &e2)?;
            let big_n = rp.derive("N", &n1 * &n2)?;
            let big_d = rp.derive("D", &p * &e)?;
            let t = rp.derive("t", &m1 * &m2)?;
            let big_m1 = rp.derive("M1", m1.pow(2))?;
            let big_m2 = rp.derive("M2", m2.pow(2))?;
            rp.derive("v", t.pow(2))?;
            let w = &big_d * &big_n;
            let d = &p * &big_d;
            (&big_m1 * &j1.pow(6), &big_m2 * &j2.pow(6), &j1 * &j2, w, d)
        }
        _ => {
            return Err(Error::InvalidInput(format!(
                "no parametrization of xy = z^{n}"
            )))
        }
    };
    let x_cof = rp.derive("X", x_cof)?;
    let y_cof = rp.derive("Y", y_cof)?;
    let z_cof = rp.derive("Z", z_cof)?;
    let w = rp.derive("w", w)?;
    let d = rp.derive("d", d)?;
    let delta = rp.derive("delta", &w * &d)?;
    Ok(Solution::triple(
        &delta * &x_cof,
        &delta * &y_cof,
        &w * &z_cof,
    ))
}

fn replay_box(rp: &Replayer) -> Result<Solution> {
    let d = rp.leaf("d")?;
    let t = rp.leaf("t")?;
    let (r1, r2) = (rp.leaf("r1")?, rp.leaf("r2")?);
    let (u1, u2) = (rp.leaf("u1")?, rp.leaf("u2")?);
    let x_cof = rp.derive("X", &u1 * &r1.pow(2))?;
    let y_cof = rp.derive("Y", &u2 * &r2.pow(2))?;
    let r = rp.derive("r", &r1 * &r2)?;
    let u = rp.derive("u", &u1 * &u2)?;
    let p = rp.derive("p", &t * &u)?;
    let w_cof = rp.derive("W", &r * &p)?;
    let v = rp.derive("v", Nat::one())?;
    rp.derive("D", Nat::one())?;
    let delta = rp.derive("delta", &d * &v)?;
    Ok(Solution::quad(
        &delta * &x_cof,
        &delta * &y_cof,
        &t * &p,
        &w_cof * &d,
    ))
}

fn replay_system(rp: &Replayer) -> Result<Solution> {
    let [c, h, i, j, e, f, r, t] = ["c", "h", "i", "j", "e", "f", "r", "t"].map(|s| rp.leaf(s));
    let (c, h, i, j, e, f, r, t) = (c?, h?, i?, j?, e?, f?, r?, t?);
    let b1 = rp.derive("b1", &h * &i.pow(2))?;
    let d = rp.derive("d", &h * &j.pow(2))?;
    let g = rp.derive("g", Nat::product([&h, &i, &j]))?;
    let big_r = rp.derive("R", &f * &g)?;
    rp.derive("k", &d * &f.pow(2))?;
    let a1 = rp.derive("a1", &d * &e.pow(2))?;
    let big_t = rp.derive("T", Nat::product([&d, &e, &f]))?;
    let a = rp.derive("a", &c * &a1)?;
    let b = rp.derive("b", &c * &b1)?;
    let y = &a * &big_r.pow(2);
    if y != &b * &big_t.pow(2) {
        return Err(Error::InternalContractViolation(
            "a·R² and b·T² disagree on y".into(),
        ));
    }
    Ok(Solution::quint(
        &a * &r.pow(2),
        y,
        &b * &t.pow(2),
        Nat::product([&a, &r, &big_r]),
        Nat::product([&b, &big_t, &t]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::nat;
    use crate::families::{extract_box, extract_power, extract_system};

    #[test]
    fn replays_examples() {
        let (_, tr) = extract_power(3, &nat(4), &nat(2), &nat(2)).unwrap();
        assert_eq!(
            replay(Equation::Power(3), &tr).unwrap(),
            Solution::triple(nat(4), nat(2), nat(2))
        );
        let (_, tr) = extract_box(&nat(2), &nat(3), &nat(6), &nat(6)).unwrap();
        assert_eq!(
            replay(Equation::Box, &tr).unwrap(),
            Solution::quad(nat(2), nat(3), nat(6), nat(6))
        );
        let [x, y, z, v, w] = [1u64, 4, 1, 2, 2].map(nat);
        let (_, tr) = extract_system(&x, &y, &z, &v, &w).unwrap();
        assert_eq!(
            replay(Equation::System, &tr).unwrap(),
            Solution::quint(x, y, z, v, w)
        );
    }

    #[test]
    fn tampered_trace_is_caught() {
        let (_, tr) = extract_power(3, &nat(4), &nat(2), &nat(2)).unwrap();
        let mut entries = tr.entries().to_vec();
        for e in entries.iter_mut() {
            if e.symbol == "v" {
                e.value = nat(3);
            }
        }
        let mut tampered = ExtractionTrace::default();
        for e in &entries {
            tampered.record(e.symbol, &e.value);
        }
        assert!(matches!(
            replay(Equation::Power(3), &tampered),
            Err(Error::InternalContractViolation(_))
        ));
    }

    #[test]
    fn missing_symbol_is_reported() {
        assert!(matches!(
            replay(Equation::Box, &ExtractionTrace::default()),
            Err(Error::InvalidInput(_))
        ));
    }
}
