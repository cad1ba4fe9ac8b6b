//! `xy = zⁿ` for `n = 2, …, 6`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{require_coprime, serialize_named, take_fields, ExtractionTrace, NamedParams};
use crate::arithmetic::{exact_div, gcd, Nat};
use crate::decomp::{reduce_power, split_coprime_power, split_scaled_power, PowerReduction};
use crate::error::{Error, Result};
use crate::solution::Solution;

/// Parameter tuple of the `xy = zⁿ` family, tagged by `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PowerParams {
    /// `x = δ·p1²`, `y = δ·p2²`, `z = δ·p1·p2`; `gcd(p1, p2) = 1`.
    Square { delta: Nat, p1: Nat, p2: Nat },
    /// `x = d³·v1²·v2·m³`, `y = d³·v1·v2²·l³`, `z = d²·v1·v2·m·l`;
    /// `gcd(v1, v2) = 1 = gcd(m, l)`.
    Cube {
        d: Nat,
        v1: Nat,
        v2: Nat,
        m: Nat,
        l: Nat,
    },
    /// `x = d²·t1³·t2·f⁴`, `y = d²·t1·t2³·g⁴`, `z = d·t1·t2·f·g`;
    /// `gcd(t1, t2) = 1 = gcd(f, g)`.
    Fourth {
        d: Nat,
        t1: Nat,
        t2: Nat,
        f: Nat,
        g: Nat,
    },
    /// `x = q⁵·e1³·e2²·r1⁴·r2·i1⁵`, `y = q⁵·e1²·e2³·r1·r2⁴·i2⁵`,
    /// `z = q²·e1·e2·r1·r2·i1·i2`; each of the pairs `e`, `r`, `i` coprime.
    Fifth {
        q: Nat,
        e1: Nat,
        e2: Nat,
        r1: Nat,
        r2: Nat,
        i1: Nat,
        i2: Nat,
    },
    /// `x = p³·e1⁴·e2²·n1⁵·n2·j1⁶`, `y = p³·e1²·e2⁴·n1·n2⁵·j2⁶`,
    /// `z = p·e1·e2·n1·n2·j1·j2`; each of the pairs `e`, `n`, `j` coprime.
    Sixth {
        p: Nat,
        e1: Nat,
        e2: Nat,
        n1: Nat,
        n2: Nat,
        j1: Nat,
        j2: Nat,
    },
}

impl PowerParams {
    pub fn degree(&self) -> u32 {
        match self {
            PowerParams::Square { .. } => 2,
            PowerParams::Cube { .. } => 3,
            PowerParams::Fourth { .. } => 4,
            PowerParams::Fifth { .. } => 5,
            PowerParams::Sixth { .. } => 6,
        }
    }

    pub fn field_names_for(n: u32) -> Result<&'static [&'static str]> {
        Ok(match n {
            2 => &["delta", "p1", "p2"],
            3 => &["d", "v1", "v2", "m", "l"],
            4 => &["d", "t1", "t2", "f", "g"],
            5 => &["q", "e1", "e2", "r1", "r2", "i1", "i2"],
            6 => &["p", "e1", "e2", "n1", "n2", "j1", "j2"],
            _ => {
                return Err(Error::InvalidInput(format!(
                    "no parametrization of xy = z^{n}"
                )))
            }
        })
    }

    /// Builds the tuple for degree `n` from named values.
    pub fn from_named(n: u32, map: BTreeMap<String, Nat>) -> Result<PowerParams> {
        Ok(match n {
            2 => {
                let [delta, p1, p2] = take_fields(map, ["delta", "p1", "p2"])?;
                PowerParams::Square { delta, p1, p2 }
            }
            3 => {
                let [d, v1, v2, m, l] = take_fields(map, ["d", "v1", "v2", "m", "l"])?;
                PowerParams::Cube { d, v1, v2, m, l }
            }
            4 => {
                let [d, t1, t2, f, g] = take_fields(map, ["d", "t1", "t2", "f", "g"])?;
                PowerParams::Fourth { d, t1, t2, f, g }
            }
            5 => {
                let [q, e1, e2, r1, r2, i1, i2] =
                    take_fields(map, ["q", "e1", "e2", "r1", "r2", "i1", "i2"])?;
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
            6 => {
                let [p, e1, e2, n1, n2, j1, j2] =
                    take_fields(map, ["p", "e1", "e2", "n1", "n2", "j1", "j2"])?;
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
            _ => {
                return Err(Error::InvalidInput(format!(
                    "no parametrization of xy = z^{n}"
                )))
            }
        })
    }

    /// Checks the gcd side conditions.
    pub fn validate(&self) -> Result<()> {
        match self {
            PowerParams::Square { p1, p2, .. } => require_coprime(&[("p1", p1, "p2", p2)]),
            PowerParams::Cube { v1, v2, m, l, .. } => {
                require_coprime(&[("v1", v1, "v2", v2), ("m", m, "l", l)])
            }
            PowerParams::Fourth { t1, t2, f, g, .. } => {
                require_coprime(&[("t1", t1, "t2", t2), ("f", f, "g", g)])
            }
            PowerParams::Fifth {
                e1,
                e2,
                r1,
                r2,
                i1,
                i2,
                ..
            } => require_coprime(&[
                ("e1", e1, "e2", e2),
                ("r1", r1, "r2", r2),
                ("i1", i1, "i2", i2),
            ]),
            PowerParams::Sixth {
                e1,
                e2,
                n1,
                n2,
                j1,
                j2,
                ..
            } => require_coprime(&[
                ("e1", e1, "e2", e2),
                ("n1", n1, "n2", n2),
                ("j1", j1, "j2", j2),
            ]),
        }
    }
}

impl NamedParams for PowerParams {
    fn field_names(&self) -> &'static [&'static str] {
        PowerParams::field_names_for(self.degree()).expect("degree is 2..=6")
    }

    fn values(&self) -> Vec<&Nat> {
        match self {
            PowerParams::Square { delta, p1, p2 } => vec![delta, p1, p2],
            PowerParams::Cube { d, v1, v2, m, l } => vec![d, v1, v2, m, l],
            PowerParams::Fourth { d, t1, t2, f, g } => vec![d, t1, t2, f, g],
            PowerParams::Fifth {
                q,
                e1,
                e2,
                r1,
                r2,
                i1,
                i2,
            } => vec![q, e1, e2, r1, r2, i1, i2],
            PowerParams::Sixth {
                p,
                e1,
                e2,
                n1,
                n2,
                j1,
                j2,
            } => vec![p, e1, e2, n1, n2, j1, j2],
        }
    }
}

impl Serialize for PowerParams {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_named(self, s)
    }
}

fn monomial(factors: &[(&Nat, u32)]) -> Nat {
    factors
        .iter()
        .fold(Nat::one(), |acc, (base, e)| acc * base.pow(*e))
}

/// Maps a valid parameter tuple to a solution `(x, y, z)` of `xy = zⁿ`.
pub fn construct_power(params: &PowerParams) -> Result<Solution> {
    params.validate()?;
    let (x, y, z) = match params {
        PowerParams::Square { delta, p1, p2 } => (
            monomial(&[(delta, 1), (p1, 2)]),
            monomial(&[(delta, 1), (p2, 2)]),
            monomial(&[(delta, 1), (p1, 1), (p2, 1)]),
        ),
        PowerParams::Cube { d, v1, v2, m, l } => (
            monomial(&[(d, 3), (v1, 2), (v2, 1), (m, 3)]),
            monomial(&[(d, 3), (v1, 1), (v2, 2), (l, 3)]),
            monomial(&[(d, 2), (v1, 1), (v2, 1), (m, 1), (l, 1)]),
        ),
        PowerParams::Fourth { d, t1, t2, f, g } => (
            monomial(&[(d, 2), (t1, 3), (t2, 1), (f, 4)]),
            monomial(&[(d, 2), (t1, 1), (t2, 3), (g, 4)]),
            monomial(&[(d, 1), (t1, 1), (t2, 1), (f, 1), (g, 1)]),
        ),
        PowerParams::Fifth {
            q,
            e1,
            e2,
            r1,
            r2,
            i1,
            i2,
        } => (
            monomial(&[(q, 5), (e1, 3), (e2, 2), (r1, 4), (r2, 1), (i1, 5)]),
            monomial(&[(q, 5), (e1, 2), (e2, 3), (r1, 1), (r2, 4), (i2, 5)]),
            monomial(&[(q, 2), (e1, 1), (e2, 1), (r1, 1), (r2, 1), (i1, 1), (i2, 1)]),
        ),
        PowerParams::Sixth {
            p,
            e1,
            e2,
            n1,
            n2,
            j1,
            j2,
        } => (
            monomial(&[(p, 3), (e1, 4), (e2, 2), (n1, 5), (n2, 1), (j1, 6)]),
            monomial(&[(p, 3), (e1, 2), (e2, 4), (n1, 1), (n2, 5), (j2, 6)]),
            monomial(&[(p, 1), (e1, 1), (e2, 1), (n1, 1), (n2, 1), (j1, 1), (j2, 1)]),
        ),
    };
    Ok(Solution::triple(x, y, z))
}

/// Recovers canonical parameters of a solution of `xy = zⁿ`.
///
/// Every case starts from the gcd chain of [`reduce_power`]
/// (`δ = gcd(x, y)`, `w = gcd(z, δ)`, ...) and then peels `X·Y = v·Zⁿ`
/// apart with the coprime splits of [`crate::decomp`].
pub fn extract_power(n: u32, x: &Nat, y: &Nat, z: &Nat) -> Result<(PowerParams, ExtractionTrace)> {
    if !(2..=6).contains(&n) {
        return Err(Error::InvalidInput(format!(
            "no parametrization of xy = z^{n}"
        )));
    }
    if x * y != z.pow(n) {
        return Err(Error::NotASolution(format!("{x}·{y} != {z}^{n}")));
    }
    let mut trace = ExtractionTrace::default();
    let red = reduce_power(x, y, z, n).map_err(|e| e.into_contract("gcd reduction"))?;
    trace.record("delta", &red.delta);
    trace.record("X", &red.x_cof);
    trace.record("Y", &red.y_cof);
    trace.record("w", &red.w);
    trace.record("d", &red.d);
    trace.record("Z", &red.z_cof);
    trace.record("v", &red.v);

    let params = match n {
        2 => extract_square(&red, &mut trace),
        3 => extract_cube(&red, &mut trace),
        4 => extract_fourth(&red, &mut trace),
        5 => extract_fifth(&red, &mut trace),
        _ => extract_sixth(&red, &mut trace),
    }?;
    Ok((params, trace))
}

fn extract_square(red: &PowerReduction, trace: &mut ExtractionTrace) -> Result<PowerParams> {
    // v·d² = w⁰ = 1 forces d = 1, so X·Y = Z².
    let roots = split_coprime_power(&red.x_cof, &red.y_cof, &red.z_cof, 2)
        .map_err(|e| e.into_contract("X·Y = Z² split"))?;
    trace.record("p1", &roots.a_root);
    trace.record("p2", &roots.b_root);
    Ok(PowerParams::Square {
        delta: red.delta.clone(),
        p1: roots.a_root,
        p2: roots.b_root,
    })
}

fn extract_cube(red: &PowerReduction, trace: &mut ExtractionTrace) -> Result<PowerParams> {
    // X·Y = v·Z³
    let split = split_scaled_power(&red.x_cof, &red.y_cof, &red.v, &red.z_cof, 3)
        .map_err(|e| e.into_contract("X·Y = v·Z³ split"))?;
    trace.record("v1", &split.a_coeff);
    trace.record("v2", &split.b_coeff);
    trace.record("m", &split.a_root);
    trace.record("l", &split.b_root);
    Ok(PowerParams::Cube {
        d: red.d.clone(),
        v1: split.a_coeff,
        v2: split.b_coeff,
        m: split.a_root,
        l: split.b_root,
    })
}

fn extract_fourth(red: &PowerReduction, trace: &mut ExtractionTrace) -> Result<PowerParams> {
    // w² = v·d² gives d | w; with w = t·d, X·Y = (Z²·t)².
    let t = exact_div(&red.w, &red.d).map_err(|e| e.into_contract("t = w/d"))?;
    trace.record("t", &t);
    let squares = split_coprime_power(&red.x_cof, &red.y_cof, &(&red.z_cof.pow(2) * &t), 2)
        .map_err(|e| e.into_contract("X·Y = (Z²t)² split"))?;
    let (big_f, big_g) = (squares.a_root, squares.b_root);
    trace.record("F", &big_f);
    trace.record("G", &big_g);
    // F·G = t·Z²
    let split = split_scaled_power(&big_f, &big_g, &t, &red.z_cof, 2)
        .map_err(|e| e.into_contract("F·G = t·Z² split"))?;
    trace.record("t1", &split.a_coeff);
    trace.record("t2", &split.b_coeff);
    trace.record("f", &split.a_root);
    trace.record("g", &split.b_root);
    Ok(PowerParams::Fourth {
        d: red.d.clone(),
        t1: split.a_coeff,
        t2: split.b_coeff,
        f: split.a_root,
        g: split.b_root,
    })
}

fn extract_fifth(red: &PowerReduction, trace: &mut ExtractionTrace) -> Result<PowerParams> {
    // X·Y = v·Z⁵
    let outer = split_scaled_power(&red.x_cof, &red.y_cof, &red.v, &red.z_cof, 5)
        .map_err(|e| e.into_contract("X·Y = v·Z⁵ split"))?;
    let (v1, v2) = (outer.a_coeff, outer.b_coeff);
    trace.record("v1", &v1);
    trace.record("v2", &v2);
    trace.record("i1", &outer.a_root);
    trace.record("i2", &outer.b_root);
    // w³ = v·d² with w = D·r, d = D·q gives D·r³ = v·q², so q² | D.
    let big_d = gcd(&red.w, &red.d);
    let r = exact_div(&red.w, &big_d).map_err(|e| e.into_contract("r = w/D"))?;
    let q = exact_div(&red.d, &big_d).map_err(|e| e.into_contract("q = d/D"))?;
    trace.record("D", &big_d);
    trace.record("r", &r);
    trace.record("q", &q);
    let e = exact_div(&big_d, &q.pow(2)).map_err(|e| e.into_contract("e = D/q²"))?;
    trace.record("e", &e);
    // v1·v2 = e·r³
    let inner = split_scaled_power(&v1, &v2, &e, &r, 3)
        .map_err(|e| e.into_contract("v1·v2 = e·r³ split"))?;
    trace.record("e1", &inner.a_coeff);
    trace.record("e2", &inner.b_coeff);
    trace.record("r1", &inner.a_root);
    trace.record("r2", &inner.b_root);
    Ok(PowerParams::Fifth {
        q,
        e1: inner.a_coeff,
        e2: inner.b_coeff,
        r1: inner.a_root,
        r2: inner.b_root,
        i1: outer.a_root,
        i2: outer.b_root,
    })
}

fn extract_sixth(red: &PowerReduction, trace: &mut ExtractionTrace) -> Result<PowerParams> {
    // d² | w⁴ gives d | w²; with w² = t·d, v = t².
    let t = exact_div(&red.w.pow(2), &red.d).map_err(|e| e.into_contract("t = w²/d"))?;
    trace.record("t", &t);
    // X·Y = v·Z⁶
    let outer = split_scaled_power(&red.x_cof, &red.y_cof, &red.v, &red.z_cof, 6)
        .map_err(|e| e.into_contract("X·Y = v·Z⁶ split"))?;
    let (m_1, m_2) = (outer.a_coeff, outer.b_coeff);
    trace.record("M1", &m_1);
    trace.record("M2", &m_2);
    trace.record("j1", &outer.a_root);
    trace.record("j2", &outer.b_root);
    // M1·M2 = t²
    let roots =
        split_coprime_power(&m_1, &m_2, &t, 2).map_err(|e| e.into_contract("M1·M2 = t² split"))?;
    let (m1, m2) = (roots.a_root, roots.b_root);
    trace.record("m1", &m1);
    trace.record("m2", &m2);
    // w² = t·d with d = p·D, w = D·N gives D·N² = t·p, so p | D.
    let big_d = gcd(&red.d, &red.w);
    let p = exact_div(&red.d, &big_d).map_err(|e| e.into_contract("p = d/D"))?;
    let big_n = exact_div(&red.w, &big_d).map_err(|e| e.into_contract("N = w/D"))?;
    trace.record("D", &big_d);
    trace.record("p", &p);
    trace.record("N", &big_n);
    let e = exact_div(&big_d, &p).map_err(|e| e.into_contract("e = D/p"))?;
    trace.record("e", &e);
    // m1·m2 = e·N²
    let inner = split_scaled_power(&m1, &m2, &e, &big_n, 2)
        .map_err(|e| e.into_contract("m1·m2 = e·N² split"))?;
    trace.record("e1", &inner.a_coeff);
    trace.record("e2", &inner.b_coeff);
    trace.record("n1", &inner.a_root);
    trace.record("n2", &inner.b_root);
    Ok(PowerParams::Sixth {
        p,
        e1: inner.a_coeff,
        e2: inner.b_coeff,
        n1: inner.a_root,
        n2: inner.b_root,
        j1: outer.a_root,
        j2: outer.b_root,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::nat;

    fn triple(x: u64, y: u64, z: u64) -> Solution {
        Solution::triple(nat(x), nat(y), nat(z))
    }

    #[test]
    fn construct_examples() {
        let sq = PowerParams::Square {
            delta: nat(3),
            p1: nat(2),
            p2: nat(1),
        };
        assert_eq!(construct_power(&sq).unwrap(), triple(12, 3, 6));
        let ones = PowerParams::Cube {
            d: nat(1),
            v1: nat(1),
            v2: nat(1),
            m: nat(1),
            l: nat(1),
        };
        assert_eq!(construct_power(&ones).unwrap(), triple(1, 1, 1));
        let cube = PowerParams::Cube {
            d: nat(1),
            v1: nat(2),
            v2: nat(1),
            m: nat(1),
            l: nat(1),
        };
        assert_eq!(construct_power(&cube).unwrap(), triple(4, 2, 2));
    }

    #[test]
    fn construct_rejects_side_condition_failures() {
        let bad = PowerParams::Square {
            delta: nat(1),
            p1: nat(2),
            p2: nat(4),
        };
        assert!(matches!(
            construct_power(&bad),
            Err(Error::InvalidParams(_))
        ));
        let bad = PowerParams::Fifth {
            q: nat(1),
            e1: nat(1),
            e2: nat(1),
            r1: nat(6),
            r2: nat(9),
            i1: nat(1),
            i2: nat(1),
        };
        let err = construct_power(&bad).unwrap_err();
        assert!(err.to_string().contains("gcd(r1, r2)"), "{err}");
    }

    #[test]
    fn extract_examples() {
        let (p, _) = extract_power(2, &nat(4), &nat(9), &nat(6)).unwrap();
        assert_eq!(
            p,
            PowerParams::Square {
                delta: nat(1),
                p1: nat(2),
                p2: nat(3)
            }
        );
        let (p, trace) = extract_power(3, &nat(4), &nat(2), &nat(2)).unwrap();
        assert_eq!(
            p,
            PowerParams::Cube {
                d: nat(1),
                v1: nat(2),
                v2: nat(1),
                m: nat(1),
                l: nat(1)
            }
        );
        assert_eq!(trace.get("delta"), Some(&nat(2)));
        assert_eq!(trace.get("w"), Some(&nat(2)));
        assert_eq!(trace.get("v"), Some(&nat(2)));
        let (p, _) = extract_power(2, &nat(1), &nat(1), &nat(1)).unwrap();
        assert_eq!(
            p,
            PowerParams::Square {
                delta: nat(1),
                p1: nat(1),
                p2: nat(1)
            }
        );
    }

    #[test]
    fn extract_rejects_non_solutions() {
        assert!(matches!(
            extract_power(2, &nat(2), &nat(3), &nat(4)),
            Err(Error::NotASolution(_))
        ));
        assert!(matches!(
            extract_power(7, &nat(1), &nat(1), &nat(1)),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn trace_symbols_follow_the_chain() {
        let sym = |n, x, y, z| {
            extract_power(n, &nat(x), &nat(y), &nat(z))
                .unwrap()
                .1
                .symbols()
        };
        let head = ["delta", "X", "Y", "w", "d", "Z", "v"];
        assert_eq!(sym(2, 1, 1, 1)[7..], ["p1", "p2"]);
        assert_eq!(sym(3, 1, 1, 1)[7..], ["v1", "v2", "m", "l"]);
        assert_eq!(sym(4, 1, 1, 1)[7..], ["t", "F", "G", "t1", "t2", "f", "g"]);
        assert_eq!(
            sym(5, 1, 1, 1)[7..],
            ["v1", "v2", "i1", "i2", "D", "r", "q", "e", "e1", "e2", "r1", "r2"]
        );
        assert_eq!(
            sym(6, 1, 1, 1)[7..],
            ["t", "M1", "M2", "j1", "j2", "m1", "m2", "D", "p", "N", "e", "e1", "e2", "n1", "n2"]
        );
        for n in 2..=6 {
            assert_eq!(sym(n, 1, 1, 1)[..7], head);
        }
    }

    #[test]
    fn round_trip_on_large_parameters() {
        let big: Nat = "98765432109876543211".parse().unwrap();
        let params = PowerParams::Sixth {
            p: big.clone(),
            e1: nat(7),
            e2: nat(10),
            n1: nat(3),
            n2: nat(4),
            j1: nat(11),
            j2: big,
        };
        let s = construct_power(&params).unwrap();
        let Solution::Triple { x, y, z } = &s else {
            unreachable!()
        };
        assert_eq!(x * y, z.pow(6));
        let (back, _) = extract_power(6, x, y, z).unwrap();
        assert_eq!(construct_power(&back).unwrap(), s);
    }
}
