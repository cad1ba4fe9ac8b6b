//! Complete parametric solution families for a handful of multiplicative
//! Diophantine equations over the positive integers:
//!
//! * `xy = zⁿ` for `n = 2, …, 6`,
//! * `xy = k·zⁿ` (coprime solutions),
//! * `xyz = w²`,
//! * the system `xy = v²`, `yz = w²`.
//!
//! For each family the crate provides a constructor (parameters to solution),
//! a deterministic extractor (solution to parameters, with a trace of every
//! intermediate value), and brute-force oracles that certify soundness and
//! completeness up to a bound.
//!
//! ```
//! use dioph_core::{construct_power, extract_power, Nat, PowerParams, Solution};
//!
//! let n = |v: u64| Nat::from_u64(v).unwrap();
//! let (params, _trace) = extract_power(3, &n(4), &n(2), &n(2)).unwrap();
//! assert_eq!(
//!     params,
//!     PowerParams::Cube { d: n(1), v1: n(2), v2: n(1), m: n(1), l: n(1) }
//! );
//! assert_eq!(construct_power(&params).unwrap(), Solution::triple(n(4), n(2), n(2)));
//! ```
//!
//! The guide under `book/` walks through each family; its code listings are
//! compiled and run as doctests of this crate.

pub mod arithmetic;
pub mod decomp;
pub mod enumeration;
mod error;
pub mod families;
pub mod solution;
pub mod stress;

pub use arithmetic::Nat;
pub use enumeration::{
    enumerate, verify_equivalence, Certificate, EnumConfig, Method, SolutionSet, Status, Target,
};
pub use error::{Error, Result};
pub use families::{
    construct_box, construct_general, construct_power, construct_system, extract_box,
    extract_general, extract_power, extract_system, BoxParams, ExtractionTrace, GeneralParams,
    PowerParams, SystemParams,
};
pub use solution::{Equation, Solution};

#[cfg(doctest)]
macro_rules! book_chapters {
    ($($name:ident => $path:literal),* $(,)?) => {
        $(
            #[doc = include_str!(concat!("../../../book/src/", $path))]
            #[allow(dead_code)]
            struct $name;
        )*
    };
}

#[cfg(doctest)]
mod book {
    book_chapters! {
        Introduction => "introduction.md",
        Arithmetic => "arithmetic.md",
        Decompositions => "decompositions.md",
        PowerFamilies => "power-families.md",
        GeneralK => "general-k.md",
        Boxes => "boxes.md",
        System => "system.md",
        Enumeration => "enumeration.md",
        Cli => "cli.md",
    }
}
