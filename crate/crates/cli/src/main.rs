mod args;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use dioph_core::enumeration::GeneralTarget;
use dioph_core::families::NamedParams;
use dioph_core::solution::is_solution;
use dioph_core::stress::{stress, FamilyReport, StressConfig};
use dioph_core::{
    construct_box, construct_general, construct_power, construct_system, enumerate, extract_box,
    extract_general, extract_power, extract_system, verify_equivalence, BoxParams, EnumConfig,
    Equation, Error, GeneralParams, Method, Nat, PowerParams, Solution, Status, SystemParams,
    Target,
};
use serde_json::{json, Map, Value};

use args::{Cli, Command, Format, MethodArg, RunArgs, StressArgs, TupleArgs};

/// Failure carrying the process exit code it maps to.
#[derive(Debug)]
enum Failure {
    /// A mathematical negative: non-solution, mismatch, failed stress run.
    Negative(String),
    Usage(String),
    Cap(String),
    Io(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Io(_) => 4,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let msg = e.to_string();
        match e {
            Error::InvalidInput(_) | Error::InvalidParams(_) => Failure::Usage(msg),
            Error::BoundTooLarge { .. } => Failure::Cap(msg),
            _ => Failure::Negative(msg),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        Failure::Io(e.into())
    }
}

type CliResult<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Check(t) => check(t),
        Command::Extract { tuple, trace } => extract(tuple, trace),
        Command::Construct(t) => construct(t),
        Command::Enumerate(r) => run_enumerate(r),
        Command::Verify(r) => run_verify(r),
        Command::Stress(s) => run_stress(s),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Negative(m) | Failure::Usage(m) | Failure::Cap(m) => {
                    if !m.is_empty() {
                        eprintln!("error: {m}");
                    }
                }
                Failure::Io(e) => eprintln!("error: {e:#}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn parse_equation(s: &str) -> CliResult<Equation> {
    s.parse().map_err(|_| {
        Failure::Usage(format!(
            "unknown equation {s:?} (expected pow2..pow6, box, system or general-k)"
        ))
    })
}

fn parse_nat(name: &str, s: &str) -> CliResult<Nat> {
    s.parse()
        .map_err(|_| Failure::Usage(format!("{name} must be a positive integer, got {s:?}")))
}

/// `k` and `n` are required for general-k and rejected everywhere else.
fn general_pair<K>(
    equation: Equation,
    k: Option<K>,
    n: Option<u32>,
) -> CliResult<Option<(K, u32)>> {
    match (equation, k, n) {
        (Equation::GeneralK, Some(k), Some(n)) => {
            if n == 0 {
                return Err(Failure::Usage("--n must be at least 1".into()));
            }
            Ok(Some((k, n)))
        }
        (Equation::GeneralK, _, _) => {
            Err(Failure::Usage("general-k needs both --k and --n".into()))
        }
        (_, None, None) => Ok(None),
        (eq, _, _) => Err(Failure::Usage(format!(
            "--k and --n only apply to general-k, not {eq}"
        ))),
    }
}

/// Equation, remaining positionals, and `(k, n)` for general-k.
type TupleHead<'a> = (Equation, &'a [String], Option<(Nat, u32)>);

/// Splits off the equation (from `--equation` or the first positional) and parses `k`.
fn tuple_head(t: &TupleArgs) -> CliResult<TupleHead<'_>> {
    let (name, rest) = match &t.equation {
        Some(e) => (e.as_str(), &t.values[..]),
        None => (t.values[0].as_str(), &t.values[1..]),
    };
    let equation = parse_equation(name)?;
    let k = t.k.as_deref().map(|k| parse_nat("--k", k)).transpose()?;
    let general = general_pair(equation, k, t.n)?;
    Ok((equation, rest, general))
}

fn parse_solution(equation: Equation, raw: &[String]) -> CliResult<Solution> {
    let values = equation
        .fields()
        .iter()
        .zip(raw)
        .map(|(name, v)| parse_nat(name, v))
        .collect::<CliResult<Vec<_>>>()?;
    if raw.len() != equation.fields().len() {
        return Err(Failure::Usage(format!(
            "{equation} takes {} values ({}), got {}",
            equation.fields().len(),
            equation.fields().join(", "),
            raw.len()
        )));
    }
    Ok(Solution::from_values(equation, values)?)
}

fn check(t: TupleArgs) -> CliResult {
    let (equation, raw, general) = tuple_head(&t)?;
    let sol = parse_solution(equation, raw)?;
    if is_solution(equation, &sol, general.as_ref().map(|(k, n)| (k, *n))) {
        println!("solution");
        Ok(())
    } else {
        println!("not-a-solution");
        Err(Failure::Negative(String::new()))
    }
}

fn params_json<P: NamedParams>(p: &P) -> Value {
    Value::Object(
        p.named()
            .into_iter()
            .map(|(k, v)| (k.to_string(), Value::String(v.to_string())))
            .collect(),
    )
}

fn print_json(v: &Value) -> CliResult {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, v).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn extract(t: TupleArgs, with_trace: bool) -> CliResult {
    let (equation, raw, general) = tuple_head(&t)?;
    let sol = parse_solution(equation, raw)?;
    let (params, trace) = match (&sol, equation) {
        (Solution::Triple { x, y, z }, Equation::Power(n)) => {
            let (p, tr) = extract_power(n, x, y, z)?;
            (
                params_json(&p),
                serde_json::to_value(&tr).expect("trace serializes"),
            )
        }
        (Solution::Triple { x, y, z }, Equation::GeneralK) => {
            let (k, n) = general.as_ref().expect("checked by tuple_head");
            let p = extract_general(k, *n, x, y, z)?;
            let trace = json!([
                {"symbol": "gcd(x, y)", "value": "1"},
                {"symbol": "k1", "value": p.k1.to_string()},
                {"symbol": "k2", "value": p.k2.to_string()},
                {"symbol": "t1", "value": p.t1.to_string()},
                {"symbol": "t2", "value": p.t2.to_string()},
            ]);
            (params_json(&p), trace)
        }
        (Solution::Quad { x, y, z, w }, Equation::Box) => {
            let (p, tr) = extract_box(x, y, z, w)?;
            (
                params_json(&p),
                serde_json::to_value(&tr).expect("trace serializes"),
            )
        }
        (Solution::Quint { x, y, z, v, w }, Equation::System) => {
            let (p, tr) = extract_system(x, y, z, v, w)?;
            (
                params_json(&p),
                serde_json::to_value(&tr).expect("trace serializes"),
            )
        }
        _ => unreachable!("arity checked by parse_solution"),
    };
    print_json(&params)?;
    if with_trace {
        print_json(&json!({ "trace": trace }))?;
    }
    Ok(())
}

fn construct(t: TupleArgs) -> CliResult {
    let (equation, raw, general) = tuple_head(&t)?;
    let mut map = BTreeMap::new();
    for item in raw {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected NAME=VALUE, got {item:?}")))?;
        let value = parse_nat(name, value)?;
        if map.insert(name.to_string(), value).is_some() {
            return Err(Failure::Usage(format!("parameter {name:?} given twice")));
        }
    }
    let sol = match equation {
        Equation::Power(n) => construct_power(&PowerParams::from_named(n, map)?)?,
        Equation::Box => construct_box(&BoxParams::from_named(map)?)?,
        Equation::System => construct_system(&SystemParams::from_named(map)?)?,
        Equation::GeneralK => {
            let (k, n) = general.expect("checked by tuple_head");
            construct_general(&GeneralParams::from_named(k, n, map)?)?
        }
    };
    print_json(&serde_json::to_value(&sol).expect("solution serializes"))
}

fn run_target(r: &RunArgs) -> CliResult<(Target, EnumConfig)> {
    let equation = parse_equation(&r.equation)?;
    let general = general_pair(equation, r.k, r.n)?;
    if let Some((0, _)) = general {
        return Err(Failure::Usage("--k must be a positive integer".into()));
    }
    if r.bound == 0 {
        return Err(Failure::Usage("--bound must be at least 1".into()));
    }
    let target = Target {
        equation,
        general: general.map(|(k, n)| GeneralTarget { k, n }),
    };
    let cfg = EnumConfig {
        cap: r.cap,
        jobs: usize::try_from(r.jobs).unwrap_or(usize::MAX),
    };
    Ok((target, cfg))
}

fn open_out(path: Option<&Path>) -> CliResult<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p)
                .with_context(|| format!("cannot create {}", p.display()))
                .map_err(Failure::Io)?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn describe(target: &Target) -> String {
    match (target.equation, target.general) {
        (Equation::Power(2), _) => "rectangles whose area is a perfect square".into(),
        (Equation::Power(3), _) => "rectangles whose area is a perfect cube".into(),
        (Equation::Power(n), _) => format!("rectangles whose area is a perfect {n}th power"),
        (Equation::GeneralK, Some(g)) => {
            format!(
                "rectangles whose area is {} times a perfect power of degree {}",
                g.k, g.n
            )
        }
        (Equation::GeneralK, None) => "rectangles".into(),
        (Equation::Box, _) => "boxes whose volume is a perfect square".into(),
        (Equation::System, _) => "boxes whose x-y and y-z faces have square area".into(),
    }
}

fn run_enumerate(r: RunArgs) -> CliResult {
    let (target, cfg) = run_target(&r)?;
    let method = match r.method.unwrap_or(MethodArg::Brute) {
        MethodArg::Brute => Method::Brute,
        MethodArg::Parametric => Method::Parametric,
        MethodArg::Both => {
            return Err(Failure::Usage(
                "enumerate takes --method brute or parametric; use verify to compare both".into(),
            ))
        }
    };
    let set = enumerate(&target, r.bound, method, &cfg)?;
    let mut out = open_out(r.out.as_deref())?;
    match r.format {
        Format::Jsonl => {
            for s in set.solutions() {
                serde_json::to_writer(&mut out, s).map_err(io::Error::from)?;
                out.write_all(b"\n")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(target.equation.fields())
                .map_err(io::Error::from)?;
            for s in set.solutions() {
                w.write_record(s.values().iter().map(|v| v.to_string()))
                    .map_err(io::Error::from)?;
            }
            w.flush()?;
        }
    }
    out.flush()?;
    eprintln!(
        "{} {} ({}), {} <= {}, method {}",
        set.len(),
        target.equation,
        describe(&target),
        set.bound_kind,
        r.bound,
        method
    );
    Ok(())
}

fn run_verify(r: RunArgs) -> CliResult {
    if !matches!(r.method, None | Some(MethodArg::Both)) {
        return Err(Failure::Usage("verify only supports --method both".into()));
    }
    if r.format != Format::Jsonl {
        return Err(Failure::Usage(
            "verify writes a JSON certificate; --format does not apply".into(),
        ));
    }
    let (target, cfg) = run_target(&r)?;
    let cert = verify_equivalence(&target, r.bound, &cfg)?;
    let mut out = open_out(r.out.as_deref())?;
    serde_json::to_writer_pretty(&mut out, &cert).map_err(io::Error::from)?;
    out.write_all(b"\n")?;
    out.flush()?;
    match cert.status {
        Status::Equal => {
            eprintln!(
                "equal: {} solutions of {} ({} <= {})",
                cert.count_a, cert.equation, cert.bound_kind, cert.bound
            );
            Ok(())
        }
        Status::Mismatch => {
            let first = cert
                .first_discrepancy
                .as_ref()
                .map(|s| s.to_string())
                .unwrap_or_default();
            let mut msg = format!(
                "mismatch: brute {} vs parametric {}, first discrepancy {first}",
                cert.count_a, cert.count_b
            );
            if target.equation == Equation::GeneralK {
                msg.push_str(
                    " (the x = k1*t1^n, y = k2*t2^n family only covers solutions with gcd(x, y) = 1)",
                );
            }
            Err(Failure::Negative(msg))
        }
    }
}

fn report_line(r: &FamilyReport, with_r_split: bool) -> String {
    let mut line = format!("{}: {}/{} pass", r.family, r.passed, r.sampled);
    if r.round_trip_skipped > 0 {
        line.push_str(&format!(
            " ({} with gcd(x, y) > 1 not round-tripped)",
            r.round_trip_skipped
        ));
    }
    if with_r_split && r.family == Equation::System {
        line.push_str(&format!(
            "; r > 1: {}/{} fail; r = 1: {}/{} fail",
            r.r_above_one_failed, r.r_above_one, r.r_one_failed, r.r_one
        ));
    }
    line
}

fn run_stress(s: StressArgs) -> CliResult {
    let families = match &s.equation {
        Some(e) => vec![parse_equation(e)?],
        None => Equation::all_families().to_vec(),
    };
    let cfg = StressConfig {
        seed: s.seed,
        count: s.count,
        limit: s.limit,
        v_without_r: s.paper_v,
    };
    let reports = stress(&families, &cfg);
    let mut out = open_out(s.out.as_deref())?;
    for r in &reports {
        writeln!(out, "{}", report_line(r, s.paper_v))?;
    }
    out.flush()?;
    let failed: Vec<&FamilyReport> = reports.iter().filter(|r| !r.all_passed()).collect();
    if failed.is_empty() {
        return Ok(());
    }
    let detail: Map<String, Value> = failed
        .iter()
        .map(|r| {
            (
                r.family.to_string(),
                Value::String(r.first_failure.clone().unwrap_or_default()),
            )
        })
        .collect();
    Err(Failure::Negative(format!(
        "{} famil{} failed; first failures: {}",
        failed.len(),
        if failed.len() == 1 { "y" } else { "ies" },
        Value::Object(detail)
    )))
}
