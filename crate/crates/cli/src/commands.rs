//! The six commands behind `--cmd`.
//!
//! Each command computes its table in exact arithmetic, renders it as
//! CSV or JSON, and says whether every row passed. Sweeps iterate in
//! lexicographic flag order (the order the flags are documented in), so
//! output is byte-deterministic for a fixed command line and seed.

use std::fmt;
use std::fs;

use serde::Serialize;
use signbounds::{
    applicable_univariate_bound, bpr8_bound_in_range, count_counterexample_instance,
    count_grid_2d, count_tightness_instance_seeded, count_univariate,
    counterexample_degrees_product, grassmannian_application_bound, main_bound_per_degree,
    main_bound_uniform, rat_to_decimal, tightness_lower_bound, BoundParams, DegreeSequence,
    Error, Int, Nat, Rat,
};

use crate::instance::parse_instance;
use crate::sweep::Sweep;
use crate::table::{to_csv, to_json};
use crate::{Args, Cmd, Format};

/// Half-width of the box the grid oracle scans for two-variable verify.
const GRID_HALF_WIDTH: i64 = 8;

/// Instances in the built-in verification corpus.
const CORPUS_SIZE: u64 = 50;

/// Seeds tried per tightness tuple before reporting degeneracy.
const TIGHTNESS_ATTEMPTS: u64 = 32;

/// An error with the process exit code it should produce.
#[derive(Debug)]
pub struct CliError {
    pub msg: String,
    pub code: u8,
}

impl CliError {
    /// Usage or parse problem: exit code 2.
    fn usage(msg: impl Into<String>) -> CliError {
        CliError { msg: msg.into(), code: 2 }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.msg.fmt(f)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        CliError::usage(e.to_string())
    }
}

/// A rendered table plus the verdict that decides the exit code.
pub struct Rendered {
    pub text: String,
    pub all_pass: bool,
}

/// Dispatches to the selected command.
pub fn run(args: &Args) -> Result<Rendered, CliError> {
    match args.cmd {
        Cmd::Bounds => cmd_bounds(args),
        Cmd::Compare => cmd_compare(args),
        Cmd::Verify => cmd_verify(args),
        Cmd::Tightness => cmd_tightness(args),
        Cmd::Grassmannian => cmd_grassmannian(args),
        Cmd::Counterexample => cmd_counterexample(args),
    }
}

fn need(opt: Option<Sweep>, flag: &str) -> Result<Sweep, CliError> {
    opt.ok_or_else(|| CliError::usage(format!("this command needs --{flag}")))
}

fn to_u32(v: u64, flag: &str) -> Result<u32, CliError> {
    u32::try_from(v).map_err(|_| CliError::usage(format!("--{flag} value {v} is too large")))
}

fn fraction(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn ratio(a: &Nat, b: &Nat) -> Rat {
    Rat::new(Int::from(a.clone()), Int::from(b.clone()))
}

fn render<T: Serialize>(
    format: Format,
    header: &[&str],
    cells: &[Vec<String>],
    rows: &[T],
) -> Result<String, CliError> {
    match format {
        Format::Csv => Ok(to_csv(header, cells)),
        Format::Json => to_json(rows).map_err(CliError::usage),
    }
}

#[derive(Serialize)]
struct BoundsRow {
    s: u64,
    k: u64,
    kprime: u64,
    d: u64,
    d0: u64,
    main_uniform: String,
    bpr8: String,
    tightness_lower: String,
    ratio: String,
}

/// The refined bound next to the classical one and the constructive
/// lower bound, one row per parameter tuple.
fn cmd_bounds(args: &Args) -> Result<Rendered, CliError> {
    const HEADER: &[&str] =
        &["s", "k", "kprime", "d", "d0", "main_uniform", "bpr8", "tightness_lower", "ratio"];
    let (sweep_s, sweep_k) = (need(args.s, "s")?, need(args.k, "k")?);
    let sweep_kp = need(args.kprime, "kprime")?;
    let (sweep_d, sweep_d0) = (need(args.d, "d")?, need(args.d0, "d0")?);
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    for s in sweep_s.values() {
        for k in sweep_k.values() {
            for kprime in sweep_kp.values() {
                for d in sweep_d.values() {
                    for d0 in sweep_d0.values() {
                        let kk = to_u32(k, "k")?;
                        let kp = to_u32(kprime, "kprime")?;
                        let params = BoundParams::new(s, d, d0, kk, kp).map_err(|e| {
                            CliError::usage(format!(
                                "(s={s}, k={k}, kprime={kprime}, d={d}, d0={d0}): {e}"
                            ))
                        })?;
                        let main = main_bound_uniform(&params)?;
                        let bpr8 = bpr8_bound_in_range(s, d, kk, kp, 0, args.bpr8_range.into())?;
                        let lower = tightness_lower_bound(s, d, d0, kk)?;
                        let r = ratio(&main, &bpr8);
                        cells.push(vec![
                            s.to_string(),
                            k.to_string(),
                            kprime.to_string(),
                            d.to_string(),
                            d0.to_string(),
                            main.to_string(),
                            bpr8.to_string(),
                            lower.to_string(),
                            rat_to_decimal(&r, 6),
                        ]);
                        rows.push(BoundsRow {
                            s,
                            k,
                            kprime,
                            d,
                            d0,
                            main_uniform: main.to_string(),
                            bpr8: bpr8.to_string(),
                            tightness_lower: lower.to_string(),
                            ratio: fraction(&r),
                        });
                    }
                }
            }
        }
    }
    let text = render(args.format, HEADER, &cells, &rows)?;
    Ok(Rendered { text, all_pass: true })
}

#[derive(Serialize)]
struct CompareRow {
    s: u64,
    k: u64,
    kprime: u64,
    d: u64,
    d0: u64,
    main_uniform: String,
    bpr8: String,
    ratio: String,
    winner: &'static str,
}

/// Head-to-head table: which bound is smaller on each tuple.
fn cmd_compare(args: &Args) -> Result<Rendered, CliError> {
    const HEADER: &[&str] =
        &["s", "k", "kprime", "d", "d0", "main_uniform", "bpr8", "ratio", "winner"];
    let (sweep_s, sweep_k) = (need(args.s, "s")?, need(args.k, "k")?);
    let sweep_kp = need(args.kprime, "kprime")?;
    let (sweep_d, sweep_d0) = (need(args.d, "d")?, need(args.d0, "d0")?);
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    for s in sweep_s.values() {
        for k in sweep_k.values() {
            for kprime in sweep_kp.values() {
                for d in sweep_d.values() {
                    for d0 in sweep_d0.values() {
                        let kk = to_u32(k, "k")?;
                        let kp = to_u32(kprime, "kprime")?;
                        let params = BoundParams::new(s, d, d0, kk, kp).map_err(|e| {
                            CliError::usage(format!(
                                "(s={s}, k={k}, kprime={kprime}, d={d}, d0={d0}): {e}"
                            ))
                        })?;
                        let main = main_bound_uniform(&params)?;
                        let bpr8 = bpr8_bound_in_range(s, d, kk, kp, 0, args.bpr8_range.into())?;
                        let winner = match main.cmp(&bpr8) {
                            std::cmp::Ordering::Less => "refined",
                            std::cmp::Ordering::Greater => "classical",
                            std::cmp::Ordering::Equal => "tie",
                        };
                        let r = ratio(&main, &bpr8);
                        cells.push(vec![
                            s.to_string(),
                            k.to_string(),
                            kprime.to_string(),
                            d.to_string(),
                            d0.to_string(),
                            main.to_string(),
                            bpr8.to_string(),
                            rat_to_decimal(&r, 6),
                            winner.to_string(),
                        ]);
                        rows.push(CompareRow {
                            s,
                            k,
                            kprime,
                            d,
                            d0,
                            main_uniform: main.to_string(),
                            bpr8: bpr8.to_string(),
                            ratio: fraction(&r),
                            winner,
                        });
                    }
                }
            }
        }
    }
    let text = render(args.format, HEADER, &cells, &rows)?;
    Ok(Rendered { text, all_pass: true })
}

#[derive(Serialize)]
struct VerifyRow {
    id: String,
    oracle: String,
    total: u64,
    bound: String,
    pass: bool,
}

struct CheckedInstance {
    id: String,
    oracle: String,
    total: u64,
    bound: Nat,
}

/// Oracle counts against the applicable bound, on an instance file or
/// the built-in seeded corpus; exit 0 only when every row passes.
fn cmd_verify(args: &Args) -> Result<Rendered, CliError> {
    const HEADER: &[&str] = &["id", "oracle", "total", "bound", "pass"];
    let mut checked = Vec::new();
    match &args.input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
            let (family, variety) = parse_instance(&text)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            let id = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "input".into());
            let nvars = family[0].nvars();
            if nvars == 1 {
                let report = count_univariate(&family, variety.as_ref())?;
                let bound = applicable_univariate_bound(&family, variety.as_ref())?;
                checked.push(CheckedInstance {
                    id,
                    oracle: "exact-univariate".into(),
                    total: report.total,
                    bound,
                });
            } else if nvars == 2 && variety.is_none() {
                let half = Rat::from(Int::from(GRID_HALF_WIDTH));
                let bbox = (-half.clone(), -half.clone(), half.clone(), half);
                let report = count_grid_2d(&family, bbox, args.resolution)?;
                let degrees: Vec<u64> = family.iter().map(|p| p.degree().max(1)).collect();
                let bound = main_bound_per_degree(&DegreeSequence::new(degrees)?, 1, 2, 2)?;
                checked.push(CheckedInstance {
                    id,
                    oracle: format!("grid-{}", args.resolution),
                    total: report.total,
                    bound,
                });
            } else if nvars == 2 {
                return Err(CliError::usage(
                    "the grid oracle cannot restrict to a variety; \
                     drop \"variety\" from two-variable instances",
                ));
            } else {
                return Err(CliError::usage(format!(
                    "verification handles 1- or 2-variable instances, got nvars={nvars}"
                )));
            }
        }
        None => {
            for i in 0..CORPUS_SIZE {
                let seed = args.seed + i;
                let (family, variety) = signbounds::random_univariate_instance(seed);
                let report = count_univariate(&family, variety.as_ref())?;
                let bound = applicable_univariate_bound(&family, variety.as_ref())?;
                checked.push(CheckedInstance {
                    id: format!("seed-{seed}"),
                    oracle: "exact-univariate".into(),
                    total: report.total,
                    bound,
                });
            }
        }
    }
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    let mut all_pass = true;
    for c in checked {
        let total = c.total + args.corrupt_oracle;
        let pass = Nat::from(total) <= c.bound;
        all_pass &= pass;
        cells.push(vec![
            c.id.clone(),
            c.oracle.clone(),
            total.to_string(),
            c.bound.to_string(),
            pass.to_string(),
        ]);
        rows.push(VerifyRow {
            id: c.id,
            oracle: c.oracle,
            total,
            bound: c.bound.to_string(),
            pass,
        });
    }
    let text = render(args.format, HEADER, &cells, &rows)?;
    Ok(Rendered { text, all_pass })
}

#[derive(Serialize)]
struct TightnessRow {
    s: u64,
    d: u64,
    d0: u64,
    seed: Option<u64>,
    strict_total: Option<u64>,
    closed_form: String,
    main_uniform: String,
    pass: bool,
}

/// Counts components of the explicit near-tight construction at k = 2
/// and checks them against the closed form and the main bound.
fn cmd_tightness(args: &Args) -> Result<Rendered, CliError> {
    const HEADER: &[&str] =
        &["s", "d", "d0", "seed", "strict_total", "closed_form", "main_uniform", "pass"];
    let sweep_s = need(args.s, "s")?;
    let (sweep_d, sweep_d0) = (need(args.d, "d")?, need(args.d0, "d0")?);
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    let mut all_pass = true;
    for s in sweep_s.values() {
        for d in sweep_d.values() {
            for d0 in sweep_d0.values() {
                let closed = tightness_lower_bound(s, d, d0, 2)?;
                let main = main_bound_uniform(&BoundParams::new(s, d, d0, 2, 1)?)?;
                let mut found = None;
                for off in 0..TIGHTNESS_ATTEMPTS {
                    match count_tightness_instance_seeded(s, d, d0, args.seed + off) {
                        Ok(report) => {
                            found = Some((args.seed + off, report.strict_total()));
                            break;
                        }
                        Err(Error::DegenerateInstance(_)) => continue,
                        Err(e) => return Err(e.into()),
                    }
                }
                let pass = match found {
                    Some((_, strict)) => {
                        Nat::from(strict) == closed && Nat::from(strict) <= main
                    }
                    None => false,
                };
                all_pass &= pass;
                let (seed, strict) = (found.map(|f| f.0), found.map(|f| f.1));
                let dash = |v: Option<u64>| v.map_or_else(|| "-".into(), |v| v.to_string());
                cells.push(vec![
                    s.to_string(),
                    d.to_string(),
                    d0.to_string(),
                    dash(seed),
                    dash(strict),
                    closed.to_string(),
                    main.to_string(),
                    pass.to_string(),
                ]);
                rows.push(TightnessRow {
                    s,
                    d,
                    d0,
                    seed,
                    strict_total: strict,
                    closed_form: closed.to_string(),
                    main_uniform: main.to_string(),
                    pass,
                });
            }
        }
    }
    let text = render(args.format, HEADER, &cells, &rows)?;
    Ok(Rendered { text, all_pass })
}

#[derive(Serialize)]
struct GrassmannianRow {
    n: u64,
    k: u64,
    d: u64,
    bound: String,
}

/// The incidence-application bound over swept (n, k, d).
fn cmd_grassmannian(args: &Args) -> Result<Rendered, CliError> {
    const HEADER: &[&str] = &["n", "k", "d", "bound"];
    let (sweep_n, sweep_k) = (need(args.n, "n")?, need(args.k, "k")?);
    let sweep_d = need(args.d, "d")?;
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    for n in sweep_n.values() {
        for k in sweep_k.values() {
            for d in sweep_d.values() {
                let bound =
                    grassmannian_application_bound(n, to_u32(k, "k")?, to_u32(d, "d")?)
                        .map_err(|e| {
                            CliError::usage(format!("(n={n}, k={k}, d={d}): {e}"))
                        })?;
                cells.push(vec![
                    n.to_string(),
                    k.to_string(),
                    d.to_string(),
                    bound.to_string(),
                ]);
                rows.push(GrassmannianRow { n, k, d, bound: bound.to_string() });
            }
        }
    }
    let text = render(args.format, HEADER, &cells, &rows)?;
    Ok(Rendered { text, all_pass: true })
}

#[derive(Serialize)]
struct CounterexampleRow {
    d: u64,
    k: u64,
    m: u64,
    count: u64,
    closed_form: String,
    degree_product: String,
    exceeds: bool,
    pass: bool,
}

/// Enumerates the zero set of the Bezout-failure family and compares it
/// with the closed form and the degree product it overshoots.
fn cmd_counterexample(args: &Args) -> Result<Rendered, CliError> {
    const HEADER: &[&str] =
        &["d", "k", "m", "count", "closed_form", "degree_product", "exceeds", "pass"];
    let (sweep_d, sweep_k) = (need(args.d, "d")?, need(args.k, "k")?);
    let sweep_m = need(args.m, "m")?;
    let mut cells = Vec::new();
    let mut rows = Vec::new();
    let mut all_pass = true;
    for d in sweep_d.values() {
        for k in sweep_k.values() {
            for m in sweep_m.values() {
                let kk = to_u32(k, "k")?;
                let mm = to_u32(m, "m")?;
                let count = count_counterexample_instance(d, kk, mm, args.cap)
                    .map_err(|e| CliError::usage(format!("(d={d}, k={k}, m={m}): {e}")))?;
                let (closed, product) = counterexample_degrees_product(d, kk, mm)?;
                let exceeds = Nat::from(count) > product;
                let pass = Nat::from(count) == closed;
                all_pass &= pass;
                cells.push(vec![
                    d.to_string(),
                    k.to_string(),
                    m.to_string(),
                    count.to_string(),
                    closed.to_string(),
                    product.to_string(),
                    exceeds.to_string(),
                    pass.to_string(),
                ]);
                rows.push(CounterexampleRow {
                    d,
                    k,
                    m,
                    count,
                    closed_form: closed.to_string(),
                    degree_product: product.to_string(),
                    exceeds,
                    pass,
                });
            }
        }
    }
    let text = render(args.format, HEADER, &cells, &rows)?;
    Ok(Rendered { text, all_pass })
}
