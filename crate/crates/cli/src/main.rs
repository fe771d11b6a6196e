//! `rankpath`: verify identities, apply maps, expand series, enumerate
//! families and follow rank-raising trajectories.
//!
//! Exit status: 0 when everything checked passes, 1 when a counterexample
//! was found, 2 on usage or input errors.

mod catalog;
mod maps;
mod params;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rankpath::oracle::{FamilySpec, Object, Oracle, PartFilter, DEFAULT_CAP};
use rankpath::par::{with_jobs, Exec};
use rankpath::qseries::*;
use rankpath::rank_raising::{f_iter, trajectory};
use rankpath::{Error as CoreError, RankConstraint};
use serde_json::{json, Value};

use catalog::{catalog, limit_from_cell, limit_poly, lookup, Comparison};
use maps::{apply, parse_input, Input, MAP_NAMES};
use params::{describe, grid, Cell, Given, Span};

#[derive(Parser)]
#[command(name = "rankpath", version, about = "Partitions with constrained successive ranks")]
struct Cli {
    /// Output format. `json` prints one JSON object per line.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads for grid sweeps.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Largest family the enumerator will walk.
    #[arg(long, global = true, env = "RANKPATH_CAP", default_value_t = DEFAULT_CAP)]
    cap: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Parameters, each a value `a` or an inclusive range `a..b`.
#[derive(Args, Default)]
struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    m: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<Span>,
    #[arg(long, allow_hyphen_values = true)]
    ell: Option<Span>,
    #[arg(long = "N")]
    big_n: Option<Span>,
    #[arg(long)]
    r: Option<Span>,
    #[arg(long = "M")]
    big_m: Option<Span>,
    /// Truncation order.
    #[arg(long = "D")]
    d: Option<Span>,
    #[arg(long)]
    i: Option<Span>,
    #[arg(long)]
    a: Option<Span>,
    #[arg(long)]
    b: Option<Span>,
    /// Flag parameter (0 or 1): complement family or intersecting pairs.
    #[arg(long)]
    c: Option<Span>,
}

impl ParamArgs {
    fn given(&self) -> Given {
        let all = [
            ("m", self.m),
            ("n", self.n),
            ("ell", self.ell),
            ("N", self.big_n),
            ("r", self.r),
            ("M", self.big_m),
            ("D", self.d),
            ("i", self.i),
            ("a", self.a),
            ("b", self.b),
            ("c", self.c),
        ];
        Given(all.into_iter().filter_map(|(k, v)| v.map(|v| (k, v))).collect())
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a registered identity on every cell of a parameter grid.
    Verify {
        /// Identity name; omit with --list to see the catalog.
        identity: Option<String>,
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Apply a map to a partition, boxed partition or path.
    Map {
        map: String,
        /// `[4,3,3]`, `{"parts":[4,3,3],"m":4,"n":6}`, `DDUU` or `2211`.
        #[arg(long)]
        input: String,
        #[arg(long)]
        ell: Option<u32>,
        /// Number of lifts for gamma and gamma-inv.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Print a closed form or a truncated limit.
    Series {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
        /// Drop terms with a larger power of t.
        #[arg(long)]
        t_max: Option<usize>,
    },
    /// List a family: `box` (--m --n), `partitions` (--N) or `paths` (--m ups, --n downs).
    Enumerate {
        family: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        rank_min: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        rank_max: Option<i64>,
        /// Allowed ranks as a comma-separated list, e.g. `0,-1`.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        ranks: Option<Vec<i64>>,
        #[arg(long)]
        no_part: Option<u32>,
        /// Paths: stay at height >= FLOOR.
        #[arg(long, allow_hyphen_values = true)]
        floor: Option<i64>,
        /// Paths: dip below the floor instead.
        #[arg(long)]
        below: bool,
        /// Print only the number of members.
        #[arg(long)]
        count: bool,
    },
    /// Follow f from a partition, or f^l from a boxed partition with --ell.
    Trajectory {
        #[arg(long)]
        input: String,
        #[arg(long)]
        ell: Option<u32>,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
    },
}

struct Ctx {
    format: Format,
    jobs: Option<usize>,
    cap: u64,
}

impl Ctx {
    fn emit(&self, v: &Value) {
        println!("{}", serde_json::to_string(v).expect("json"));
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Ctx {
        format: cli.format,
        jobs: cli.jobs,
        cap: cli.cap,
    };
    let res = match cli.cmd {
        Cmd::Verify { identity, list, params } => verify(&ctx, identity, list, &params.given()),
        Cmd::Map { map, input, ell, k } => map_cmd(&ctx, &map, &input, ell, k).map(|_| true),
        Cmd::Series { name, params, t_max } => series(&ctx, &name, &params.given(), t_max).map(|_| true),
        Cmd::Enumerate {
            family,
            params,
            rank_min,
            rank_max,
            ranks,
            no_part,
            floor,
            below,
            count,
        } => {
            let filters = Filters {
                rank_min,
                rank_max,
                ranks,
                no_part,
                floor,
                below,
            };
            enumerate(&ctx, &family, &params.given(), &filters, count).map(|_| true)
        }
        Cmd::Trajectory { input, ell, steps } => traj_cmd(&ctx, &input, ell, steps).map(|_| true),
    };
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn verify(ctx: &Ctx, identity: Option<String>, list: bool, given: &Given) -> Result<bool> {
    if list || identity.is_none() {
        for id in catalog() {
            let grid: Vec<String> = id.params.iter().map(|p| format!("{}={}", p.name, p.default)).collect();
            match ctx.format {
                Format::Text => println!("{:<20} {}  [{}]", id.name, id.about, grid.join(" ")),
                Format::Json => {
                    let defaults: BTreeMap<&str, String> =
                        id.params.iter().map(|p| (p.name, p.default.to_string())).collect();
                    ctx.emit(&json!({"identity": id.name, "about": id.about, "defaults": defaults}))
                }
            }
        }
        if identity.is_none() && !list {
            bail!("give an identity name");
        }
        return Ok(true);
    }
    let name = identity.expect("checked above");
    let id = lookup(&name).ok_or_else(|| anyhow!("unknown identity `{name}`; see `rankpath verify --list`"))?;
    for k in given.0.keys() {
        if !id.params.iter().any(|p| p.name == *k) {
            bail!("identity {name} takes no --{k}");
        }
    }
    let mut spans = Vec::new();
    for p in &id.params {
        let s = given.get(p.name).unwrap_or(p.default);
        if s.lo < p.min {
            bail!("--{} must be at least {}, got {s}", p.name, p.min);
        }
        spans.push((p.name, s));
    }
    let cells = grid(&spans);
    let oracle = Oracle::new(ctx.cap, Exec::Sequential);
    let start = Instant::now();
    let results: Vec<(Cell, std::result::Result<Comparison, CoreError>)> = with_jobs(ctx.jobs, || {
        Exec::Parallel.map(cells, |c| {
            let r = (id.check)(&oracle, &c);
            (c, r)
        })
    });

    let mut rows = Vec::new();
    let (mut pass, mut fail, mut skipped) = (0, 0, 0);
    let mut counterexample = None;
    for (cell, r) in results {
        let params: BTreeMap<&str, i64> = cell.iter().map(|(k, v)| (*k, *v)).collect();
        let row = match r {
            Ok(cmp) => match cmp.mismatch(&oracle) {
                None => {
                    pass += 1;
                    json!({
                        "params": params,
                        "status": "pass",
                        "formula": cmp.formula.render(),
                        "oracle": cmp.oracle.render(),
                    })
                }
                Some(mm) => {
                    fail += 1;
                    let detail = json!({
                        "params": params,
                        "formula": cmp.formula.render(),
                        "oracle": cmp.oracle.render(),
                        "at": mm.at,
                        "formula_coeff": mm.formula_coeff,
                        "oracle_coeff": mm.oracle_coeff,
                        "object": mm.witness,
                    });
                    if counterexample.is_none() {
                        counterexample = Some(detail.clone());
                    }
                    json!({"params": params, "status": "fail", "detail": detail})
                }
            },
            Err(CoreError::Precondition(msg)) | Err(CoreError::Domain(msg)) => {
                skipped += 1;
                json!({"params": params, "status": "skipped", "reason": msg})
            }
            Err(e) => return Err(anyhow!(e).context(format!("cell {}", describe(&cell)))),
        };
        rows.push(row);
    }
    let seconds = start.elapsed().as_secs_f64();
    let grid_desc: BTreeMap<&str, String> = spans.iter().map(|(k, s)| (*k, s.to_string())).collect();
    let ok = fail == 0;
    match ctx.format {
        Format::Json => ctx.emit(&json!({
            "identity": name,
            "grid": grid_desc,
            "cells": rows,
            "passed": pass,
            "failed": fail,
            "skipped": skipped,
            "counterexample": counterexample,
            "seconds": seconds,
            "status": if ok { "pass" } else { "fail" },
        })),
        Format::Text => {
            let g: Vec<String> = spans.iter().map(|(k, s)| format!("{k}={s}")).collect();
            println!("{name}  {}", g.join(" "));
            println!(
                "  {} cells: {pass} pass, {fail} fail, {skipped} skipped ({seconds:.2}s)",
                pass + fail + skipped
            );
            if let Some(ce) = &counterexample {
                let cell: Vec<String> = ce["params"]
                    .as_object()
                    .expect("params object")
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                println!("  first counterexample at {}", cell.join(" "));
                println!("    formula: {}", ce["formula"].as_str().unwrap_or(""));
                println!("    oracle:  {}", ce["oracle"].as_str().unwrap_or(""));
                println!(
                    "    differs at {}: formula {}, oracle {}",
                    ce["at"], ce["formula_coeff"].as_str().unwrap_or(""), ce["oracle_coeff"].as_str().unwrap_or("")
                );
                if !ce["object"].is_null() {
                    println!("    object: {}", ce["object"]);
                }
            }
            println!("  {}", if ok { "PASS" } else { "FAIL" });
        }
    }
    Ok(ok)
}

fn map_cmd(ctx: &Ctx, map: &str, input: &str, ell: Option<u32>, k: usize) -> Result<()> {
    if !MAP_NAMES.contains(&map) {
        bail!("unknown map `{map}`; known maps: {}", MAP_NAMES.join(", "));
    }
    let inp = parse_input(input).context("reading --input")?;
    let out = apply(map, &inp, ell, k)?;
    match ctx.format {
        Format::Json => {
            let mut v = json!({
                "map": map,
                "input": inp.to_json(),
                "output": out.output.to_json(),
                "stats": {"input": inp.stats(), "output": out.output.stats()},
            });
            if let Some((key, extra)) = out.extra {
                v[key] = extra;
            }
            ctx.emit(&v);
        }
        Format::Text => {
            println!("{}", out.output.render());
            let show = |label: &str, x: &Input| {
                let s = x.stats();
                let parts: Vec<String> = s
                    .as_object()
                    .expect("stats object")
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                println!("  {label}: {}", parts.join(" "));
            };
            show("input ", &inp);
            show("output", &out.output);
        }
    }
    Ok(())
}

enum SeriesOut {
    Q(QPoly),
    Qt(QTPoly),
    S(TruncatedSeries),
}

fn series(ctx: &Ctx, name: &str, given: &Given, t_max: Option<usize>) -> Result<()> {
    let mi = || given.one("m");
    let ni = || given.one("n");
    let li = || given.one("ell");
    let out = match name {
        "catalan-qt" => SeriesOut::Qt(catalan_qt(given.u32("n")?)),
        "rank-parity" => SeriesOut::S(rank_parity_closed_form(given.opt_u32("D")?.unwrap_or(6))?),
        "thm-lopsided" => SeriesOut::Qt(thm_lopsided(mi()?, ni()?, li()?)?),
        "thm-central-dsq" => SeriesOut::Qt(thm_central_dsq(mi()?, ni()?, li()?)?),
        "thm-central-drect" => SeriesOut::Qt(thm_central_drect(mi()?, ni()?, li()?)?),
        "thm-box-t1" => SeriesOut::Q(thm_box_t1(mi()?, ni()?, li()?)?),
        "keith-km" => SeriesOut::Qt(keith_km(mi()?, ni()?, li()?)?),
        "fh" => SeriesOut::Qt(fh_formula(mi()?, ni()?, given.opt_one("c")?.unwrap_or(0) != 0)?),
        "box-area" => SeriesOut::Q(qbinom(mi()? + ni()?, ni()?)),
        "box-dsq" => SeriesOut::Qt(dsq_box_formula(mi()?, ni()?)),
        "box-drect" => SeriesOut::Qt(drect_box_formula(mi()?, ni()?)),
        "rr-box" => SeriesOut::Qt(rr_box(mi()?, ni()?)?),
        "ex83-box" => SeriesOut::Qt(ex83_box(mi()?, ni()?)?),
        _ if LIMIT_NAMES.contains(&name) => {
            let mut cell = Cell::new();
            for k in ["b", "m", "ell", "a"] {
                if let Some(v) = given.opt_u32(k)? {
                    cell.insert(k, v as i64);
                }
            }
            let lim = limit_from_cell(name, &cell)?;
            let order = given.opt_u32("D")?.unwrap_or(10);
            let p = limit_poly(lim, order)?;
            if lim.has_t() {
                SeriesOut::Qt(p)
            } else {
                SeriesOut::Q(p.t_coeff(0))
            }
        }
        _ => {
            let mut known = vec!["catalan-qt", "rank-parity", "thm-lopsided", "thm-central-dsq", "thm-central-drect"];
            known.extend(["thm-box-t1", "keith-km", "fh", "box-area", "box-dsq", "box-drect", "rr-box", "ex83-box"]);
            known.extend(LIMIT_NAMES);
            bail!("unknown series `{name}`; known: {}", known.join(", "));
        }
    };
    let out = match (out, t_max) {
        (SeriesOut::Qt(p), Some(t)) => {
            let mut cut = QTPoly::zero();
            for (&i, q) in p.terms().range(..=t) {
                cut.add_term(i, q);
            }
            SeriesOut::Qt(cut)
        }
        (SeriesOut::S(s), Some(t)) => {
            let vars: Vec<&str> = s.vars().iter().map(String::as_str).collect();
            let ti = vars.iter().position(|v| *v == "t");
            let mut cut = TruncatedSeries::zero(&vars, s.trunc_var(), s.order())?;
            for (e, c) in s.terms() {
                if ti.is_none_or(|ti| e[ti] as usize <= t) {
                    cut.add_term(e.clone(), c.clone());
                }
            }
            SeriesOut::S(cut)
        }
        (o, _) => o,
    };
    match ctx.format {
        Format::Text => match &out {
            SeriesOut::Q(p) => println!("{p}"),
            SeriesOut::Qt(p) => println!("{p}"),
            SeriesOut::S(s) => println!("{s}"),
        },
        Format::Json => {
            let value = match &out {
                SeriesOut::Q(p) => p.to_json(),
                SeriesOut::Qt(p) => p.to_json(),
                SeriesOut::S(s) => s.to_json(),
            };
            let text = match &out {
                SeriesOut::Q(p) => p.to_string(),
                SeriesOut::Qt(p) => p.to_string(),
                SeriesOut::S(s) => s.to_string(),
            };
            ctx.emit(&json!({"series": name, "value": value, "text": text}));
        }
    }
    Ok(())
}

struct Filters {
    rank_min: Option<i64>,
    rank_max: Option<i64>,
    ranks: Option<Vec<i64>>,
    no_part: Option<u32>,
    floor: Option<i64>,
    below: bool,
}

fn family(name: &str, given: &Given, fl: &Filters) -> Result<FamilySpec> {
    let mut spec = match name {
        "box" => FamilySpec::in_box(given.u32("m")?, given.u32("n")?),
        "partitions" => FamilySpec::of_n(given.u32("N")?),
        "paths" => FamilySpec::paths(given.u32("m")?, given.u32("n")?),
        _ => bail!("unknown family `{name}`; use box, partitions or paths"),
    };
    let rank = match (&fl.ranks, fl.rank_min, fl.rank_max) {
        (Some(set), None, None) => Some(RankConstraint::finite(set.iter().copied())?),
        (Some(_), _, _) => bail!("--ranks cannot be combined with --rank-min or --rank-max"),
        (None, Some(lo), Some(hi)) => Some(RankConstraint::interval(lo, hi)?),
        (None, Some(lo), None) => Some(RankConstraint::AtLeast(lo)),
        (None, None, Some(hi)) => Some(RankConstraint::AtMost(hi)),
        (None, None, None) => None,
    };
    if let Some(c) = rank {
        spec = spec.ranks(c);
    }
    if let Some(k) = fl.no_part {
        spec = spec.parts(PartFilter::ForbidPart(k));
    }
    match (fl.floor, fl.below) {
        (Some(f), below) => spec = spec.above(f, below),
        (None, true) => bail!("--below needs --floor"),
        (None, false) => {}
    }
    spec.kind()?;
    Ok(spec)
}

fn enumerate(ctx: &Ctx, name: &str, given: &Given, fl: &Filters, count: bool) -> Result<()> {
    let spec = family(name, given, fl)?;
    let oracle = Oracle::new(ctx.cap, Exec::Parallel);
    if count {
        let c = with_jobs(ctx.jobs, || oracle.count(&spec))?;
        match ctx.format {
            Format::Text => println!("{c}"),
            Format::Json => ctx.emit(&json!({"count": c})),
        }
        return Ok(());
    }
    for obj in oracle.enumerate(&spec)? {
        match ctx.format {
            Format::Text => match &obj {
                Object::Partition(p) => println!("{p}"),
                Object::Path(w) => println!("{w}"),
            },
            Format::Json => ctx.emit(&serde_json::to_value(&obj)?),
        }
    }
    Ok(())
}

fn traj_cmd(ctx: &Ctx, input: &str, ell: Option<u32>, steps: usize) -> Result<()> {
    let states = match (parse_input(input).context("reading --input")?, ell) {
        (Input::Boxed(b), Some(l)) => f_iter(&b, l)?.1.states,
        (Input::Boxed(b), None) => trajectory(b.partition(), steps).states,
        (Input::Partition(p), None) => trajectory(&p, steps).states,
        (Input::Partition(_), Some(_)) => bail!("--ell needs a boxed partition"),
        (Input::Word(_), _) => bail!("trajectory expects a partition"),
    };
    for (k, s) in states.iter().enumerate() {
        match ctx.format {
            Format::Json => {
                let mut v = serde_json::to_value(s)?;
                v["step"] = json!(k);
                ctx.emit(&v);
            }
            Format::Text => {
                let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
                println!(
                    "{k:>3}  {:<24} tau={:<3} i={:<3} d={} dr={} area={}",
                    s.partition.to_string(),
                    opt(s.tau.map(|t| t.to_string())),
                    opt(s.index.map(|t| t.to_string())),
                    s.d,
                    s.dr,
                    s.area
                );
            }
        }
    }
    Ok(())
}
