//! Registered identities: each pairs a closed-form evaluator with a
//! brute-force side and a default parameter grid.

use std::collections::BTreeSet;

use rankpath::oracle::{lgv_pairs_gf, statistics, FamilySpec, Oracle, QStat, TStat};
use rankpath::qseries::*;
use rankpath::{RankConstraint, Result};
use serde_json::{json, Value};

use crate::params::{Cell, Span};

pub enum Side {
    Poly(QTPoly),
    Count(u64),
    Series(TruncatedSeries),
}

impl Side {
    pub fn render(&self) -> String {
        match self {
            Side::Poly(p) => p.to_string(),
            Side::Count(c) => c.to_string(),
            Side::Series(s) => s.to_string(),
        }
    }
}

pub struct Comparison {
    pub formula: Side,
    pub oracle: Side,
    /// Family and statistics behind the oracle side, used to find a witness.
    pub family: Option<(FamilySpec, TStat, QStat)>,
}

/// Where the two sides first differ.
pub struct Mismatch {
    pub at: Value,
    pub formula_coeff: String,
    pub oracle_coeff: String,
    pub witness: Option<Value>,
}

impl Comparison {
    pub fn mismatch(&self, oracle: &Oracle) -> Option<Mismatch> {
        match (&self.formula, &self.oracle) {
            (Side::Poly(a), Side::Poly(b)) => {
                let keys = |p: &QTPoly| -> BTreeSet<(usize, usize)> {
                    p.terms()
                        .iter()
                        .flat_map(|(&i, q)| (0..q.coeffs().len()).map(move |j| (i, j)))
                        .collect()
                };
                let mut all = keys(a);
                all.extend(keys(b));
                let (i, j) = all.into_iter().find(|&(i, j)| a.coeff(i, j) != b.coeff(i, j))?;
                let witness = self.family.as_ref().and_then(|(spec, t, q)| {
                    oracle
                        .enumerate(spec)
                        .ok()?
                        .find(|o| statistics(o, *t, *q).ok() == Some((i, j)))
                        .and_then(|o| serde_json::to_value(o).ok())
                });
                Some(Mismatch {
                    at: json!({"t": i, "q": j}),
                    formula_coeff: a.coeff(i, j).to_string(),
                    oracle_coeff: b.coeff(i, j).to_string(),
                    witness,
                })
            }
            (Side::Count(a), Side::Count(b)) => (a != b).then(|| Mismatch {
                at: json!("count"),
                formula_coeff: a.to_string(),
                oracle_coeff: b.to_string(),
                witness: None,
            }),
            (Side::Series(a), Side::Series(b)) => {
                let mut all: BTreeSet<&Vec<u32>> = a.terms().keys().collect();
                all.extend(b.terms().keys());
                let e = all.into_iter().find(|e| a.coeff(e) != b.coeff(e))?;
                let at: serde_json::Map<String, Value> =
                    a.vars().iter().zip(e).map(|(v, p)| (v.clone(), json!(p))).collect();
                Some(Mismatch {
                    at: Value::Object(at),
                    formula_coeff: a.coeff(e).to_string(),
                    oracle_coeff: b.coeff(e).to_string(),
                    witness: None,
                })
            }
            _ => Some(Mismatch {
                at: json!("shape"),
                formula_coeff: self.formula.render(),
                oracle_coeff: self.oracle.render(),
                witness: None,
            }),
        }
    }
}

pub struct Param {
    pub name: &'static str,
    pub min: i64,
    pub default: Span,
}

type Check = Box<dyn Fn(&Oracle, &Cell) -> Result<Comparison> + Send + Sync>;

pub struct Identity {
    pub name: &'static str,
    pub about: &'static str,
    pub params: Vec<Param>,
    pub check: Check,
}

fn p(name: &'static str, min: i64, lo: i64, hi: i64) -> Param {
    Param {
        name,
        min,
        default: Span { lo, hi },
    }
}

fn i(c: &Cell, k: &str) -> i64 {
    c[k]
}

fn u(c: &Cell, k: &str) -> u32 {
    c[k] as u32
}

fn by_family(formula: QTPoly, o: &Oracle, spec: FamilySpec, t: TStat, q: QStat) -> Result<Comparison> {
    let oracle = o.gf(&spec, t, q)?;
    Ok(Comparison {
        formula: Side::Poly(formula),
        oracle: Side::Poly(oracle),
        family: Some((spec, t, q)),
    })
}

fn ranks_floor(c: &Cell) -> FamilySpec {
    FamilySpec::in_box(u(c, "m"), u(c, "n")).ranks(RankConstraint::AtLeast(1 - i(c, "ell")))
}

fn finite_ranks(c: &Cell, set: [i64; 2]) -> Result<FamilySpec> {
    Ok(FamilySpec::in_box(u(c, "m"), u(c, "n")).ranks(RankConstraint::finite(set)?))
}

fn counts((a, b): (u64, u64)) -> Comparison {
    Comparison {
        formula: Side::Count(a),
        oracle: Side::Count(b),
        family: None,
    }
}

fn limit_params(name: &str) -> Vec<Param> {
    let mut out = match name {
        "cor-lopsidedlimit" => vec![p("b", 0, 0, 3)],
        "box-t1-strip" | "drect-strip" | "main-limit-strip" => vec![p("m", 0, 1, 4), p("ell", 0, 0, 3)],
        "no-part" | "drect-limit" | "mainlimit" => vec![p("ell", 0, 0, 4)],
        "zero-minus-a-limit" => vec![p("a", 1, 1, 3)],
        _ => vec![],
    };
    out.push(p("D", 0, 10, 10));
    out
}

pub fn limit_from_cell(name: &str, c: &Cell) -> Result<Limit> {
    let get = |k: &str| c.get(k).map(|&v| v as u32);
    Limit::from_name(
        name,
        LimitParams {
            b: get("b"),
            m: get("m"),
            ell: get("ell"),
            a: get("a"),
        },
    )
}

/// The limit as a polynomial in `t` and `q`.
pub fn limit_poly(lim: Limit, order: u32) -> Result<QTPoly> {
    let s = limit_series(lim, order)?;
    if lim.has_t() {
        s.to_qtpoly()
    } else {
        Ok(QTPoly::from_q(s.to_qpoly()?))
    }
}

pub fn catalog() -> Vec<Identity> {
    let mn = |lo, hi| vec![p("m", 0, lo, hi), p("n", 0, lo, hi)];
    let with = |mut v: Vec<Param>, extra: Vec<Param>| {
        v.extend(extra);
        v
    };
    let mut out: Vec<Identity> = vec![
        Identity {
            name: "thm-lopsided",
            about: "ranks >= 1-l in m x n by Durfee square, -n <= l <= 1",
            params: with(mn(0, 6), vec![p("ell", i64::MIN, -3, 1)]),
            check: Box::new(|o, c| {
                let f = thm_lopsided(i(c, "m"), i(c, "n"), i(c, "ell"))?;
                by_family(f, o, ranks_floor(c), TStat::D, QStat::Area)
            }),
        },
        Identity {
            name: "thm-central-dsq",
            about: "ranks >= 1-l in m x n by Durfee square, n+l >= m",
            params: with(mn(0, 6), vec![p("ell", 0, 0, 3)]),
            check: Box::new(|o, c| {
                let f = thm_central_dsq(i(c, "m"), i(c, "n"), i(c, "ell"))?;
                by_family(f, o, ranks_floor(c), TStat::D, QStat::Area)
            }),
        },
        Identity {
            name: "thm-central-drect",
            about: "ranks >= 1-l in m x n by Durfee rectangle, n+l >= m",
            params: vec![p("m", 0, 0, 6), p("n", 0, 1, 6), p("ell", 0, 0, 3)],
            check: Box::new(|o, c| {
                let f = thm_central_drect(i(c, "m"), i(c, "n"), i(c, "ell"))?;
                by_family(f, o, ranks_floor(c), TStat::Dr, QStat::Area)
            }),
        },
        Identity {
            name: "thm-box-t1",
            about: "ranks >= 1-l in m x n by size, n+l >= m",
            params: with(mn(0, 6), vec![p("ell", 0, 0, 3)]),
            check: Box::new(|o, c| {
                let f = QTPoly::from_q(thm_box_t1(i(c, "m"), i(c, "n"), i(c, "ell"))?);
                by_family(f, o, ranks_floor(c), TStat::None, QStat::Area)
            }),
        },
        Identity {
            name: "fh",
            about: "paths with m ups, n downs never below 0 (c=0) or dipping below (c=1), by des and maj",
            params: with(mn(0, 6), vec![p("c", 0, 0, 1)]),
            check: Box::new(|o, c| {
                let below = i(c, "c") != 0;
                if i(c, "m") < i(c, "n") {
                    return Err(rankpath::Error::Precondition("the identity needs m >= n".into()));
                }
                let f = fh_formula(i(c, "m"), i(c, "n"), below)?;
                let spec = FamilySpec::paths(u(c, "m"), u(c, "n")).above(0, below);
                by_family(f, o, spec, TStat::Des, QStat::Maj)
            }),
        },
        Identity {
            name: "keith-km",
            about: "paths with n ups, m downs never below -l, by peaks and peak positions",
            params: vec![p("m", 0, 0, 4), p("n", 0, 3, 6), p("ell", 0, 0, 3)],
            check: Box::new(|o, c| {
                let f = keith_km(i(c, "m"), i(c, "n"), i(c, "ell"))?;
                let spec = FamilySpec::paths(u(c, "n"), u(c, "m")).above(-i(c, "ell"), false);
                by_family(f, o, spec, TStat::Hdes, QStat::Hmaj)
            }),
        },
        Identity {
            name: "box-area",
            about: "partitions in m x n by size",
            params: mn(0, 7),
            check: Box::new(|o, c| {
                let f = QTPoly::from_q(qbinom(i(c, "m") + i(c, "n"), i(c, "n")));
                by_family(f, o, FamilySpec::in_box(u(c, "m"), u(c, "n")), TStat::None, QStat::Area)
            }),
        },
        Identity {
            name: "box-dsq",
            about: "partitions in m x n by Durfee square",
            params: mn(0, 7),
            check: Box::new(|o, c| {
                let f = dsq_box_formula(i(c, "m"), i(c, "n"));
                by_family(f, o, FamilySpec::in_box(u(c, "m"), u(c, "n")), TStat::D, QStat::Area)
            }),
        },
        Identity {
            name: "box-drect",
            about: "partitions in m x n by Durfee rectangle",
            params: vec![p("m", 0, 0, 7), p("n", 0, 1, 7)],
            check: Box::new(|o, c| {
                let f = drect_box_formula(i(c, "m"), i(c, "n"));
                by_family(f, o, FamilySpec::in_box(u(c, "m"), u(c, "n")), TStat::Dr, QStat::Area)
            }),
        },
        Identity {
            name: "rank-floor",
            about: "partitions of N with ranks >= 1-l vs with no part l+1",
            params: vec![p("N", 0, 0, 20), p("ell", 0, 0, 5)],
            check: Box::new(|o, c| Ok(counts(o.rank_floor_counts(u(c, "ell"), u(c, "N"))?))),
        },
        Identity {
            name: "andrews-bressoud",
            about: "partitions of N with ranks in [2-r, M-r-2] vs with no part 0, r, -r mod M",
            params: vec![p("r", 1, 1, 3), p("M", 1, 4, 8), p("N", 0, 0, 20)],
            check: Box::new(|o, c| Ok(counts(o.andrews_bressoud_counts(u(c, "r"), u(c, "M"), u(c, "N"))?))),
        },
        Identity {
            name: "rr-box",
            about: "ranks in {0,-1} in m x n by Durfee square",
            params: mn(0, 6),
            check: Box::new(|o, c| {
                let f = rr_box(i(c, "m"), i(c, "n"))?;
                by_family(f, o, finite_ranks(c, [0, -1])?, TStat::D, QStat::Area)
            }),
        },
        Identity {
            name: "ex83-box",
            about: "ranks in {-1,-2} in m x n by Durfee square, m, n >= 2",
            params: mn(2, 6),
            check: Box::new(|o, c| {
                let f = ex83_box(i(c, "m"), i(c, "n"))?;
                by_family(f, o, finite_ranks(c, [-1, -2])?, TStat::D, QStat::Area)
            }),
        },
        Identity {
            name: "rank-parity",
            about: "closed form in t (odd ranks), u (even ranks), z (box side) vs enumeration",
            params: vec![p("D", 0, 6, 6)],
            check: Box::new(|o, c| {
                Ok(Comparison {
                    formula: Side::Series(rank_parity_closed_form(u(c, "D"))?),
                    oracle: Side::Series(o.rank_parity_gf(u(c, "D"))?),
                    family: None,
                })
            }),
        },
        Identity {
            name: "lgv",
            about: "two-path weights, intersecting (c=1) or not (c=0), vs the product formula",
            params: vec![p("m", 0, 3, 5), p("n", 0, 0, 3), p("ell", 0, 0, 2), p("i", 0, 0, 3), p("c", 0, 0, 1)],
            check: Box::new(|_, c| {
                let meet = i(c, "c") != 0;
                let f = lgv_product(i(c, "m"), i(c, "n"), i(c, "ell"), i(c, "i"), meet)?;
                let b = lgv_pairs_gf(u(c, "m"), u(c, "n"), u(c, "ell"), u(c, "i"), meet)?;
                Ok(Comparison {
                    formula: Side::Poly(QTPoly::from_q(f)),
                    oracle: Side::Poly(QTPoly::from_q(b)),
                    family: None,
                })
            }),
        },
    ];
    for &name in LIMIT_NAMES {
        out.push(Identity {
            name,
            about: "limit series vs partitions of every N <= D",
            params: limit_params(name),
            check: Box::new(move |o, c| {
                let lim = limit_from_cell(name, c)?;
                let d = u(c, "D");
                Ok(Comparison {
                    formula: Side::Poly(limit_poly(lim, d)?),
                    oracle: Side::Poly(o.limit_gf(lim, d)?),
                    family: None,
                })
            }),
        });
    }
    out
}

const ALIASES: &[(&str, &str)] = &[("eq-drPmn", "box-drect"), ("cor-AB", "rank-floor")];

pub fn lookup(name: &str) -> Option<Identity> {
    let name = ALIASES.iter().find(|a| a.0 == name).map_or(name, |a| a.1);
    catalog().into_iter().find(|id| id.name == name)
}
