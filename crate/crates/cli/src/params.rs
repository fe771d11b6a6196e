use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, Result};

/// An inclusive integer range written `a`, `a..b` or `a..=b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub fn single(v: i64) -> Self {
        Span { lo: v, hi: v }
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let num = |x: &str| x.trim().parse::<i64>().map_err(|e| format!("bad bound `{x}`: {e}"));
        let span = match s.split_once("..") {
            Some((a, b)) => Span {
                lo: num(a)?,
                hi: num(b.strip_prefix('=').unwrap_or(b))?,
            },
            None => Span::single(num(s)?),
        };
        if span.lo > span.hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

/// Parameter values given on the command line, by name.
#[derive(Clone, Debug, Default)]
pub struct Given(pub BTreeMap<&'static str, Span>);

impl Given {
    pub fn get(&self, name: &str) -> Option<Span> {
        self.0.get(name).copied()
    }

    /// A single value, required.
    pub fn one(&self, name: &str) -> Result<i64> {
        self.opt_one(name)?.ok_or_else(|| anyhow!("missing --{name}"))
    }

    pub fn opt_one(&self, name: &str) -> Result<Option<i64>> {
        match self.get(name) {
            None => Ok(None),
            Some(s) if s.lo == s.hi => Ok(Some(s.lo)),
            Some(s) => bail!("--{name} takes a single value here, got {s}"),
        }
    }

    pub fn opt_u32(&self, name: &str) -> Result<Option<u32>> {
        self.opt_one(name)?
            .map(|v| u32::try_from(v).map_err(|_| anyhow!("--{name} must be a nonnegative integer, got {v}")))
            .transpose()
    }

    pub fn u32(&self, name: &str) -> Result<u32> {
        self.opt_u32(name)?.ok_or_else(|| anyhow!("missing --{name}"))
    }
}

/// One grid point.
pub type Cell = BTreeMap<&'static str, i64>;

/// Cartesian product of the spans, first parameter varying slowest.
pub fn grid(spans: &[(&'static str, Span)]) -> Vec<Cell> {
    let mut cells = vec![Cell::new()];
    for &(name, span) in spans {
        let mut next = Vec::with_capacity(cells.len() * (span.hi - span.lo + 1) as usize);
        for c in &cells {
            for v in span.lo..=span.hi {
                let mut c = c.clone();
                c.insert(name, v);
                next.push(c);
            }
        }
        cells = next;
    }
    cells
}

pub fn describe(cell: &Cell) -> String {
    cell.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}
