//! Words over `{1,2}` read as lattice paths.
//!
//! A `1` is an up step `U = (1,1)` and a `2` is a down step `D = (1,−1)`;
//! paths start at the origin. Positions are 1-based: the vertex reached after
//! step `x` sits at abscissa `x`. A valley is a vertex entered by `D` and left
//! by `U`, a peak the reverse.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    U,
    D,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::U => Step::D,
            Step::D => Step::U,
        }
    }

    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
        }
    }

    pub fn digit(self) -> char {
        match self {
            Step::U => '1',
            Step::D => '2',
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct StepWord {
    steps: Vec<Step>,
}

/// A vertex of a path, `x` its 1-based abscissa and `h` its height.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub x: usize,
    pub h: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathProfile {
    pub valleys: Vec<Vertex>,
    pub peaks: Vec<Vertex>,
    pub min_height: i64,
    pub des: usize,
    pub maj: u64,
    pub hdes: usize,
    pub hmaj: u64,
    pub inv: u64,
}

/// Parenthesis matching with `1` as an opening and `2` as a closing bracket.
/// Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepMatching {
    pub pairs: Vec<(usize, usize)>,
    pub unmatched_twos: Vec<usize>,
    pub unmatched_ones: Vec<usize>,
}

impl StepWord {
    pub fn from_steps(steps: Vec<Step>) -> Self {
        StepWord { steps }
    }

    pub fn empty() -> Self {
        StepWord { steps: Vec::new() }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn ups(&self) -> usize {
        self.steps.iter().filter(|&&s| s == Step::U).count()
    }

    pub fn downs(&self) -> usize {
        self.steps.len() - self.ups()
    }

    /// Heights after each prefix, starting with the empty prefix.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = 0;
        h.push(cur);
        for s in &self.steps {
            cur += s.delta();
            h.push(cur);
        }
        h
    }

    pub fn final_height(&self) -> i64 {
        self.ups() as i64 - self.downs() as i64
    }

    pub fn min_height(&self) -> i64 {
        let mut cur = 0;
        let mut min = 0;
        for s in &self.steps {
            cur += s.delta();
            min = min.min(cur);
        }
        min
    }

    pub fn valleys(&self) -> Vec<Vertex> {
        self.turns(Step::D)
    }

    pub fn peaks(&self) -> Vec<Vertex> {
        self.turns(Step::U)
    }

    fn turns(&self, first: Step) -> Vec<Vertex> {
        let mut out = Vec::new();
        let mut h = 0;
        for (i, w) in self.steps.windows(2).enumerate() {
            h += w[0].delta();
            if w[0] == first && w[1] == first.flip() {
                out.push(Vertex { x: i + 1, h });
            }
        }
        out
    }

    pub fn des(&self) -> usize {
        self.valleys().len()
    }

    pub fn maj(&self) -> u64 {
        self.valleys().iter().map(|v| v.x as u64).sum()
    }

    pub fn inv(&self) -> u64 {
        let mut downs = 0u64;
        let mut inv = 0u64;
        for s in &self.steps {
            match s {
                Step::D => downs += 1,
                Step::U => inv += downs,
            }
        }
        inv
    }

    pub fn profile(&self) -> PathProfile {
        let valleys = self.valleys();
        let peaks = self.peaks();
        PathProfile {
            des: valleys.len(),
            maj: valleys.iter().map(|v| v.x as u64).sum(),
            hdes: peaks.len(),
            hmaj: peaks.iter().map(|v| v.x as u64).sum(),
            min_height: self.min_height(),
            inv: self.inv(),
            valleys,
            peaks,
        }
    }

    /// Single stack pass; agrees with repeatedly deleting adjacent `12` pairs.
    pub fn match_steps(&self) -> StepMatching {
        let mut open = Vec::new();
        let mut pairs = Vec::new();
        let mut unmatched_twos = Vec::new();
        for (i, s) in self.steps.iter().enumerate() {
            match s {
                Step::U => open.push(i + 1),
                Step::D => match open.pop() {
                    Some(j) => pairs.push((j, i + 1)),
                    None => unmatched_twos.push(i + 1),
                },
            }
        }
        StepMatching {
            pairs,
            unmatched_twos,
            unmatched_ones: open,
        }
    }

    /// Swap `U` and `D`, reflecting the path in the x-axis.
    pub fn reflect(&self) -> StepWord {
        StepWord {
            steps: self.steps.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Reflect, then replace each excursion below the axis, necessarily of
    /// the form `D^i U^i`, by `(UD)^i`. Sends paths with equal step counts and
    /// every valley at height `≤ −2` onto Dyck paths.
    pub fn block_bijection(&self) -> Result<StepWord> {
        if self.ups() != self.downs() {
            return Err(Error::Domain(format!(
                "block bijection needs equal step counts, got {} U and {} D",
                self.ups(),
                self.downs()
            )));
        }
        if let Some(v) = self.valleys().iter().find(|v| v.h > -2) {
            return Err(Error::Domain(format!(
                "block bijection needs every valley at height <= -2, valley at ({}, {})",
                v.x, v.h
            )));
        }
        let r = self.reflect().steps;
        let mut out = Vec::with_capacity(r.len());
        let mut h = 0i64;
        let mut i = 0;
        while i < r.len() {
            if h == 0 && r[i] == Step::D {
                let depth = r[i..].iter().take_while(|&&s| s == Step::D).count();
                for _ in 0..depth {
                    out.push(Step::U);
                    out.push(Step::D);
                }
                i += 2 * depth;
            } else {
                h += r[i].delta();
                out.push(r[i]);
                i += 1;
            }
        }
        Ok(StepWord { steps: out })
    }

    pub fn to_digits(&self) -> String {
        self.steps.iter().map(|s| s.digit()).collect()
    }

    pub fn to_letters(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }
}

impl FromStr for StepWord {
    type Err = Error;

    /// Accepts `1`/`U` for up steps and `2`/`D` for down steps; whitespace is
    /// ignored.
    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(s.len());
        for c in s.chars().filter(|c| !c.is_whitespace()) {
            steps.push(match c {
                '1' | 'U' | 'u' => Step::U,
                '2' | 'D' | 'd' => Step::D,
                _ => return Err(Error::InvalidWord(format!("unexpected character {c:?} in {s:?}"))),
            });
        }
        Ok(StepWord { steps })
    }
}

impl TryFrom<String> for StepWord {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<StepWord> for String {
    fn from(w: StepWord) -> Self {
        w.to_letters()
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_letters())
    }
}
