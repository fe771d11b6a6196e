//! Integer partitions, their conjugates, Durfee data and successive ranks.
//!
//! Parts are stored largest first. The successive ranks of `λ` are
//! `r_i = λ_i − λ'_i` for `1 ≤ i ≤ d(λ)`, where `d` is the side of the Durfee
//! square.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::{Step, StepWord};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition { parts })
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts the input and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.part(1)
    }

    pub fn area(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest() as usize;
        let mut conj = vec![0u32; width];
        for &p in &self.parts {
            for c in conj.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Partition { parts: conj }
    }

    /// Side of the Durfee square.
    pub fn durfee(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count() as u32
    }

    /// Height of the Durfee rectangle, the largest `i` with `λ_i ≥ i + 1`.
    pub fn durfee_rect(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i + 1)
            .count() as u32
    }

    pub fn ranks(&self) -> Vec<i64> {
        let d = self.durfee() as usize;
        let conj = self.conjugate();
        (0..d)
            .map(|i| self.parts[i] as i64 - conj.parts[i] as i64)
            .collect()
    }

    /// Minimum successive rank, `None` for partitions without ranks.
    pub fn min_rank(&self) -> Option<i64> {
        self.ranks().into_iter().min()
    }

    pub fn hook_decomposition(&self) -> HookDecomposition {
        let d = self.durfee() as usize;
        let conj = self.conjugate();
        let mut a = vec![0u32; d];
        let mut b = vec![0u32; d];
        for j in 1..=d {
            a[d - j] = self.parts[j - 1] - j as u32 + 1;
            b[d - j] = conj.parts[j - 1] - j as u32;
        }
        HookDecomposition { a, b }
    }

    pub fn satisfies(&self, c: &RankConstraint) -> bool {
        self.ranks().iter().all(|&r| c.contains(r))
    }

    pub fn fits(&self, m: u32, n: u32) -> bool {
        self.parts.len() <= m as usize && self.largest() <= n
    }

    pub fn boxed(self, m: u32, n: u32) -> Result<BoxedPartition> {
        BoxedPartition::new(self, m, n)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A partition together with an `m × n` bounding box (`m` rows, `n` columns).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBoxed", into = "RawBoxed")]
pub struct BoxedPartition {
    partition: Partition,
    m: u32,
    n: u32,
}

#[derive(Serialize, Deserialize)]
struct RawBoxed {
    parts: Vec<u32>,
    m: u32,
    n: u32,
}

impl TryFrom<RawBoxed> for BoxedPartition {
    type Error = Error;
    fn try_from(raw: RawBoxed) -> Result<Self> {
        BoxedPartition::new(Partition::new(raw.parts)?, raw.m, raw.n)
    }
}

impl From<BoxedPartition> for RawBoxed {
    fn from(bp: BoxedPartition) -> Self {
        RawBoxed {
            parts: bp.partition.parts,
            m: bp.m,
            n: bp.n,
        }
    }
}

impl BoxedPartition {
    pub fn new(partition: Partition, m: u32, n: u32) -> Result<Self> {
        if !partition.fits(m, n) {
            return Err(Error::BoxViolation {
                parts: partition.parts,
                m,
                n,
            });
        }
        Ok(BoxedPartition { partition, m, n })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_partition(self) -> Partition {
        self.partition
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The conjugate partition in the transposed `n × m` box.
    pub fn transpose(&self) -> BoxedPartition {
        BoxedPartition {
            partition: self.partition.conjugate(),
            m: self.n,
            n: self.m,
        }
    }

    /// Boundary word traced from the lower-left corner: `1` for a step up the
    /// boundary, `2` for a step right. It has `m` ones, `n` twos and
    /// `inv = |λ|`.
    pub fn to_word(&self) -> StepWord {
        let parts = self.partition.parts();
        let k = parts.len();
        let mut steps = Vec::with_capacity((self.m + self.n) as usize);
        steps.extend(std::iter::repeat_n(Step::U, self.m as usize - k));
        for i in (0..k).rev() {
            let below = if i + 1 < k { parts[i + 1] } else { 0 };
            steps.extend(std::iter::repeat_n(Step::D, (parts[i] - below) as usize));
            steps.push(Step::U);
        }
        steps.extend(std::iter::repeat_n(Step::D, (self.n - self.partition.largest()) as usize));
        StepWord::from_steps(steps)
    }

    /// Inverse of [`BoxedPartition::to_word`]: each `1` contributes a part
    /// equal to the number of `2`s before it.
    pub fn from_word(w: &StepWord) -> BoxedPartition {
        let mut twos = 0u32;
        let mut parts = Vec::new();
        for s in w.steps() {
            match s {
                Step::D => twos += 1,
                Step::U => {
                    if twos > 0 {
                        parts.push(twos);
                    }
                }
            }
        }
        parts.reverse();
        BoxedPartition {
            partition: Partition::from_parts_unchecked(parts),
            m: w.ups() as u32,
            n: w.downs() as u32,
        }
    }
}

impl fmt::Display for BoxedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}x{}", self.partition, self.m, self.n)
    }
}

/// Arm and leg data of the `d` principal hooks, indexed from the innermost
/// hook: `a_{d+1-j} = λ_j − j + 1`, `b_{d+1-j} = λ'_j − j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HookDecomposition {
    pub a: Vec<u32>,
    pub b: Vec<u32>,
}

impl HookDecomposition {
    pub fn hooks(&self) -> Vec<u32> {
        self.a.iter().zip(&self.b).map(|(a, b)| a + b).collect()
    }
}

/// A set of allowed integers, used for ranks and for valley heights.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankConstraint {
    AtLeast(i64),
    AtMost(i64),
    Interval(i64, i64),
    Finite(BTreeSet<i64>),
}

impl RankConstraint {
    pub fn interval(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidConstraint(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(RankConstraint::Interval(lo, hi))
    }

    pub fn finite<I: IntoIterator<Item = i64>>(values: I) -> Result<Self> {
        let set: BTreeSet<i64> = values.into_iter().collect();
        if set.is_empty() {
            return Err(Error::InvalidConstraint("empty finite set".into()));
        }
        Ok(RankConstraint::Finite(set))
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RankConstraint::Interval(lo, hi) if lo > hi => {
                Err(Error::InvalidConstraint(format!("empty interval [{lo}, {hi}]")))
            }
            RankConstraint::Finite(s) if s.is_empty() => {
                Err(Error::InvalidConstraint("empty finite set".into()))
            }
            _ => Ok(()),
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        match self {
            RankConstraint::AtLeast(b) => x >= *b,
            RankConstraint::AtMost(b) => x <= *b,
            RankConstraint::Interval(lo, hi) => *lo <= x && x <= *hi,
            RankConstraint::Finite(s) => s.contains(&x),
        }
    }

    /// The set `−S − 1`. Ranks in `S` become valley heights in `−S − 1`
    /// under the inverse Foata map.
    pub fn negate_shift(&self) -> RankConstraint {
        match self {
            RankConstraint::AtLeast(b) => RankConstraint::AtMost(-b - 1),
            RankConstraint::AtMost(b) => RankConstraint::AtLeast(-b - 1),
            RankConstraint::Interval(lo, hi) => RankConstraint::Interval(-hi - 1, -lo - 1),
            RankConstraint::Finite(s) => RankConstraint::Finite(s.iter().map(|x| -x - 1).collect()),
        }
    }

    /// The set `S + by`.
    pub fn shift(&self, by: i64) -> RankConstraint {
        match self {
            RankConstraint::AtLeast(b) => RankConstraint::AtLeast(b + by),
            RankConstraint::AtMost(b) => RankConstraint::AtMost(b + by),
            RankConstraint::Interval(lo, hi) => RankConstraint::Interval(lo + by, hi + by),
            RankConstraint::Finite(s) => RankConstraint::Finite(s.iter().map(|x| x + by).collect()),
        }
    }
}

impl fmt::Display for RankConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankConstraint::AtLeast(b) => write!(f, ">={b}"),
            RankConstraint::AtMost(b) => write!(f, "<={b}"),
            RankConstraint::Interval(lo, hi) => write!(f, "[{lo},{hi}]"),
            RankConstraint::Finite(s) => {
                let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                write!(f, "{{{}}}", items.join(","))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Partition::new(vec![]).is_ok());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4, 3, 3]).conjugate(), p(&[3, 3, 3, 1]));
        assert_eq!(p(&[]).conjugate(), p(&[]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn durfee_data() {
        let l = p(&[4, 3, 3]);
        assert_eq!((l.durfee(), l.durfee_rect()), (3, 2));
        assert_eq!((p(&[]).durfee(), p(&[]).durfee_rect()), (0, 0));
        assert_eq!((p(&[1, 1, 1]).durfee(), p(&[1, 1, 1]).durfee_rect()), (1, 0));
    }

    #[test]
    fn ranks_and_hooks() {
        assert_eq!(p(&[4, 4, 3, 3, 1, 1]).ranks(), vec![-2, 0, -1]);
        assert!(p(&[]).ranks().is_empty());
        assert_eq!(p(&[3, 1]).ranks(), vec![1]);

        let h = p(&[6, 6, 5, 4, 4, 4, 1]).hook_decomposition();
        assert_eq!(h.a, vec![1, 3, 5, 6]);
        assert_eq!(h.b, vec![2, 3, 4, 6]);
        let h = p(&[2, 2]).hook_decomposition();
        assert_eq!((h.a, h.b), (vec![1, 2], vec![0, 1]));
    }

    #[test]
    fn words() {
        let bp = p(&[4, 3, 3]).boxed(4, 6).unwrap();
        assert_eq!(bp.to_word().to_digits(), "1222112122");
        assert_eq!(BoxedPartition::from_word(&"1222112122".parse().unwrap()), bp);
        assert_eq!(p(&[]).boxed(2, 2).unwrap().to_word().to_digits(), "1122");
        assert_eq!(p(&[2, 2]).boxed(2, 2).unwrap().to_word().to_digits(), "2211");
        assert!(p(&[3]).boxed(2, 2).is_err());
    }

    #[test]
    fn constraints() {
        assert!(!p(&[4, 4, 3, 3, 1, 1]).satisfies(&RankConstraint::AtLeast(-1)));
        assert!(p(&[]).satisfies(&RankConstraint::finite([7]).unwrap()));
        assert!(p(&[3, 1]).satisfies(&RankConstraint::finite([1]).unwrap()));
        assert!(RankConstraint::interval(2, 1).is_err());
        assert_eq!(
            RankConstraint::Interval(-1, 2).negate_shift(),
            RankConstraint::Interval(-3, 0)
        );
    }

    #[test]
    fn json_shapes() {
        let bp = p(&[4, 3, 3]).boxed(4, 6).unwrap();
        assert_eq!(serde_json::to_string(&bp).unwrap(), r#"{"parts":[4,3,3],"m":4,"n":6}"#);
        assert_eq!(serde_json::to_string(bp.partition()).unwrap(), "[4,3,3]");
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
        assert!(serde_json::from_str::<BoxedPartition>(r#"{"parts":[3],"m":1,"n":2}"#).is_err());
    }
}
