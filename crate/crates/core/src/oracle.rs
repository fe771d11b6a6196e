//! Brute-force enumeration of partition and path families, and generating
//! functions assembled from them. This is the ground truth the closed forms
//! are checked against, so it is deliberately naive.
//!
//! Families are listed in lexicographic order: partitions as part sequences
//! (`∅, (1), (1,1), (2), …`) and paths with `U < D`. Enumeration is split into
//! shards by first part or by a short prefix of steps; shards are
//! independent and can be processed in parallel.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foata::phi_inv_of_partition;
use crate::par::Exec;
use crate::partition::{Partition, RankConstraint};
use crate::qseries::{Limit, QPoly, QTPoly, TruncatedSeries};
use crate::word::{Step, StepWord};

pub const DEFAULT_CAP: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartFilter {
    /// No part equal to the given size.
    ForbidPart(u32),
    /// No part congruent to any listed residue.
    ForbidResidues { modulus: u32, residues: BTreeSet<u32> },
}

impl PartFilter {
    fn allows(&self, p: &Partition) -> bool {
        match self {
            PartFilter::ForbidPart(k) => !p.parts().contains(k),
            PartFilter::ForbidResidues { modulus, residues } => {
                p.parts().iter().all(|x| !residues.contains(&(x % modulus)))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilySpec {
    /// Partitions with at most `m` parts, each at most `n`.
    PartitionsInBox { m: u32, n: u32 },
    /// Partitions of `n`.
    PartitionsOfN { n: u32 },
    /// Paths with `ups` up steps and `downs` down steps.
    PathsInGrid { ups: u32, downs: u32 },
    /// Partitions whose successive ranks all lie in the constraint.
    RankFiltered { base: Box<FamilySpec>, constraint: RankConstraint },
    /// Paths whose valley heights all lie in the constraint.
    ValleyFiltered { base: Box<FamilySpec>, heights: RankConstraint },
    /// Paths never going below `floor`, or, with `complement`, those that do.
    AboveLine { base: Box<FamilySpec>, floor: i64, complement: bool },
    /// Partitions passing a part filter.
    PartsFiltered { base: Box<FamilySpec>, filter: PartFilter },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Partitions,
    Paths,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Object {
    Partition(Partition),
    Path(StepWord),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TStat {
    /// Durfee square.
    D,
    /// Durfee rectangle.
    Dr,
    /// Number of valleys.
    Des,
    /// Number of peaks.
    Hdes,
    None,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum QStat {
    /// Size of a partition, or `inv` of a path.
    Area,
    Maj,
    Hmaj,
}

impl FamilySpec {
    pub fn in_box(m: u32, n: u32) -> Self {
        FamilySpec::PartitionsInBox { m, n }
    }

    pub fn of_n(n: u32) -> Self {
        FamilySpec::PartitionsOfN { n }
    }

    pub fn paths(ups: u32, downs: u32) -> Self {
        FamilySpec::PathsInGrid { ups, downs }
    }

    pub fn ranks(self, constraint: RankConstraint) -> Self {
        FamilySpec::RankFiltered {
            base: Box::new(self),
            constraint,
        }
    }

    pub fn valleys(self, heights: RankConstraint) -> Self {
        FamilySpec::ValleyFiltered {
            base: Box::new(self),
            heights,
        }
    }

    pub fn above(self, floor: i64, complement: bool) -> Self {
        FamilySpec::AboveLine {
            base: Box::new(self),
            floor,
            complement,
        }
    }

    pub fn parts(self, filter: PartFilter) -> Self {
        FamilySpec::PartsFiltered {
            base: Box::new(self),
            filter,
        }
    }

    fn base(&self) -> &FamilySpec {
        match self {
            FamilySpec::RankFiltered { base, .. }
            | FamilySpec::ValleyFiltered { base, .. }
            | FamilySpec::AboveLine { base, .. }
            | FamilySpec::PartsFiltered { base, .. } => base.base(),
            leaf => leaf,
        }
    }

    /// Object kind, checking that every filter applies to it.
    pub fn kind(&self) -> Result<Kind> {
        let expect = |base: &FamilySpec, want: Kind, what: &str| -> Result<Kind> {
            let k = base.kind()?;
            if k != want {
                return Err(Error::Precondition(format!("{what} filter applied to {k:?}")));
            }
            Ok(k)
        };
        match self {
            FamilySpec::PartitionsInBox { .. } | FamilySpec::PartitionsOfN { .. } => Ok(Kind::Partitions),
            FamilySpec::PathsInGrid { .. } => Ok(Kind::Paths),
            FamilySpec::RankFiltered { base, constraint } => {
                constraint.validate()?;
                expect(base, Kind::Partitions, "rank")
            }
            FamilySpec::PartsFiltered { base, .. } => expect(base, Kind::Partitions, "part"),
            FamilySpec::ValleyFiltered { base, heights } => {
                heights.validate()?;
                expect(base, Kind::Paths, "valley")
            }
            FamilySpec::AboveLine { base, .. } => expect(base, Kind::Paths, "line"),
        }
    }

    /// Size of the unfiltered base family, saturating.
    pub fn base_size(&self) -> u128 {
        match self.base() {
            FamilySpec::PartitionsInBox { m, n } => binomial(*m as u128 + *n as u128, *n as u128),
            FamilySpec::PartitionsOfN { n } => partition_count(*n),
            FamilySpec::PathsInGrid { ups, downs } => binomial(*ups as u128 + *downs as u128, *ups as u128),
            _ => unreachable!("base() returns a leaf"),
        }
    }

    pub fn accepts(&self, obj: &Object) -> bool {
        match (self, obj) {
            (FamilySpec::RankFiltered { base, constraint }, Object::Partition(p)) => {
                base.accepts(obj) && p.satisfies(constraint)
            }
            (FamilySpec::PartsFiltered { base, filter }, Object::Partition(p)) => {
                base.accepts(obj) && filter.allows(p)
            }
            (FamilySpec::ValleyFiltered { base, heights }, Object::Path(w)) => {
                base.accepts(obj) && w.valleys().iter().all(|v| heights.contains(v.h))
            }
            (FamilySpec::AboveLine { base, floor, complement }, Object::Path(w)) => {
                base.accepts(obj) && ((w.min_height() >= *floor) != *complement)
            }
            (FamilySpec::PartitionsInBox { .. }, Object::Partition(_))
            | (FamilySpec::PartitionsOfN { .. }, Object::Partition(_))
            | (FamilySpec::PathsInGrid { .. }, Object::Path(_)) => true,
            _ => false,
        }
    }

    fn shards(&self) -> Vec<Shard> {
        match self.base() {
            FamilySpec::PartitionsInBox { m, n } => {
                let mut out = vec![Shard::Single(Object::Partition(Partition::empty()))];
                if *m >= 1 {
                    for v in 1..=*n {
                        out.push(Shard::Parts(PartGen::new(vec![v], *m as usize, *n, None)));
                    }
                }
                out
            }
            FamilySpec::PartitionsOfN { n } => {
                if *n == 0 {
                    return vec![Shard::Single(Object::Partition(Partition::empty()))];
                }
                (1..=*n)
                    .map(|v| Shard::Parts(PartGen::new(vec![v], usize::MAX, *n, Some(*n))))
                    .collect()
            }
            FamilySpec::PathsInGrid { ups, downs } => {
                let len = (ups + downs) as usize;
                let k = len.min(4);
                let mut out = Vec::new();
                for mask in 0..(1u32 << k) {
                    // Bits read most significant first so shards come out in
                    // lexicographic order, with U < D.
                    let prefix: Vec<Step> = (0..k)
                        .map(|b| if mask >> (k - 1 - b) & 1 == 1 { Step::D } else { Step::U })
                        .collect();
                    let d = prefix.iter().filter(|&&s| s == Step::D).count() as u32;
                    let u = k as u32 - d;
                    if u <= *ups && d <= *downs {
                        out.push(Shard::Paths(PathGen::new(prefix, ups - u, downs - d)));
                    }
                }
                out
            }
            _ => unreachable!("base() returns a leaf"),
        }
    }
}

#[derive(Clone, Debug)]
enum Shard {
    Single(Object),
    Parts(PartGen),
    Paths(PathGen),
}

impl Shard {
    fn into_iter(self) -> Box<dyn Iterator<Item = Object> + Send> {
        match self {
            Shard::Single(o) => Box::new(std::iter::once(o)),
            Shard::Parts(g) => Box::new(g.map(|p| Object::Partition(Partition::from_parts_unchecked(p)))),
            Shard::Paths(g) => Box::new(g.map(|s| Object::Path(StepWord::from_steps(s)))),
        }
    }
}

/// Preorder walk of the tree of partitions below a fixed prefix, children
/// by increasing next part. With a target, only partitions of that size are
/// emitted and branches exceeding it are pruned.
#[derive(Clone, Debug)]
struct PartGen {
    parts: Vec<u32>,
    sum: u32,
    floor: usize,
    max_parts: usize,
    max_part: u32,
    target: Option<u32>,
    started: bool,
    done: bool,
}

impl PartGen {
    fn new(prefix: Vec<u32>, max_parts: usize, max_part: u32, target: Option<u32>) -> Self {
        let sum = prefix.iter().sum();
        let done = prefix.len() > max_parts || target.is_some_and(|t| sum > t);
        PartGen {
            floor: prefix.len(),
            parts: prefix,
            sum,
            max_parts,
            max_part,
            target,
            started: false,
            done,
        }
    }

    fn fits(&self, add: u32) -> bool {
        self.target.is_none_or(|t| self.sum + add <= t)
    }

    fn bound(&self) -> u32 {
        self.parts.last().copied().unwrap_or(self.max_part).min(self.max_part)
    }

    fn advance(&mut self) {
        if self.parts.len() < self.max_parts && self.bound() >= 1 && self.fits(1) {
            self.parts.push(1);
            self.sum += 1;
            return;
        }
        loop {
            if self.parts.len() <= self.floor {
                self.done = true;
                return;
            }
            let x = self.parts.pop().expect("nonempty above floor");
            self.sum -= x;
            if x < self.bound() && self.fits(x + 1) {
                self.parts.push(x + 1);
                self.sum += x + 1;
                return;
            }
        }
    }

    fn emit(&self) -> bool {
        self.target.is_none_or(|t| self.sum == t)
    }
}

impl Iterator for PartGen {
    type Item = Vec<u32>;
    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.emit() {
                return Some(self.parts.clone());
            }
        }
        loop {
            self.advance();
            if self.done {
                return None;
            }
            if self.emit() {
                return Some(self.parts.clone());
            }
        }
    }
}

/// All arrangements of the remaining steps after a fixed prefix, in
/// lexicographic order.
#[derive(Clone, Debug)]
struct PathGen {
    steps: Vec<Step>,
    floor: usize,
    started: bool,
    done: bool,
}

impl PathGen {
    fn new(prefix: Vec<Step>, ups: u32, downs: u32) -> Self {
        let floor = prefix.len();
        let mut steps = prefix;
        steps.extend(std::iter::repeat_n(Step::U, ups as usize));
        steps.extend(std::iter::repeat_n(Step::D, downs as usize));
        PathGen {
            steps,
            floor,
            started: false,
            done: false,
        }
    }

    fn next_permutation(&mut self) -> bool {
        let s = &mut self.steps[self.floor..];
        if s.len() < 2 {
            return false;
        }
        let mut i = s.len() - 1;
        while i > 0 && s[i - 1] >= s[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = s.len() - 1;
        while s[j] <= s[i - 1] {
            j -= 1;
        }
        s.swap(i - 1, j);
        s[i..].reverse();
        true
    }
}

impl Iterator for PathGen {
    type Item = Vec<Step>;
    fn next(&mut self) -> Option<Vec<Step>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.steps.clone());
        }
        if self.next_permutation() {
            Some(self.steps.clone())
        } else {
            self.done = true;
            None
        }
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(x) => x / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn partition_count(n: u32) -> u128 {
    let n = n as usize;
    let mut p = vec![0u128; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for s in part..=n {
            p[s] = p[s].saturating_add(p[s - part]);
        }
    }
    p[n]
}

/// Enumeration settings: a cardinality cap and an execution policy.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub cap: u64,
    pub exec: Exec,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: DEFAULT_CAP,
            exec: Exec::default(),
        }
    }
}

type Counts = HashMap<(usize, usize), u64>;

fn merge(mut a: Counts, b: Counts) -> Counts {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn t_value(obj: &Object, t: TStat) -> Result<usize> {
    Ok(match (t, obj) {
        (TStat::None, _) => 0,
        (TStat::D, Object::Partition(p)) => p.durfee() as usize,
        (TStat::Dr, Object::Partition(p)) => p.durfee_rect() as usize,
        (TStat::Des, Object::Path(w)) => w.des(),
        (TStat::Hdes, Object::Path(w)) => w.peaks().len(),
        _ => return Err(Error::Precondition(format!("statistic {t:?} does not apply to this family"))),
    })
}

fn q_value(obj: &Object, q: QStat) -> Result<usize> {
    Ok(match (q, obj) {
        (QStat::Area, Object::Partition(p)) => p.area() as usize,
        (QStat::Area, Object::Path(w)) => w.inv() as usize,
        (QStat::Maj, Object::Path(w)) => w.maj() as usize,
        (QStat::Hmaj, Object::Path(w)) => w.peaks().iter().map(|v| v.x).sum(),
        _ => return Err(Error::Precondition(format!("statistic {q:?} does not apply to this family"))),
    })
}

/// `(tstat, qstat)` of a single object.
pub fn statistics(obj: &Object, t: TStat, q: QStat) -> Result<(usize, usize)> {
    Ok((t_value(obj, t)?, q_value(obj, q)?))
}

impl Oracle {
    pub fn new(cap: u64, exec: Exec) -> Self {
        Oracle { cap, exec }
    }

    pub fn sequential() -> Self {
        Oracle {
            exec: Exec::Sequential,
            ..Oracle::default()
        }
    }

    fn check(&self, spec: &FamilySpec) -> Result<()> {
        spec.kind()?;
        let size = spec.base_size();
        if size > self.cap as u128 {
            return Err(Error::CapExceeded { size, cap: self.cap });
        }
        Ok(())
    }

    /// Members of the family, each once, in lexicographic order.
    pub fn enumerate<'a>(&self, spec: &'a FamilySpec) -> Result<impl Iterator<Item = Object> + 'a> {
        self.check(spec)?;
        Ok(spec
            .shards()
            .into_iter()
            .flat_map(Shard::into_iter)
            .filter(move |o| spec.accepts(o)))
    }

    pub fn count(&self, spec: &FamilySpec) -> Result<u64> {
        self.check(spec)?;
        Ok(self.exec.map_reduce(
            spec.shards(),
            |sh| sh.into_iter().filter(|o| spec.accepts(o)).count() as u64,
            || 0,
            |a, b| a + b,
        ))
    }

    /// `Σ t^{tstat} q^{qstat}` over the family.
    pub fn gf(&self, spec: &FamilySpec, t: TStat, q: QStat) -> Result<QTPoly> {
        self.check(spec)?;
        // Reject mismatched statistics up front, even for empty families.
        let probe = match spec.kind()? {
            Kind::Partitions => Object::Partition(Partition::empty()),
            Kind::Paths => Object::Path(StepWord::empty()),
        };
        t_value(&probe, t)?;
        q_value(&probe, q)?;
        let counts = self.exec.map_reduce(
            spec.shards(),
            |sh| {
                let mut c = Counts::new();
                for o in sh.into_iter().filter(|o| spec.accepts(o)) {
                    let key = (t_value(&o, t).expect("checked"), q_value(&o, q).expect("checked"));
                    *c.entry(key).or_insert(0) += 1;
                }
                c
            },
            Counts::new,
            merge,
        );
        Ok(counts_to_poly(counts))
    }

    /// `Σ_{n ≤ order} Σ_{λ ⊆ n×n} t^{#odd ranks} u^{#even ranks} z^n`.
    pub fn rank_parity_gf(&self, order: u32) -> Result<TruncatedSeries> {
        let mut shards = Vec::new();
        for n in 0..=order {
            let spec = FamilySpec::in_box(n, n);
            self.check(&spec)?;
            shards.extend(spec.shards().into_iter().map(move |s| (n, s)));
        }
        let counts: HashMap<(u32, u32, u32), u64> = self.exec.map_reduce(
            shards,
            |(n, sh)| {
                let mut c = HashMap::new();
                for o in sh.into_iter() {
                    if let Object::Partition(p) = o {
                        let ranks = p.ranks();
                        let odd = ranks.iter().filter(|r| *r % 2 != 0).count() as u32;
                        *c.entry((odd, ranks.len() as u32 - odd, n)).or_insert(0u64) += 1;
                    }
                }
                c
            },
            HashMap::new,
            |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            },
        );
        let mut out = TruncatedSeries::zero(&["t", "u", "z"], "z", order)?;
        for ((t, u, z), c) in counts {
            out.add_term(vec![t, u, z], BigRational::from_integer(BigInt::from(c)));
        }
        Ok(out)
    }

    /// The family a limit counts, truncated at `q^order`: partitions of every
    /// `N <= order` (with at most `m` parts for the strip limits) whose ranks
    /// satisfy the limit's constraint, marked by the limit's `t` statistic.
    pub fn limit_gf(&self, limit: Limit, order: u32) -> Result<QTPoly> {
        let floor = |ell: u32| RankConstraint::AtLeast(1 - ell as i64);
        let (constraint, t, strip) = match limit {
            Limit::LimCq1 => (RankConstraint::AtLeast(1), TStat::None, None),
            Limit::LimCqt => (RankConstraint::AtLeast(1), TStat::D, None),
            Limit::LopsidedLimit { b } => (RankConstraint::AtLeast(b as i64), TStat::D, None),
            Limit::LimCn | Limit::LimCnProduct => (RankConstraint::AtLeast(0), TStat::None, None),
            Limit::BoxStrip { m, ell } => (floor(ell), TStat::None, Some(m)),
            Limit::NoPart { ell } => (floor(ell), TStat::None, None),
            Limit::DrectStrip { m, ell } => (floor(ell), TStat::Dr, Some(m)),
            Limit::DrectLimit { ell } => (floor(ell), TStat::Dr, None),
            Limit::MainLimitStrip { m, ell } => (floor(ell), TStat::D, Some(m)),
            Limit::MainLimit { ell } => (floor(ell), TStat::D, None),
            Limit::Rr1 => (RankConstraint::finite([0, -1])?, TStat::D, None),
            Limit::ZeroMinusA { a } => (RankConstraint::finite([0, -(a as i64)])?, TStat::D, None),
        };
        if let Some(m) = strip {
            let spec = FamilySpec::in_box(m, order).ranks(constraint);
            return Ok(self.gf(&spec, t, QStat::Area)?.truncate_q(order as usize));
        }
        let mut out = QTPoly::zero();
        for n in 0..=order {
            out = &out + &self.gf(&FamilySpec::of_n(n).ranks(constraint.clone()), t, QStat::Area)?;
        }
        Ok(out)
    }

    /// Counts of partitions of `N` with all ranks in `[−r+2, M−r−2]` and of
    /// partitions of `N` with no part `≡ 0, ±r (mod M)`.
    pub fn andrews_bressoud_counts(&self, r: u32, modulus: u32, n: u32) -> Result<(u64, u64)> {
        if r == 0 || 2 * r >= modulus {
            return Err(Error::Precondition(format!("need 0 < r < M/2, got r={r}, M={modulus}")));
        }
        let (r, mm) = (r as i64, modulus as i64);
        let ranks = FamilySpec::of_n(n).ranks(RankConstraint::interval(2 - r, mm - r - 2)?);
        let residues: BTreeSet<u32> = [0, r as u32, modulus - r as u32].into_iter().collect();
        let parts = FamilySpec::of_n(n).parts(PartFilter::ForbidResidues { modulus, residues });
        Ok((self.count(&ranks)?, self.count(&parts)?))
    }

    /// Counts of partitions of `N` with all ranks `≥ 1 − ℓ` and with no part
    /// equal to `ℓ + 1`.
    pub fn rank_floor_counts(&self, ell: u32, n: u32) -> Result<(u64, u64)> {
        let ranks = FamilySpec::of_n(n).ranks(RankConstraint::AtLeast(1 - ell as i64));
        let parts = FamilySpec::of_n(n).parts(PartFilter::ForbidPart(ell + 1));
        Ok((self.count(&ranks)?, self.count(&parts)?))
    }
}

fn counts_to_poly(counts: Counts) -> QTPoly {
    let mut out = QTPoly::zero();
    for ((t, q), c) in counts {
        out.add_term(t, &QPoly::monomial(c, q));
    }
    out
}

/// Lattice paths of `east` E steps and `north` N steps from `(x0, y0)`, as
/// vertex lists, with weight `Σ_{E steps} (y_end − y)`.
fn lattice_paths(x0: i64, y0: i64, east: usize, north: usize) -> Vec<(Vec<(i64, i64)>, usize)> {
    let len = east + north;
    let y_end = y0 + north as i64;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << len) {
        if mask.count_ones() as usize != north {
            continue;
        }
        let (mut x, mut y) = (x0, y0);
        let mut verts = vec![(x, y)];
        let mut w = 0usize;
        for b in 0..len {
            if mask >> b & 1 == 1 {
                y += 1;
            } else {
                w += (y_end - y) as usize;
                x += 1;
            }
            verts.push((x, y));
        }
        out.push((verts, w));
    }
    out
}

/// Brute force over pairs of paths `A₁=(0,0) → B₁=(n−i, i)` and
/// `A₂=(ℓ,−1) → B₂=(m+ℓ−i, i−1)`, keeping pairs that share a vertex
/// (`intersecting`) or that do not; the weight is the total area above each
/// path inside its own bounding strip.
pub fn lgv_pairs_gf(m: u32, n: u32, ell: u32, i: u32, intersecting: bool) -> Result<QPoly> {
    if i > m.min(n) {
        return Err(Error::Precondition(format!("need 0 <= i <= min(m, n), got i={i}, m={m}, n={n}")));
    }
    let (m, n, ell, i) = (m as usize, n as usize, ell as i64, i as usize);
    let first = lattice_paths(0, 0, n - i, i);
    let second = lattice_paths(ell, -1, m - i, i);
    let mut counts = Counts::new();
    for (va, wa) in &first {
        let set: HashSet<&(i64, i64)> = va.iter().collect();
        for (vb, wb) in &second {
            let meet = vb.iter().any(|v| set.contains(v));
            if meet == intersecting {
                *counts.entry((0, wa + wb)).or_insert(0) += 1;
            }
        }
    }
    Ok(counts_to_poly(counts).t_coeff(0))
}

/// Self-conjugate partitions in `m × n` go under `φ⁻¹` to paths whose
/// valleys all sit at height `−1`; the valley positions form a partition
/// into distinct odd parts `≤ 2 min(m,n) − 1` of the same size, and every
/// such partition arises exactly once.
pub fn self_conjugate_bridge(m: u32, n: u32) -> bool {
    let oracle = Oracle::sequential();
    let spec = FamilySpec::in_box(m, n).ranks(RankConstraint::Finite([0].into_iter().collect()));
    let top = 2 * m.min(n) as usize;
    let mut images = HashSet::new();
    let members = match oracle.enumerate(&spec) {
        Ok(it) => it,
        Err(_) => return false,
    };
    for o in members {
        let Object::Partition(p) = o else { return false };
        let area = p.area();
        let bp = match p.boxed(m, n) {
            Ok(bp) => bp,
            Err(_) => return false,
        };
        let valleys = phi_inv_of_partition(&bp).valleys();
        if valleys.iter().any(|v| v.h != -1) {
            return false;
        }
        let parts: Vec<usize> = valleys.iter().map(|v| v.x).collect();
        if parts.iter().any(|&x| x % 2 == 0 || x >= top) {
            return false;
        }
        if parts.iter().sum::<usize>() as u64 != area {
            return false;
        }
        images.insert(parts);
    }
    images.len() == 1usize << m.min(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Object {
        Object::Partition(Partition::new(parts.to_vec()).unwrap())
    }

    #[test]
    fn box_listing_order() {
        let o = Oracle::default();
        let spec = FamilySpec::in_box(2, 2);
        let got: Vec<Object> = o.enumerate(&spec).unwrap().collect();
        assert_eq!(got, vec![p(&[]), p(&[1]), p(&[1, 1]), p(&[2]), p(&[2, 1]), p(&[2, 2])]);
    }

    #[test]
    fn dyck_listing() {
        let o = Oracle::default();
        let spec = FamilySpec::paths(2, 2).valleys(RankConstraint::AtLeast(0));
        let got: Vec<String> = o
            .enumerate(&spec)
            .unwrap()
            .map(|x| match x {
                Object::Path(w) => w.to_letters(),
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(got, vec!["UUDD", "UDUD"]);
    }

    #[test]
    fn small_families() {
        let o = Oracle::default();
        let got: Vec<Object> = o.enumerate(&FamilySpec::of_n(0)).unwrap().collect();
        assert_eq!(got, vec![p(&[])]);
        assert_eq!(o.count(&FamilySpec::of_n(10)).unwrap(), 42);
        assert_eq!(o.count(&FamilySpec::in_box(0, 5)).unwrap(), 1);
        assert_eq!(o.count(&FamilySpec::paths(3, 0)).unwrap(), 1);
    }

    #[test]
    fn gf_examples() {
        let o = Oracle::default();
        let g = o.gf(&FamilySpec::in_box(2, 2), TStat::D, QStat::Area).unwrap();
        assert_eq!(g, QTPoly::from_triples(&[(0, 0, 1), (1, 1, 1), (1, 2, 2), (1, 3, 1), (2, 4, 1)]));
        let g = o
            .gf(&FamilySpec::in_box(2, 2).ranks(RankConstraint::AtLeast(1)), TStat::D, QStat::Area)
            .unwrap();
        assert_eq!(g, QTPoly::from_triples(&[(0, 0, 1), (1, 2, 1)]));
        let empty = FamilySpec::in_box(2, 2).ranks(RankConstraint::finite([9]).unwrap());
        let g = o.gf(&empty, TStat::D, QStat::Area).unwrap();
        assert_eq!(g, QTPoly::from_triples(&[(0, 0, 1)]));
        let none = FamilySpec::of_n(3).parts(PartFilter::ForbidPart(1)).parts(PartFilter::ForbidPart(3));
        assert!(o.gf(&none, TStat::D, QStat::Area).unwrap().is_zero());
        assert!(o.gf(&FamilySpec::in_box(2, 2), TStat::Des, QStat::Area).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let o = Oracle::new(100, Exec::Sequential);
        assert!(matches!(o.count(&FamilySpec::in_box(5, 5)), Err(Error::CapExceeded { .. })));
        assert!(o.count(&FamilySpec::in_box(3, 3)).is_ok());
    }

    #[test]
    fn mismatched_filters() {
        let o = Oracle::default();
        let bad = FamilySpec::in_box(2, 2).valleys(RankConstraint::AtLeast(0));
        assert!(o.count(&bad).is_err());
    }

    #[test]
    fn counting_examples() {
        let o = Oracle::default();
        assert_eq!(o.andrews_bressoud_counts(1, 4, 4).unwrap(), (1, 1));
        assert_eq!(o.andrews_bressoud_counts(2, 7, 0).unwrap(), (1, 1));
        let (a, b) = o.andrews_bressoud_counts(2, 5, 6).unwrap();
        assert_eq!(a, b);
        assert!(o.andrews_bressoud_counts(2, 4, 3).is_err());
    }

    #[test]
    fn lgv_examples() {
        assert_eq!(lgv_pairs_gf(2, 2, 1, 1, true).unwrap(), QPoly::monomial(1, 1));
        assert_eq!(lgv_pairs_gf(3, 2, 1, 0, false).unwrap(), QPoly::one());
        assert!(lgv_pairs_gf(1, 2, 0, 2, true).is_err());
    }

    #[test]
    fn self_conjugate() {
        assert!(self_conjugate_bridge(4, 4));
        assert!(self_conjugate_bridge(1, 1));
        assert!(self_conjugate_bridge(0, 3));
        assert!(self_conjugate_bridge(3, 5));
    }

    #[test]
    fn limit_families() {
        let o = Oracle::default();
        // No ranks below 1 at t = 1: partitions without 1s.
        let got = o.limit_gf(Limit::LimCq1, 8).unwrap();
        assert_eq!(got.t_coeff(0), QPoly::from_i64s(&[1, 0, 1, 1, 2, 2, 4, 4, 7]));
        // A single part k has rank k - 1, so only sizes 0 and >= 2 survive.
        let strip = o.limit_gf(Limit::MainLimitStrip { m: 1, ell: 0 }, 5).unwrap();
        assert_eq!(strip.at_t_one(), QPoly::from_i64s(&[1, 0, 1, 1, 1, 1]));
        let rr = o.limit_gf(Limit::Rr1, 4).unwrap();
        assert_eq!(rr, QTPoly::from_triples(&[(0, 0, 1), (1, 1, 1), (1, 2, 1), (1, 3, 1), (1, 4, 1), (2, 4, 1)]));
    }
}
