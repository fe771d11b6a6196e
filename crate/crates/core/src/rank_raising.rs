//! The minimum-rank-raising map `f`, its inverse `g`, and the boxed iterates
//! `θ = f^{ℓ+1}` and `f^ℓ`.
//!
//! For `λ` with some rank `≤ 0`, let `i` be the largest index minimizing
//! `r_i(λ)`. `f` removes a part `i` from `λ` and adds a part `i − 1` to `λ'`.
//! Adding a part of size zero does nothing.
//!
//! Under Foata's map `f` becomes the Greene–Kleitman lift applied to the
//! conjugate: `f(λ)' = φ(γ(φ⁻¹(λ')))`. The commuting square is checked by
//! [`bridge_check`], which composes `ℓ + 1` of them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::foata::{phi, phi_inv_of_partition};
use crate::gk::{gamma, gamma_iter};
use crate::partition::{BoxedPartition, Partition};

/// Largest index attaining the minimum rank, with that minimum.
fn last_min_rank(ranks: &[i64]) -> Option<(usize, i64)> {
    let tau = *ranks.iter().min()?;
    let i = ranks.iter().rposition(|&r| r == tau)? + 1;
    Some((i, tau))
}

fn remove_part(parts: &mut Vec<u32>, size: u32) -> bool {
    match parts.iter().position(|&p| p == size) {
        Some(k) => {
            parts.remove(k);
            true
        }
        None => false,
    }
}

/// Adds a column of height `h` to the diagram, i.e. a part `h` to `λ'`.
fn add_column(parts: &mut Vec<u32>, h: usize) {
    while parts.len() < h {
        parts.push(0);
    }
    for p in parts.iter_mut().take(h) {
        *p += 1;
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
}

pub fn f(lambda: &Partition) -> Result<Partition> {
    let ranks = lambda.ranks();
    let (i, tau) = match last_min_rank(&ranks) {
        Some((i, tau)) if tau <= 0 => (i, tau),
        _ => {
            return Err(Error::Domain(format!(
                "f needs a rank <= 0, {lambda} has ranks {ranks:?}"
            )))
        }
    };
    let mut parts = lambda.parts().to_vec();
    if !remove_part(&mut parts, i as u32) {
        return Err(Error::Domain(format!(
            "{lambda} has no part equal to {i} although r_{i} = {tau} is the last minimum"
        )));
    }
    add_column(&mut parts, i - 1);
    Ok(Partition::from_unsorted(parts))
}

/// Inverse of `f`. With `τ` the minimum rank (`+∞` when there is none), take
/// `j = d + 1` if `τ > 1` and otherwise the smallest index attaining `τ`;
/// remove a part `j − 1` from `λ'` and add a part `j` to `λ`.
pub fn g(lambda: &Partition) -> Result<Partition> {
    let ranks = lambda.ranks();
    let tau = ranks.iter().min().copied();
    let j = match tau {
        Some(t) if t <= 1 => ranks.iter().position(|&r| r == t).unwrap() + 1,
        _ => lambda.durfee() as usize + 1,
    };
    let mut conj = lambda.conjugate().into_parts();
    if j > 1 && !remove_part(&mut conj, (j - 1) as u32) {
        return Err(Error::Domain(format!(
            "{lambda} has no column of height {} to remove",
            j - 1
        )));
    }
    let mut parts = Partition::from_unsorted(conj).conjugate().into_parts();
    parts.push(j as u32);
    Ok(Partition::from_unsorted(parts))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrajectoryState {
    pub partition: Partition,
    /// Minimum rank, absent when the partition has no ranks.
    pub tau: Option<i64>,
    /// Largest index attaining `tau`.
    pub index: Option<usize>,
    pub d: u32,
    pub dr: u32,
    pub area: u64,
}

impl TrajectoryState {
    pub fn of(p: &Partition) -> Self {
        let last = last_min_rank(&p.ranks());
        TrajectoryState {
            partition: p.clone(),
            tau: last.map(|x| x.1),
            index: last.map(|x| x.0),
            d: p.durfee(),
            dr: p.durfee_rect(),
            area: p.area(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trajectory {
    pub states: Vec<TrajectoryState>,
}

impl Trajectory {
    /// One JSON object per line.
    pub fn to_json_lines(&self) -> String {
        self.states
            .iter()
            .map(|s| serde_json::to_string(s).expect("state serializes"))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn check_theta_domain(bp: &BoxedPartition, ell: u32) -> Result<()> {
    let (m, n) = (bp.m(), bp.n());
    if n + ell < m {
        return Err(Error::Precondition(format!("need n + l >= m, got m={m}, n={n}, l={ell}")));
    }
    match bp.partition().min_rank() {
        Some(t) if t <= -(ell as i64) => Ok(()),
        _ => Err(Error::Precondition(format!(
            "{} has no rank <= -{ell}",
            bp.partition()
        ))),
    }
}

/// `θ = f^{ℓ+1}`, from partitions in `m × n` with some rank `≤ −ℓ` onto all
/// partitions in `(m − ℓ − 1) × (n + ℓ + 1)`.
pub fn theta(bp: &BoxedPartition, ell: u32) -> Result<BoxedPartition> {
    check_theta_domain(bp, ell)?;
    let mut p = bp.partition().clone();
    for _ in 0..=ell {
        p = f(&p)?;
    }
    BoxedPartition::new(p, bp.m() - ell - 1, bp.n() + ell + 1)
}

/// `f^ℓ` with its trajectory. The result lands in `(m − ℓ) × (n + ℓ)` and
/// still has a rank `≤ 0`.
pub fn f_iter(bp: &BoxedPartition, ell: u32) -> Result<(BoxedPartition, Trajectory)> {
    check_theta_domain(bp, ell)?;
    let mut p = bp.partition().clone();
    let mut traj = Trajectory {
        states: vec![TrajectoryState::of(&p)],
    };
    for _ in 0..ell {
        p = f(&p)?;
        traj.states.push(TrajectoryState::of(&p));
    }
    Ok((BoxedPartition::new(p, bp.m() - ell, bp.n() + ell)?, traj))
}

/// Follows `f` while some rank is `≤ 0`, for at most `max_steps` steps.
pub fn trajectory(p: &Partition, max_steps: usize) -> Trajectory {
    let mut cur = p.clone();
    let mut traj = Trajectory {
        states: vec![TrajectoryState::of(&cur)],
    };
    for _ in 0..max_steps {
        match f(&cur) {
            Ok(next) => {
                cur = next;
                traj.states.push(TrajectoryState::of(&cur));
            }
            Err(_) => break,
        }
    }
    traj
}

/// Checks `θ(λ)' = φ(γ^{ℓ+1}(φ⁻¹(λ')))`, with `λ'` boxed in `n × m`.
pub fn bridge_check(bp: &BoxedPartition, ell: u32) -> Result<bool> {
    let lhs = theta(bp, ell)?.transpose().to_word();
    let path = phi_inv_of_partition(&bp.transpose());
    let rhs = phi(&gamma_iter(&path, ell as usize + 1)?);
    Ok(lhs == rhs)
}

/// The single square `f(λ)' = φ(γ(φ⁻¹(λ')))` for `λ` boxed in `m × n` with
/// some rank `≤ 0`; `f(λ)` is boxed in `(m − 1) × (n + 1)`.
pub fn bridge_step_check(bp: &BoxedPartition) -> Result<bool> {
    let m = bp.m();
    if m == 0 {
        return Err(Error::Precondition("empty box has no rank <= 0".into()));
    }
    let next = BoxedPartition::new(f(bp.partition())?, m - 1, bp.n() + 1)?;
    let lhs = next.transpose().to_word();
    let rhs = phi(&gamma(&phi_inv_of_partition(&bp.transpose()))?);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn figure_chain() {
        assert_eq!(f(&p(&[4, 4, 3, 3, 1, 1])).unwrap(), p(&[4, 4, 3, 3, 1]));
        assert_eq!(f(&p(&[4, 4, 3, 3, 1])).unwrap(), p(&[5, 5, 3, 1]));
        assert_eq!(f(&p(&[5, 5, 3, 1])).unwrap(), p(&[6, 6, 1]));
        assert_eq!(g(&p(&[6, 6, 1])).unwrap(), p(&[5, 5, 3, 1]));
        assert_eq!(g(&p(&[5, 5, 3, 1])).unwrap(), p(&[4, 4, 3, 3, 1]));
        assert_eq!(g(&p(&[])).unwrap(), p(&[1]));
        assert_eq!(f(&p(&[1])).unwrap(), p(&[]));
        assert!(f(&p(&[])).is_err());
        assert!(f(&p(&[3, 1])).is_err());
    }

    #[test]
    fn boxed_iterates() {
        let bp = p(&[4, 4, 3, 3, 1, 1]).boxed(6, 4).unwrap();
        assert_eq!(theta(&bp, 2).unwrap(), p(&[6, 6, 1]).boxed(3, 7).unwrap());
        let (res, traj) = f_iter(&bp, 2).unwrap();
        assert_eq!(res, p(&[5, 5, 3, 1]).boxed(4, 6).unwrap());
        assert_eq!(traj.states.len(), 3);
        assert_eq!(traj.states[1].index, Some(3));

        assert_eq!(theta(&p(&[1]).boxed(1, 1).unwrap(), 0).unwrap(), p(&[]).boxed(0, 2).unwrap());
        assert_eq!(theta(&p(&[2, 2]).boxed(2, 2).unwrap(), 0).unwrap(), p(&[3]).boxed(1, 3).unwrap());
        assert!(theta(&p(&[3, 1]).boxed(2, 3).unwrap(), 0).is_err());
        assert!(theta(&p(&[1, 1, 1]).boxed(3, 1).unwrap(), 0).is_err());

        let bp = p(&[2, 2, 2]).boxed(3, 3).unwrap();
        let (res, _) = f_iter(&bp, 1).unwrap();
        assert_eq!(res.partition().durfee(), 2);
    }

    #[test]
    fn bridge_examples() {
        let bp = p(&[4, 4, 3, 3, 1, 1]).boxed(6, 4).unwrap();
        assert!(bridge_check(&bp, 2).unwrap());
        assert!(bridge_check(&p(&[1]).boxed(1, 1).unwrap(), 0).unwrap());
        assert!(bridge_step_check(&bp).unwrap());
    }
}
