//! Foata's second fundamental transformation on `{1,2}`-words.
//!
//! Writing `w = 1^{m_0} 2^{n_0} 1^{m_1} 2^{n_1} ⋯ 1^{m_d} 2^{n_d}` with all
//! interior runs nonempty,
//!
//! ```text
//! φ(w) = 1^{m_d−1} 2 ⋯ 1^{m_1−1} 2 · 1^{m_0} 2^{n_0−1} 1 ⋯ 2^{n_{d−1}−1} 1 · 2^{n_d}
//! ```
//!
//! and `maj(w) = inv(φ(w))`. Through the boundary word of a partition this
//! turns Durfee data and successive ranks into valley data of a path.

use crate::error::Result;
use crate::partition::BoxedPartition;
use crate::word::{Step, StepWord};

fn runs(steps: &[Step]) -> (Vec<usize>, Vec<usize>) {
    // ms[j], ns[j] are the lengths m_j, n_j.
    let mut ms = Vec::new();
    let mut ns = Vec::new();
    let mut i = 0;
    loop {
        let start = i;
        while i < steps.len() && steps[i] == Step::U {
            i += 1;
        }
        ms.push(i - start);
        let start = i;
        while i < steps.len() && steps[i] == Step::D {
            i += 1;
        }
        ns.push(i - start);
        if i == steps.len() {
            break;
        }
    }
    (ms, ns)
}

fn push_run(out: &mut Vec<Step>, s: Step, k: usize) {
    out.extend(std::iter::repeat_n(s, k));
}

pub fn phi(w: &StepWord) -> StepWord {
    let (ms, ns) = runs(w.steps());
    let d = ms.len() - 1;
    let mut out = Vec::with_capacity(w.len());
    for j in (1..=d).rev() {
        push_run(&mut out, Step::U, ms[j] - 1);
        out.push(Step::D);
    }
    push_run(&mut out, Step::U, ms[0]);
    for &n in &ns[..d] {
        push_run(&mut out, Step::D, n - 1);
        out.push(Step::U);
    }
    push_run(&mut out, Step::D, ns[d]);
    StepWord::from_steps(out)
}

/// Peels `v = 1^{c−1} 2 y 1 2^a` into `φ⁻¹(y) 2 1^c 2^a`, working inwards.
pub fn phi_inv(w: &StepWord) -> StepWord {
    let v = w.steps();
    let mut lo = 0;
    let mut hi = v.len();
    let mut suffixes: Vec<(usize, usize)> = Vec::new();
    loop {
        let window = &v[lo..hi];
        let first_two = window.iter().position(|&s| s == Step::D);
        let last_one = window.iter().rposition(|&s| s == Step::U);
        match (first_two, last_one) {
            (Some(f), Some(l)) if f < l => {
                let c = f + 1;
                let a = window.len() - 1 - l;
                suffixes.push((c, a));
                lo += f + 1;
                hi = lo + (l - f - 1);
            }
            _ => break,
        }
    }
    let mut out = Vec::with_capacity(v.len());
    out.extend_from_slice(&v[lo..hi]);
    for &(c, a) in suffixes.iter().rev() {
        out.push(Step::D);
        push_run(&mut out, Step::U, c);
        push_run(&mut out, Step::D, a);
    }
    StepWord::from_steps(out)
}

/// `φ⁻¹` of the boundary word of a boxed partition, built directly from the
/// hook decomposition: the path
/// `1^{b_1} 2^{a_1} 1^{b_2−b_1} 2^{a_2−a_1} ⋯ 1^{m−b_d} 2^{n−a_d}`, whose
/// `j`-th valley is `(b_j + a_j, b_j − a_j)`.
pub fn phi_inv_of_partition(bp: &BoxedPartition) -> StepWord {
    let h = bp.partition().hook_decomposition();
    let mut out = Vec::with_capacity((bp.m() + bp.n()) as usize);
    let (mut pa, mut pb) = (0u32, 0u32);
    for (&a, &b) in h.a.iter().zip(&h.b) {
        push_run(&mut out, Step::U, (b - pb) as usize);
        push_run(&mut out, Step::D, (a - pa) as usize);
        pa = a;
        pb = b;
    }
    push_run(&mut out, Step::U, (bp.m() - pb) as usize);
    push_run(&mut out, Step::D, (bp.n() - pa) as usize);
    StepWord::from_steps(out)
}

/// `P ↦ φ⁻¹(φ(P)')`: read `φ(P)` as a partition, conjugate it in the
/// transposed box, and map back. Preserves `des` and `maj`, sends paths with
/// valley heights in `−S−1` to paths with valley heights in `S−1`, and swaps
/// the step counts.
pub fn flip_valleys(w: &StepWord) -> StepWord {
    let bp = BoxedPartition::from_word(&phi(w));
    phi_inv(&bp.transpose().to_word())
}

/// Convenience wrapper checking the box before taking the fast path.
pub fn phi_inv_of_parts(parts: Vec<u32>, m: u32, n: u32) -> Result<StepWord> {
    let p = crate::partition::Partition::new(parts)?;
    Ok(phi_inv_of_partition(&BoxedPartition::new(p, m, n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn w(s: &str) -> StepWord {
        s.parse().unwrap()
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(&w("121")), w("211"));
        assert_eq!(phi(&w("1")), w("1"));
        assert_eq!(phi(&w("")), w(""));
        assert_eq!(phi(&w("11212")), w("21112"));
        assert_eq!(phi(&w("1122")), w("1122"));
    }

    #[test]
    fn phi_inv_values() {
        assert_eq!(phi_inv(&w("211")), w("121"));
        assert_eq!(phi_inv(&w("1122")), w("1122"));
        assert_eq!(phi_inv(&w("21112")), w("11212"));
        assert_eq!(phi_inv(&w("")), w(""));
    }

    #[test]
    fn hook_fast_path() {
        let bp = Partition::new(vec![6, 6, 5, 4, 4, 4, 1]).unwrap().boxed(9, 6).unwrap();
        let p = phi_inv_of_partition(&bp);
        let v: Vec<(usize, i64)> = p.valleys().iter().map(|v| (v.x, v.h)).collect();
        assert_eq!(v, vec![(3, 1), (6, 0), (9, -1), (12, 0)]);
        assert_eq!(p, phi_inv(&bp.to_word()));

        let bp = Partition::new(vec![2, 2]).unwrap().boxed(2, 2).unwrap();
        let v: Vec<(usize, i64)> = phi_inv_of_partition(&bp).valleys().iter().map(|v| (v.x, v.h)).collect();
        assert_eq!(v, vec![(1, -1), (3, -1)]);

        assert_eq!(phi_inv_of_parts(vec![], 3, 2).unwrap(), w("11122"));
        assert!(phi_inv_of_parts(vec![3], 1, 2).is_err());
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip_valleys(&w("DDUU")), w("UDUD"));
        assert_eq!(flip_valleys(&w("UUDD")), w("UUDD"));
    }
}
