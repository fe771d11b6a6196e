//! The Greene–Kleitman lift on lattice paths.
//!
//! `γ` turns the `D` step ending at the leftmost minimum into a `U` step,
//! raising the minimum by one. In bracket terms it changes the rightmost
//! unmatched `2` into a `1`, so the matched pairs are untouched. `γ⁻¹` turns
//! the `U` step leaving the rightmost minimum into a `D`.

use crate::error::{Error, Result};
use crate::word::{Step, StepWord};

pub fn gamma(w: &StepWord) -> Result<StepWord> {
    let h = w.heights();
    let min = *h.iter().min().unwrap();
    if min >= 0 {
        return Err(Error::Domain(format!("gamma needs a path going below 0, {w} has minimum {min}")));
    }
    let x = h.iter().position(|&y| y == min).unwrap();
    let mut steps = w.steps().to_vec();
    debug_assert_eq!(steps[x - 1], Step::D);
    steps[x - 1] = Step::U;
    Ok(StepWord::from_steps(steps))
}

pub fn gamma_inv(w: &StepWord) -> Result<StepWord> {
    let h = w.heights();
    let min = *h.iter().min().unwrap();
    let end = *h.last().unwrap();
    if min >= end {
        return Err(Error::Domain(format!(
            "gamma_inv needs a minimum below the endpoint height {end}, {w} has minimum {min}"
        )));
    }
    let x = h.iter().rposition(|&y| y == min).unwrap();
    let mut steps = w.steps().to_vec();
    debug_assert_eq!(steps[x], Step::U);
    steps[x] = Step::D;
    Ok(StepWord::from_steps(steps))
}

/// `γ^k` in one pass: the `k` rightmost unmatched `D` steps become `U`.
pub fn gamma_iter(w: &StepWord, k: usize) -> Result<StepWord> {
    let unmatched = w.match_steps().unmatched_twos;
    if unmatched.len() < k {
        return Err(Error::Domain(format!(
            "gamma^{k} needs {k} unmatched D steps, {w} has {}",
            unmatched.len()
        )));
    }
    let mut steps = w.steps().to_vec();
    for &i in &unmatched[unmatched.len() - k..] {
        steps[i - 1] = Step::U;
    }
    Ok(StepWord::from_steps(steps))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> StepWord {
        s.parse().unwrap()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&w("DDUUDUDDUUU")).unwrap(), w("DUUUDUDDUUU"));
        assert_eq!(gamma(&w("DU")).unwrap(), w("UU"));
        assert_eq!(gamma(&w("DDUU")).unwrap(), w("DUUU"));
        assert!(gamma(&w("UD")).is_err());
    }

    #[test]
    fn gamma_inv_examples() {
        assert_eq!(gamma_inv(&w("DUUUDUDDUUU")).unwrap(), w("DDUUDUDDUUU"));
        assert_eq!(gamma_inv(&w("UU")).unwrap(), w("DU"));
        assert!(gamma_inv(&w("UUDD")).is_err());
    }

    #[test]
    fn iterates() {
        let p = w("DDUUDUDDUUU");
        let two = gamma_iter(&p, 2).unwrap();
        assert_eq!(two, gamma(&gamma(&p).unwrap()).unwrap());
        assert_eq!(two.min_height(), 0);
        assert_eq!(two.maj(), p.maj() - 2);
        assert_eq!(gamma_iter(&p, 0).unwrap(), p);
        assert_eq!(gamma_iter(&w("DDUU"), 2).unwrap(), w("UUUU"));
        assert!(gamma_iter(&w("DDUU"), 3).is_err());
    }
}
