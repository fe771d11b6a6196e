//! Closed forms for rank-constrained partitions in a box.
//!
//! All parameters are signed so that formulas can be evaluated exactly as
//! displayed; `qbin(n, k)` vanishes outside `0 ≤ k ≤ n`.

use std::sync::{OnceLock, RwLock};

use super::poly::{QPoly, QTPoly};
use crate::error::{Error, Result};

static QBIN_ROWS: OnceLock<RwLock<Vec<Vec<QPoly>>>> = OnceLock::new();

fn rows() -> &'static RwLock<Vec<Vec<QPoly>>> {
    QBIN_ROWS.get_or_init(|| RwLock::new(vec![vec![QPoly::one()]]))
}

/// Gaussian binomial coefficient, from the recurrence
/// `qbin(n,k) = qbin(n−1,k−1) + q^k qbin(n−1,k)` with a shared row cache.
pub fn qbinom(n: i64, k: i64) -> QPoly {
    if n < 0 || k < 0 || k > n {
        return QPoly::zero();
    }
    let (n, k) = (n as usize, k as usize);
    {
        let table = rows().read().expect("qbinom cache poisoned");
        if let Some(row) = table.get(n) {
            return row[k].clone();
        }
    }
    let mut table = rows().write().expect("qbinom cache poisoned");
    while table.len() <= n {
        let prev = table.last().expect("row 0 present");
        let len = prev.len();
        let mut row = Vec::with_capacity(len + 1);
        for j in 0..=len {
            let mut c = if j >= 1 { prev[j - 1].clone() } else { QPoly::zero() };
            if j < len {
                c += &prev[j].shift(j);
            }
            row.push(c);
        }
        table.push(row);
    }
    table[n][k].clone()
}

/// `[n]_q = 1 + q + ⋯ + q^{n−1}`.
pub fn q_integer(n: usize) -> QPoly {
    QPoly::from_i64s(&vec![1; n])
}

/// `(q;q)_n = (1 − q)(1 − q²)⋯(1 − q^n)`.
pub fn q_pochhammer(n: usize) -> QPoly {
    let mut out = QPoly::one();
    for j in 1..=n {
        out = &out * &(&QPoly::one() - &QPoly::monomial(1, j));
    }
    out
}

fn sq(i: i64) -> usize {
    (i * i) as usize
}

/// `C_n(q,t) = 1 + (1/[n]_q) Σ_{i=1}^{n−1} t^i q^{i(i+1)} qbin(n,i) qbin(n,i+1)`.
///
/// Each `t`-coefficient is divided by `[n]_q` exactly; a remainder would be
/// an arithmetic bug and panics.
pub fn catalan_qt(n: u32) -> QTPoly {
    let mut out = QTPoly::one();
    if n <= 1 {
        return out;
    }
    let ni = n as i64;
    let qn = q_integer(n as usize);
    for i in 1..ni {
        let num = (&qbinom(ni, i) * &qbinom(ni, i + 1)).shift((i * (i + 1)) as usize);
        let quot = num
            .div_exact(&qn)
            .unwrap_or_else(|e| panic!("C_{n}: t^{i} coefficient not divisible by [n]_q: {e}"));
        out.add_term(i as usize, &quot);
    }
    out
}

/// Paths with `m` up and `n` down steps weighted `t^des q^maj`: those
/// staying weakly above 0 (`complement = false`) or the complement sum
/// `Σ t^i q^{i²} qbin(m−1,i−1) qbin(n+1,i+1)`. The direct form needs `m ≥ n`;
/// the complement sum is returned as displayed for any `m, n` but describes
/// the paths dipping below 0 only when `m ≥ n`.
pub fn fh_formula(m: i64, n: i64, complement: bool) -> Result<QTPoly> {
    if m < 0 || n < 0 {
        return Err(Error::Precondition(format!("need m, n >= 0, got ({m}, {n})")));
    }
    if !complement && m < n {
        return Err(Error::Precondition(format!("direct form needs m >= n, got ({m}, {n})")));
    }
    let mut out = QTPoly::zero();
    for i in 0..=(m.max(n) + 1) {
        let below = &qbinom(m - 1, i - 1) * &qbinom(n + 1, i + 1);
        let term = if complement {
            below
        } else {
            &(&qbinom(m, i) * &qbinom(n, i)) - &below
        };
        out.add_term(i as usize, &term.shift(sq(i)));
    }
    Ok(out)
}

/// `Σ t^i q^{i²} qbin(n,i) qbin(m,i)`: all partitions in `m × n` by Durfee
/// square.
pub fn dsq_box_formula(m: i64, n: i64) -> QTPoly {
    let mut out = QTPoly::zero();
    for i in 0..=m.min(n).max(0) {
        out.add_term(i as usize, &(&qbinom(n, i) * &qbinom(m, i)).shift(sq(i)));
    }
    out
}

/// `Σ t^i q^{i(i+1)} qbin(n−1,i) qbin(m+1,i+1)`: all partitions in `m × n`
/// by Durfee rectangle. Fails at `n = 0`, where `qbin(−1, 0) = 0` loses the
/// empty partition.
pub fn drect_box_formula(m: i64, n: i64) -> QTPoly {
    let mut out = QTPoly::zero();
    for i in 0..=(m.max(n) + 1) {
        let term = &qbinom(n - 1, i) * &qbinom(m + 1, i + 1);
        out.add_term(i as usize, &term.shift((i * (i + 1)) as usize));
    }
    out
}

/// Partitions in `m × n` with all ranks `≥ 1 − ℓ`, for `−n ≤ ℓ ≤ 1`, by
/// Durfee square:
///
/// * `C_{n+ℓ}(q, t q^{−ℓ})` if `ℓ ≤ m − n`,
/// * `Σ t^i q^{i(i−ℓ)} (qbin(n+ℓ,i) qbin(m,i) − qbin(n+ℓ−1,i−1) qbin(m+1,i+1))`
///   otherwise.
pub fn thm_lopsided(m: i64, n: i64, ell: i64) -> Result<QTPoly> {
    if m < 0 || n < 0 || ell < -n || ell > 1 {
        return Err(Error::Precondition(format!(
            "need m, n >= 0 and -n <= l <= 1, got m={m}, n={n}, l={ell}"
        )));
    }
    if ell <= m - n {
        Ok(lopsided_catalan_branch(n, ell))
    } else {
        Ok(lopsided_sum_branch(m, n, ell))
    }
}

/// `C_{n+ℓ}(q, t q^{−ℓ})`. For `ℓ = 1` the substitution divides by `q^i`,
/// which is exact because every `t^i` term of `C_{n+1}` has `q`-degree at
/// least `i`; this is asserted.
pub fn lopsided_catalan_branch(n: i64, ell: i64) -> QTPoly {
    assert!(n + ell >= 0, "C_k needs k >= 0");
    catalan_qt((n + ell) as u32)
        .shear(-ell)
        .expect("t -> t*q^{-l} stays polynomial")
}

pub fn lopsided_sum_branch(m: i64, n: i64, ell: i64) -> QTPoly {
    let mut out = QTPoly::zero();
    for i in 0..=(m.max(n) + 2) {
        let term = &(&qbinom(n + ell, i) * &qbinom(m, i)) - &(&qbinom(n + ell - 1, i - 1) * &qbinom(m + 1, i + 1));
        let e = i * (i - ell);
        if term.is_zero() {
            continue;
        }
        assert!(e >= 0, "negative q exponent in the lopsided sum");
        out.add_term(i as usize, &term.shift(e as usize));
    }
    out
}

fn check_central(m: i64, n: i64, ell: i64) -> Result<()> {
    if m < 0 || n < 0 || ell < 0 || n + ell < m {
        return Err(Error::Precondition(format!(
            "need m, n, l >= 0 and n + l >= m, got m={m}, n={n}, l={ell}"
        )));
    }
    Ok(())
}

/// Partitions in `m × n` with all ranks `≥ 1 − ℓ`, by Durfee square:
/// `Σ t^i q^{i²} (qbin(n,i) qbin(m,i) − q^ℓ qbin(n+ℓ−1,i−1) qbin(m−ℓ+1,i+1))`.
pub fn thm_central_dsq(m: i64, n: i64, ell: i64) -> Result<QTPoly> {
    check_central(m, n, ell)?;
    let mut out = QTPoly::zero();
    for i in 0..=(m.max(n) + 1) {
        let bad = (&qbinom(n + ell - 1, i - 1) * &qbinom(m - ell + 1, i + 1)).shift(ell as usize);
        let term = &(&qbinom(n, i) * &qbinom(m, i)) - &bad;
        out.add_term(i as usize, &term.shift(sq(i)));
    }
    Ok(out)
}

/// Partitions in `m × n` with all ranks `≥ 1 − ℓ`, by Durfee rectangle:
/// `Σ t^i q^{i(i+1)} (qbin(n−1,i) qbin(m+1,i+1) − q^{ℓ+1} qbin(n+ℓ,i) qbin(m−ℓ,i+1))`.
/// Like [`drect_box_formula`] it loses the empty partition when `n = 0`.
pub fn thm_central_drect(m: i64, n: i64, ell: i64) -> Result<QTPoly> {
    check_central(m, n, ell)?;
    let mut out = QTPoly::zero();
    for i in 0..=(m.max(n) + ell + 1) {
        let bad = (&qbinom(n + ell, i) * &qbinom(m - ell, i + 1)).shift((ell + 1) as usize);
        let term = &(&qbinom(n - 1, i) * &qbinom(m + 1, i + 1)) - &bad;
        out.add_term(i as usize, &term.shift((i * (i + 1)) as usize));
    }
    Ok(out)
}

/// `qbin(m+n, m) − q^{ℓ+1} qbin(m+n, m−ℓ−1)`.
pub fn thm_box_t1(m: i64, n: i64, ell: i64) -> Result<QPoly> {
    check_central(m, n, ell)?;
    Ok(&qbinom(m + n, m) - &qbinom(m + n, m - ell - 1).shift((ell + 1) as usize))
}

/// Partitions in the `n × n` box with all ranks `≥ 1 − ℓ` at `t = 1`:
/// `C_{n+ℓ}(q, q^{−ℓ})` for `ℓ ≤ 1`, and
/// `qbin(2n, n) − q^{ℓ+1} qbin(2n, n−ℓ−1)` for `ℓ ≥ 2`. Both apply when
/// `ℓ ∈ {0, 1}`; see [`combined_t1_catalan`] and [`thm_box_t1`].
pub fn combined_t1(n: i64, ell: i64) -> Result<QPoly> {
    if ell <= 1 {
        combined_t1_catalan(n, ell)
    } else {
        thm_box_t1(n, n, ell)
    }
}

pub fn combined_t1_catalan(n: i64, ell: i64) -> Result<QPoly> {
    if n < 0 || ell > 1 || n + ell < 0 {
        return Err(Error::Precondition(format!("need -n <= l <= 1, got n={n}, l={ell}")));
    }
    Ok(lopsided_catalan_branch(n, ell).at_t_one())
}

/// Paths with `n` up and `m` down steps staying weakly above `−ℓ`, weighted
/// `t^hdes q^hmaj`:
/// `Σ t^i q^{i²} (qbin(n,i) qbin(m,i) − qbin(n+ℓ+1,i) qbin(m−ℓ−1,i))`.
/// The identity breaks when `n + ℓ + 1 < m`: the family is then empty but
/// the sum is not.
pub fn keith_km(m: i64, n: i64, ell: i64) -> Result<QTPoly> {
    if m < 0 || n < 0 || ell < 0 {
        return Err(Error::Precondition(format!("need m, n, l >= 0, got m={m}, n={n}, l={ell}")));
    }
    let mut out = QTPoly::zero();
    for i in 0..=(m.max(n) + ell + 1) {
        let term = &(&qbinom(n, i) * &qbinom(m, i)) - &(&qbinom(n + ell + 1, i) * &qbinom(m - ell - 1, i));
        out.add_term(i as usize, &term.shift(sq(i)));
    }
    Ok(out)
}

/// Weight of intersecting path pairs in the two-path model:
/// `q^ℓ qbin(m+ℓ−1, i−1) qbin(n−ℓ+1, i+1)`, and of non-intersecting pairs,
/// `qbin(n,i) qbin(m,i)` minus that.
pub fn lgv_product(m: i64, n: i64, ell: i64, i: i64, intersecting: bool) -> Result<QPoly> {
    if m < 0 || n < 0 || ell < 0 || i < 0 || i > m.min(n) {
        return Err(Error::Precondition(format!(
            "need m, n, l >= 0 and 0 <= i <= min(m, n), got m={m}, n={n}, l={ell}, i={i}"
        )));
    }
    let meet = (&qbinom(m + ell - 1, i - 1) * &qbinom(n - ell + 1, i + 1)).shift(ell as usize);
    if intersecting {
        Ok(meet)
    } else {
        Ok(&(&qbinom(n, i) * &qbinom(m, i)) - &meet)
    }
}

/// Partitions in `m × n` with every rank in `{0, −1}`, by Durfee square:
/// `Σ_{k=0}^{n} t^k q^{k²} qbin(M−k+1, k)` with `M = 2m − 1` if `m ≤ n`,
/// else `2n`.
pub fn rr_box(m: i64, n: i64) -> Result<QTPoly> {
    if m < 0 || n < 0 {
        return Err(Error::Precondition(format!("need m, n >= 0, got ({m}, {n})")));
    }
    let big_m = if m <= n { 2 * m - 1 } else { 2 * n };
    let mut out = QTPoly::zero();
    for k in 0..=n {
        out.add_term(k as usize, &qbinom(big_m - k + 1, k).shift(sq(k)));
    }
    Ok(out)
}

/// Partitions in `m × n` with every rank in `{−1, −2}`, by Durfee square:
/// `Σ_k t^k q^{k(k+1)} qbin(M−k, k)` with `M = 2m − 2` if `m ≤ n + 1`,
/// else `2n + 1`. The sum runs over every `k` with `2k ≤ M`; for `m ≤ n`
/// this is the range `k ≤ n − 1`.
pub fn ex83_box(m: i64, n: i64) -> Result<QTPoly> {
    if m < 2 || n < 2 {
        return Err(Error::Precondition(format!("need m, n >= 2, got ({m}, {n})")));
    }
    let big_m = if m <= n + 1 { 2 * m - 2 } else { 2 * n + 1 };
    let mut out = QTPoly::zero();
    for k in 0..=big_m / 2 {
        out.add_term(k as usize, &qbinom(big_m - k, k).shift((k * (k + 1)) as usize));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qbinom_values() {
        assert_eq!(qbinom(2, 1), QPoly::from_i64s(&[1, 1]));
        assert_eq!(qbinom(4, 2), QPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert!(qbinom(3, 5).is_zero());
        assert!(qbinom(-1, 0).is_zero());
        assert_eq!(qbinom(0, 0), QPoly::one());
    }

    #[test]
    fn catalan_small() {
        assert_eq!(catalan_qt(0), QTPoly::one());
        assert_eq!(catalan_qt(1), QTPoly::one());
        assert_eq!(catalan_qt(2), QTPoly::from_triples(&[(0, 0, 1), (1, 2, 1)]));
    }

    #[test]
    fn closed_forms_small_values() {
        let one_tq2 = QTPoly::from_triples(&[(0, 0, 1), (1, 2, 1)]);
        assert_eq!(thm_lopsided(2, 2, 0).unwrap(), one_tq2);
        assert_eq!(thm_lopsided(3, 3, -3).unwrap(), QTPoly::one());
        assert!(thm_lopsided(2, 2, 2).is_err());
        assert_eq!(thm_central_dsq(1, 1, 0).unwrap(), QTPoly::one());
        assert_eq!(thm_central_dsq(2, 2, 0).unwrap(), one_tq2);
        assert_eq!(thm_central_drect(1, 1, 0).unwrap(), QTPoly::one());
        assert_eq!(thm_box_t1(1, 1, 0).unwrap(), QPoly::one());
        assert_eq!(thm_box_t1(2, 3, 2).unwrap(), qbinom(5, 2));
        assert!(thm_central_dsq(3, 1, 1).is_err());
        assert_eq!(fh_formula(2, 2, false).unwrap(), one_tq2);
        assert_eq!(fh_formula(3, 0, false).unwrap(), QTPoly::one());
        assert!(fh_formula(1, 2, false).is_err());
        assert_eq!(
            keith_km(2, 2, 0).unwrap(),
            QTPoly::from_triples(&[(1, 2, 1), (2, 4, 1)])
        );
        assert_eq!(lgv_product(2, 2, 1, 1, true).unwrap(), QPoly::monomial(1, 1));
        assert_eq!(lgv_product(3, 4, 2, 0, false).unwrap(), QPoly::one());
    }

    #[test]
    fn concurrent_qbinom_reads() {
        let handles: Vec<_> = (0..4)
            .map(|t| std::thread::spawn(move || qbinom(20 + t, 7)))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let p = h.join().unwrap();
            assert_eq!(p.at_one(), num_bigint::BigInt::from(binom(20 + t as u64, 7)));
        }
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
}
