//! Naive reference implementations shared by the integration tests. Nothing
//! here calls into the library except for constructing values.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rankpath::{Partition, QPoly, QTPoly, StepWord};

pub fn w(s: &str) -> StepWord {
    s.parse().unwrap()
}

pub fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn digits(w: &StepWord) -> Vec<u8> {
    w.to_digits().bytes().map(|b| b - b'0').collect()
}

pub fn from_digits(d: &[u8]) -> StepWord {
    let s: String = d.iter().map(|&x| char::from(b'0' + x)).collect();
    w(&s)
}

/// `φ(ε)=ε, φ(1)=1, φ(u2)=φ(u)2, φ(u11)=1φ(u1), φ(u21)=2φ(u)1`.
pub fn phi_rec(w: &[u8]) -> Vec<u8> {
    match w {
        [] => vec![],
        [1] => vec![1],
        [rest @ .., 2] => {
            let mut out = phi_rec(rest);
            out.push(2);
            out
        }
        [rest @ .., 1, 1] => {
            let mut u = rest.to_vec();
            u.push(1);
            let mut out = vec![1];
            out.extend(phi_rec(&u));
            out
        }
        [rest @ .., 2, 1] => {
            let mut out = vec![2];
            out.extend(phi_rec(rest));
            out.push(1);
            out
        }
        _ => unreachable!("letters are 1 and 2"),
    }
}

/// All words with `ones` 1s and `twos` 2s.
pub fn words(ones: usize, twos: usize) -> Vec<Vec<u8>> {
    let len = ones + twos;
    (0u32..(1u32 << len))
        .filter(|mask| mask.count_ones() as usize == twos)
        .map(|mask| (0..len).map(|b| if mask >> b & 1 == 1 { 2 } else { 1 }).collect())
        .collect()
}

/// All partitions with at most `m` parts, each at most `n`.
pub fn partitions_in_box(m: u32, n: u32) -> Vec<Vec<u32>> {
    fn go(m: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(cur.clone());
        if cur.len() as u32 == m {
            return;
        }
        for x in 1..=cap {
            cur.push(x);
            go(m, x, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(m, n, &mut vec![], &mut out);
    out
}

/// All partitions of `n`.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn go(left: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in (1..=cap.min(left)).rev() {
            cur.push(x);
            go(left - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = vec![];
    go(n, n, &mut vec![], &mut out);
    out
}

pub fn conj(parts: &[u32]) -> Vec<u32> {
    let top = parts.first().copied().unwrap_or(0);
    (1..=top).map(|j| parts.iter().filter(|&&x| x >= j).count() as u32).collect()
}

pub fn area(parts: &[u32]) -> u64 {
    parts.iter().map(|&x| x as u64).sum()
}

pub fn durfee(parts: &[u32]) -> usize {
    parts.iter().enumerate().filter(|(i, &x)| x as usize > *i).count()
}

pub fn durfee_rect(parts: &[u32]) -> usize {
    parts.iter().enumerate().filter(|(i, &x)| x as usize > i + 1).count()
}

pub fn ranks(parts: &[u32]) -> Vec<i64> {
    let c = conj(parts);
    (0..durfee(parts)).map(|i| parts[i] as i64 - c[i] as i64).collect()
}

/// Boundary word of a partition in `m × n`, traced row by row from the
/// bottom of the box.
pub fn boundary_word(parts: &[u32], m: u32, n: u32) -> Vec<u8> {
    let mut out = vec![];
    let mut col = 0;
    for r in (0..m as usize).rev() {
        let x = parts.get(r).copied().unwrap_or(0);
        out.extend(std::iter::repeat_n(2, (x - col) as usize));
        col = x;
        out.push(1);
    }
    out.extend(std::iter::repeat_n(2, (n - col) as usize));
    out
}

pub fn heights(w: &[u8]) -> Vec<i64> {
    let mut h = vec![0];
    for &c in w {
        h.push(h.last().unwrap() + if c == 1 { 1 } else { -1 });
    }
    h
}

/// `(x, h)` of every valley, `x` counted in steps.
pub fn valleys(w: &[u8]) -> Vec<(usize, i64)> {
    let h = heights(w);
    (1..w.len()).filter(|&x| w[x - 1] == 2 && w[x] == 1).map(|x| (x, h[x])).collect()
}

pub fn peaks(w: &[u8]) -> Vec<(usize, i64)> {
    let h = heights(w);
    (1..w.len()).filter(|&x| w[x - 1] == 1 && w[x] == 2).map(|x| (x, h[x])).collect()
}

pub fn maj(w: &[u8]) -> u64 {
    valleys(w).iter().map(|v| v.0 as u64).sum()
}

pub fn inv(w: &[u8]) -> u64 {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                n += 1;
            }
        }
    }
    n
}

pub fn min_height(w: &[u8]) -> i64 {
    *heights(w).iter().min().unwrap()
}

/// Matching by repeatedly deleting adjacent `12` pairs among the surviving
/// letters. Indices are 1-based.
pub fn match_by_removal(w: &[u8]) -> (BTreeSet<(usize, usize)>, Vec<usize>, Vec<usize>) {
    let mut alive: Vec<usize> = (0..w.len()).collect();
    let mut pairs = BTreeSet::new();
    loop {
        let hit = (0..alive.len().saturating_sub(1)).find(|&k| w[alive[k]] == 1 && w[alive[k + 1]] == 2);
        match hit {
            Some(k) => {
                pairs.insert((alive[k] + 1, alive[k + 1] + 1));
                alive.drain(k..k + 2);
            }
            None => break,
        }
    }
    let twos = alive.iter().filter(|&&i| w[i] == 2).map(|i| i + 1).collect();
    let ones = alive.iter().filter(|&&i| w[i] == 1).map(|i| i + 1).collect();
    (pairs, twos, ones)
}

/// `Σ t^a q^b` over the given exponent pairs.
pub fn poly<I: IntoIterator<Item = (usize, usize)>>(it: I) -> QTPoly {
    let mut out = QTPoly::zero();
    for (a, b) in it {
        out.add_term(a, &QPoly::monomial(1, b));
    }
    out
}

/// Gaussian binomial from the product formula, by exact division.
pub fn qbin_quotient(n: i64, k: i64) -> QPoly {
    if k < 0 || k > n {
        return QPoly::zero();
    }
    let poch = |j: i64| {
        let mut out = QPoly::one();
        for i in 1..=j as usize {
            out = &out * &(&QPoly::one() - &QPoly::monomial(1, i));
        }
        out
    };
    let den = &poch(k) * &poch(n - k);
    poch(n).div_exact(&den).unwrap()
}

/// Remove one part `i`, add one to each of the first `i − 1` parts.
pub fn naive_f(parts: &[u32]) -> Vec<u32> {
    let r = ranks(parts);
    let tau = *r.iter().min().unwrap();
    let i = r.iter().rposition(|&x| x == tau).unwrap() + 1;
    let mut out = parts.to_vec();
    let pos = out.iter().position(|&x| x as usize == i).unwrap();
    out.remove(pos);
    for x in out.iter_mut().take(i - 1) {
        *x += 1;
    }
    out
}
