//! Limits of the boxed formulas as the box grows, truncated in `q`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::formulas::qbinom;
use super::poly::{QPoly, QTPoly};
use super::series::{inv_product, inv_q_pochhammer, TruncatedSeries};
use crate::error::{Error, Result};

/// A named limit identity together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Limit {
    /// `Π_{i≥2} 1/(1−q^i)`.
    LimCq1,
    /// `lim C_n(q,t)`, the lopsided limit at `b = 1`.
    LimCqt,
    /// All ranks `≥ b` by Durfee square:
    /// `1 + Σ_{i≥1} t^i q^{i(i+b)} (1−q) / ((q)_i (q)_{i+1})`.
    LopsidedLimit { b: u32 },
    /// The `b = 0`, `t = 1` case of the lopsided limit.
    LimCn,
    /// `Π_{i≥1, i≠2} 1/(1−q^i)`.
    LimCnProduct,
    /// At most `m` parts, ranks `≥ 1−ℓ`, `t = 1`:
    /// `1/(q)_m − q^{ℓ+1}/(q)_{m−ℓ−1}` for `m > ℓ`.
    BoxStrip { m: u32, ell: u32 },
    /// `Π_{i≥1, i≠ℓ+1} 1/(1−q^i)`.
    NoPart { ell: u32 },
    /// At most `m` parts, ranks `≥ 1−ℓ`, by Durfee rectangle:
    /// `Σ t^i q^{i(i+1)}/(q)_i (qbin(m+1,i+1) − q^{ℓ+1} qbin(m−ℓ,i+1))`.
    DrectStrip { m: u32, ell: u32 },
    /// `(1−q^{ℓ+1}) Σ t^i q^{i(i+1)}/((q)_i (q)_{i+1})`.
    DrectLimit { ell: u32 },
    /// At most `m` parts, ranks `≥ 1−ℓ`, by Durfee square:
    /// `Σ_{i≥0} t^i q^{i²}/(q)_i (qbin(m,i) − q^ℓ (1−q^i) qbin(m−ℓ+1,i+1))`.
    MainLimitStrip { m: u32, ell: u32 },
    /// `Σ t^i q^{i²} ((1−q^{i+1}) − q^ℓ(1−q^i)) / ((q)_i (q)_{i+1})`.
    MainLimit { ell: u32 },
    /// Ranks in `{0,−1}`: `Σ t^k q^{k²}/(q)_k`.
    Rr1,
    /// Ranks in `{0,−a}`:
    /// `Σ t^k q^{k²} Π_{j≤k}(1+q^{aj}) / Π_{j≤k}(1−q^{2j})`.
    ZeroMinusA { a: u32 },
}

/// Loose parameters as they come from a command line.
#[derive(Clone, Copy, Debug, Default)]
pub struct LimitParams {
    pub b: Option<u32>,
    pub m: Option<u32>,
    pub ell: Option<u32>,
    pub a: Option<u32>,
}

pub const LIMIT_NAMES: &[&str] = &[
    "eq-limCq1",
    "lim-Cqt",
    "cor-lopsidedlimit",
    "eq-limCn",
    "eq-limCn-product",
    "box-t1-strip",
    "no-part",
    "drect-strip",
    "drect-limit",
    "main-limit-strip",
    "mainlimit",
    "rr1-limit",
    "zero-minus-a-limit",
];

impl Limit {
    pub fn from_name(name: &str, p: LimitParams) -> Result<Limit> {
        let need = |v: Option<u32>, what: &str| {
            v.ok_or_else(|| Error::Precondition(format!("series {name} needs parameter {what}")))
        };
        let key = name.replace([':', '_'], "-");
        Ok(match key.as_str() {
            "eq-limCq1" => Limit::LimCq1,
            "lim-Cqt" => Limit::LimCqt,
            "cor-lopsidedlimit" => Limit::LopsidedLimit { b: need(p.b, "b")? },
            "eq-limCn" => Limit::LimCn,
            "eq-limCn-product" => Limit::LimCnProduct,
            "box-t1-strip" => Limit::BoxStrip {
                m: need(p.m, "m")?,
                ell: need(p.ell, "ell")?,
            },
            "no-part" => Limit::NoPart { ell: need(p.ell, "ell")? },
            "drect-strip" => Limit::DrectStrip {
                m: need(p.m, "m")?,
                ell: need(p.ell, "ell")?,
            },
            "drect-limit" => Limit::DrectLimit { ell: need(p.ell, "ell")? },
            "main-limit-strip" | "cor-main-limit" => Limit::MainLimitStrip {
                m: need(p.m, "m")?,
                ell: need(p.ell, "ell")?,
            },
            "mainlimit" | "cor-mainlimit" => Limit::MainLimit { ell: need(p.ell, "ell")? },
            "rr1-limit" | "rr1" => Limit::Rr1,
            "zero-minus-a-limit" => Limit::ZeroMinusA { a: need(p.a, "a")? },
            _ => return Err(Error::UnknownName(name.to_string())),
        })
    }

    /// Whether the series carries the variable `t`.
    pub fn has_t(&self) -> bool {
        !matches!(
            self,
            Limit::LimCq1 | Limit::LimCn | Limit::LimCnProduct | Limit::BoxStrip { .. } | Limit::NoPart { .. }
        )
    }
}

impl FromStr for Limit {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Limit::from_name(s, LimitParams::default())
    }
}

/// Expansion to order `D` in `q`. Series without `t` are univariate.
pub fn limit_series(limit: Limit, order: u32) -> Result<TruncatedSeries> {
    let d = order as usize;
    let poly = limit_qt(limit, d)?;
    if limit.has_t() {
        Ok(TruncatedSeries::from_qtpoly(&poly, order))
    } else {
        Ok(TruncatedSeries::from_qpoly(&poly.at_t_one(), order))
    }
}

fn one_minus_qk(k: usize) -> QPoly {
    &QPoly::one() - &QPoly::monomial(1, k)
}

/// `Σ_{i ≥ 0} t^i q^{e(i)} c_i(q)` truncated at `d`, where `term(i)` returns
/// `(e(i), c_i)`. Stops once `e(i) > d`; `e` must be increasing.
fn graded_sum<F>(d: usize, mut term: F) -> QTPoly
where
    F: FnMut(usize) -> (usize, QPoly),
{
    let mut out = QTPoly::zero();
    for i in 0.. {
        let (e, c) = term(i);
        if e > d {
            break;
        }
        out.add_term(i, &c.shift(e).truncate(d));
    }
    out
}

fn limit_qt(limit: Limit, d: usize) -> Result<QTPoly> {
    let poch2 = |i: usize| inv_q_pochhammer(i, d).mul_trunc(&inv_q_pochhammer(i + 1, d), d);
    // Plane partitions of shape (i, i): (1−q)/((q)_i (q)_{i+1}).
    let pp = |i: usize| poch2(i).mul_trunc(&one_minus_qk(1), d);
    Ok(match limit {
        Limit::LimCq1 => QTPoly::from_q(inv_product(2..=d, d)),
        Limit::LimCqt => limit_qt(Limit::LopsidedLimit { b: 1 }, d)?,
        Limit::LopsidedLimit { b } => graded_sum(d, |i| {
            if i == 0 {
                (0, QPoly::one())
            } else {
                (i * (i + b as usize), pp(i))
            }
        }),
        Limit::LimCn => QTPoly::from_q(limit_qt(Limit::LopsidedLimit { b: 0 }, d)?.at_t_one()),
        Limit::LimCnProduct => QTPoly::from_q(inv_product((1..=d).filter(|&i| i != 2), d)),
        Limit::BoxStrip { m, ell } => {
            if m <= ell {
                return Err(Error::Precondition(format!("box strip needs m > l, got m={m}, l={ell}")));
            }
            let head = inv_q_pochhammer(m as usize, d);
            let tail = inv_q_pochhammer((m - ell - 1) as usize, d).shift(ell as usize + 1).truncate(d);
            QTPoly::from_q(&head - &tail)
        }
        Limit::NoPart { ell } => QTPoly::from_q(inv_product((1..=d).filter(|&i| i != ell as usize + 1), d)),
        Limit::DrectStrip { m, ell } => {
            let (m, ell) = (m as i64, ell as i64);
            graded_sum(d, |i| {
                let ii = i as i64;
                let bracket =
                    &qbinom(m + 1, ii + 1) - &qbinom(m - ell, ii + 1).shift((ell + 1) as usize);
                (i * (i + 1), inv_q_pochhammer(i, d).mul_trunc(&bracket, d))
            })
        }
        Limit::DrectLimit { ell } => {
            let s = graded_sum(d, |i| (i * (i + 1), poch2(i)));
            s.mul_trunc_q(&QTPoly::from_q(one_minus_qk(ell as usize + 1)), d)
        }
        Limit::MainLimitStrip { m, ell } => {
            let (m, ell) = (m as i64, ell as i64);
            graded_sum(d, |i| {
                let ii = i as i64;
                let sub = (&one_minus_qk(i) * &qbinom(m - ell + 1, ii + 1)).shift(ell as usize);
                let bracket = &qbinom(m, ii) - &sub;
                (i * i, inv_q_pochhammer(i, d).mul_trunc(&bracket, d))
            })
        }
        Limit::MainLimit { ell } => graded_sum(d, |i| {
            let num = &one_minus_qk(i + 1) - &one_minus_qk(i).shift(ell as usize);
            (i * i, poch2(i).mul_trunc(&num, d))
        }),
        Limit::Rr1 => graded_sum(d, |k| (k * k, inv_q_pochhammer(k, d))),
        Limit::ZeroMinusA { a } => {
            if a == 0 {
                return Err(Error::Precondition("need a >= 1".into()));
            }
            let a = a as usize;
            graded_sum(d, |k| {
                let mut num = QPoly::one();
                for j in 1..=k {
                    num = num.mul_trunc(&(&QPoly::one() + &QPoly::monomial(1, a * j)), d);
                }
                let den = inv_product((1..=k).map(|j| 2 * j), d);
                (k * k, num.mul_trunc(&den, d))
            })
        }
    })
}

/// `(1−(t−1)z) / sqrt((1−(t−1)z)(1−(u−1)z)(1+(u−1)(t−1)z² − (t+u+2)z))`
/// in variables `t, u, z`, truncated at `z^D`. Coefficients are checked to be
/// integers.
pub fn rank_parity_closed_form(order: u32) -> Result<TruncatedSeries> {
    let zero = TruncatedSeries::zero(&["t", "u", "z"], "z", order)?;
    let one = zero.constant_like(BigRational::one());
    let t = zero.variable_like("t")?;
    let u = zero.variable_like("u")?;
    let z = zero.variable_like("z")?;
    let tm1 = t.sub(&one);
    let um1 = u.sub(&one);
    let two = zero.constant_like(BigRational::from_integer(BigInt::from(2)));

    let a = one.sub(&tm1.mul(&z));
    let b = one.sub(&um1.mul(&z));
    let c = one
        .add(&um1.mul(&tm1).mul(&z).mul(&z))
        .sub(&t.add(&u).add(&two).mul(&z));
    let radicand = a.mul(&b).mul(&c);
    let out = a.mul(&radicand.inv_sqrt()?);
    out.integer_terms()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lim_cn_coefficient() {
        let s = limit_series(Limit::LimCnProduct, 4).unwrap();
        assert_eq!(s.to_qpoly().unwrap().coeff(4), BigInt::from(3));
        let s = limit_series(Limit::LimCn, 4).unwrap();
        assert_eq!(s.to_qpoly().unwrap().coeff(4), BigInt::from(3));
    }

    #[test]
    fn trivial_orders() {
        let s = limit_series(Limit::LimCq1, 0).unwrap();
        assert_eq!(s.to_qpoly().unwrap(), QPoly::one());
    }

    #[test]
    fn rr1_first_t_coefficient() {
        let s = limit_series(Limit::Rr1, 5).unwrap().to_qtpoly().unwrap();
        assert_eq!(s.t_coeff(1), QPoly::from_i64s(&[0, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn lopsided_b1_matches_no_ones() {
        let s = limit_series(Limit::LopsidedLimit { b: 1 }, 6).unwrap().to_qtpoly().unwrap();
        let no_ones = limit_series(Limit::NoPart { ell: 0 }, 6).unwrap().to_qpoly().unwrap();
        assert_eq!(s.at_t_one(), no_ones);
    }

    #[test]
    fn names() {
        let p = LimitParams {
            b: Some(2),
            ..Default::default()
        };
        assert_eq!(Limit::from_name("cor:lopsidedlimit", p).unwrap(), Limit::LopsidedLimit { b: 2 });
        assert!(Limit::from_name("cor-lopsidedlimit", LimitParams::default()).is_err());
        assert!(matches!(Limit::from_name("nope", p), Err(Error::UnknownName(_))));
    }

    #[test]
    fn rank_parity_low_orders() {
        let s = rank_parity_closed_form(2).unwrap();
        let c = |t, u, z| s.coeff(&[t, u, z]);
        assert_eq!(c(0, 0, 0), BigRational::one());
        assert_eq!(c(1, 0, 2), BigRational::from_integer(2.into()));
        assert_eq!(c(0, 1, 1), BigRational::one());
    }
}
