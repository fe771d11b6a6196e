use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Map, Value};

use crate::error::{Error, Result};

/// Dense polynomial in `q` with integer coefficients, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        QPoly::from_coeffs(vec![c.into()])
    }

    /// `c q^k`.
    pub fn monomial<T: Into<BigInt>>(c: T, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        QPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        QPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Divide by `q^k`; errors if a lower coefficient is nonzero.
    pub fn unshift(&self, k: usize) -> Result<QPoly> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::Domain(format!("{self} is not divisible by q^{k}")));
        }
        Ok(QPoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect()))
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Drop all terms of degree above `order`.
    pub fn truncate(&self, order: usize) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn mul_trunc(&self, other: &QPoly, order: usize) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let len = (self.coeffs.len() + other.coeffs.len() - 1).min(order + 1);
        let mut out = vec![BigInt::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }

    /// Long division; the divisor must have leading coefficient `±1`.
    pub fn div_rem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let lead = &divisor.coeffs[dd];
        if !lead.abs().is_one() {
            return Err(Error::Domain(format!("divisor {divisor} is not monic up to sign")));
        }
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * lead;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * dj;
            }
            quot[k] = c;
        }
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Exact division, erroring on a nonzero remainder.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::Domain(format!("{self} is not divisible by {divisor}")));
        }
        Ok(q)
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                map.insert(format!("q^{j}"), bigint_json(c));
            }
        }
        Value::Object(map)
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(c.to_string()),
    }
}

/// Renders `c t^i q^j` terms in the sparse text format, e.g.
/// `1 + t*q^2 - 2*t^2*q^5`.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (Vec<(&'a str, usize)>, &'a BigInt)>,
{
    let mut first = true;
    for (vars, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else if c.is_negative() {
            f.write_str(" - ")?;
        } else {
            f.write_str(" + ")?;
        }
        first = false;
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() || vars.iter().all(|&(_, e)| e == 0) {
            factors.push(mag.to_string());
        }
        for (name, e) in vars {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        f.write_str(&factors.join("*"))?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().enumerate().map(|(j, c)| (vec![("q", j)], c)))
    }
}

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        *self = QPoly::from_coeffs(std::mem::take(&mut self.coeffs));
    }
}

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
        *self = QPoly::from_coeffs(std::mem::take(&mut self.coeffs));
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        self.mul_trunc(rhs, self.coeffs.len() + rhs.coeffs.len())
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

/// Polynomial in `t` whose coefficients are [`QPoly`]s. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QTPoly {
    terms: BTreeMap<usize, QPoly>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly::default()
    }

    pub fn one() -> Self {
        QTPoly::from_q(QPoly::one())
    }

    pub fn from_q(p: QPoly) -> Self {
        QTPoly::t_power(0, p)
    }

    /// `t^i p(q)`.
    pub fn t_power(i: usize, p: QPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !p.is_zero() {
            terms.insert(i, p);
        }
        QTPoly { terms }
    }

    /// From `(i, j, c)` triples meaning `c t^i q^j`.
    pub fn from_triples(triples: &[(usize, usize, i64)]) -> Self {
        let mut out = QTPoly::zero();
        for &(i, j, c) in triples {
            out.add_term(i, &QPoly::monomial(c, j));
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<usize, QPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn t_coeff(&self, i: usize) -> QPoly {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&i).map(|p| p.coeff(j)).unwrap_or_default()
    }

    /// Adds `t^i p(q)`.
    pub fn add_term(&mut self, i: usize, p: &QPoly) {
        if p.is_zero() {
            return;
        }
        let entry = self.terms.entry(i).or_default();
        *entry += p;
        if entry.is_zero() {
            self.terms.remove(&i);
        }
    }

    /// The specialization `t = 1`.
    pub fn at_t_one(&self) -> QPoly {
        let mut out = QPoly::zero();
        for p in self.terms.values() {
            out += p;
        }
        out
    }

    /// Substitutes `t ↦ t q^s`, sending `t^i q^j` to `t^i q^{j + s i}`.
    /// Errors if an exponent would become negative.
    pub fn shear(&self, s: i64) -> Result<QTPoly> {
        let mut out = QTPoly::zero();
        for (&i, p) in &self.terms {
            let by = s * i as i64;
            let shifted = if by >= 0 {
                p.shift(by as usize)
            } else {
                p.unshift((-by) as usize)
                    .map_err(|_| Error::Domain(format!("substituting t -> t*q^{s} leaves a negative power of q")))?
            };
            out.add_term(i, &shifted);
        }
        Ok(out)
    }

    pub fn truncate_q(&self, order: usize) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&i, p) in &self.terms {
            out.add_term(i, &p.truncate(order));
        }
        out
    }

    pub fn mul_trunc_q(&self, other: &QTPoly, order: usize) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &other.terms {
                out.add_term(i + j, &a.mul_trunc(b, order));
            }
        }
        out
    }

    pub fn scale_q(&self, p: &QPoly) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&i, a) in &self.terms {
            out.add_term(i, &(a * p));
        }
        out
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(QPoly::is_nonnegative)
    }

    /// `{"t^i": {"q^j": c}}`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (i, p) in &self.terms {
            map.insert(format!("t^{i}"), p.to_json());
        }
        Value::Object(map)
    }
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().flat_map(|(&i, p)| {
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(move |(j, c)| (vec![("t", i), ("q", j)], c))
            }),
        )
    }
}

impl Add<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (&i, p) in &rhs.terms {
            out.add_term(i, p);
        }
        out
    }
}

impl Sub<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (&i, p) in &rhs.terms {
            out.add_term(i, &-p);
        }
        out
    }
}

impl Mul<&QTPoly> for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        let mut out = QTPoly::zero();
        for (&i, a) in &self.terms {
            for (&j, b) in &rhs.terms {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }
}
