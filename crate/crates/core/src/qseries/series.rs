use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde_json::{Map, Value};

use super::poly::{bigint_json, write_terms, QPoly, QTPoly};
use crate::error::{Error, Result};

/// Multivariate power series truncated in one distinguished variable.
///
/// Monomials are exponent vectors aligned with `vars`. Every stored monomial
/// has degree at most `order` in `vars[trunc_var]`; the other variables are
/// polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: Vec<String>,
    trunc_var: usize,
    order: u32,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl TruncatedSeries {
    pub fn zero(vars: &[&str], trunc: &str, order: u32) -> Result<Self> {
        let trunc_var = vars
            .iter()
            .position(|v| *v == trunc)
            .ok_or_else(|| Error::UnknownName(trunc.to_string()))?;
        Ok(TruncatedSeries {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            trunc_var,
            order,
            terms: BTreeMap::new(),
        })
    }

    fn empty_like(&self) -> Self {
        TruncatedSeries {
            vars: self.vars.clone(),
            trunc_var: self.trunc_var,
            order: self.order,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant_like(&self, c: BigRational) -> Self {
        let mut out = self.empty_like();
        out.add_term(vec![0; self.vars.len()], c);
        out
    }

    /// The series consisting of the single variable `name`.
    pub fn variable_like(&self, name: &str) -> Result<Self> {
        let k = self.var_index(name)?;
        let mut exps = vec![0; self.vars.len()];
        exps[k] = 1;
        let mut out = self.empty_like();
        out.add_term(exps, BigRational::one());
        Ok(out)
    }

    fn var_index(&self, name: &str) -> Result<usize> {
        self.vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn trunc_var(&self) -> &str {
        &self.vars[self.trunc_var]
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Adds `c · monomial`, dropping it if beyond the truncation.
    pub fn add_term(&mut self, exps: Vec<u32>, c: BigRational) {
        assert_eq!(exps.len(), self.vars.len(), "monomial arity");
        if exps[self.trunc_var] > self.order || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert!(
            self.vars == other.vars && self.trunc_var == other.trunc_var && self.order == other.order,
            "series with different shapes"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = self.empty_like();
        for (e, x) in &self.terms {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let t = self.trunc_var;
        let mut acc: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                if ea[t] + eb[t] > self.order {
                    continue;
                }
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        TruncatedSeries {
            terms: acc,
            ..self.empty_like()
        }
    }

    /// The part of degree zero in the truncation variable.
    fn head(&self) -> Self {
        let mut out = self.empty_like();
        for (e, c) in &self.terms {
            if e[self.trunc_var] == 0 {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    fn head_constant(&self, what: &str) -> Result<BigRational> {
        let head = self.head();
        let zero = vec![0; self.vars.len()];
        if head.terms.keys().any(|e| *e != zero) {
            return Err(Error::Domain(format!(
                "{what} needs a constant term free of the other variables"
            )));
        }
        let c = self.coeff(&zero);
        if c.is_zero() {
            return Err(Error::Domain(format!("{what} needs a nonzero constant term")));
        }
        Ok(c)
    }

    fn newton_rounds(&self) -> u32 {
        let mut r = 1;
        while (1u64 << r) <= self.order as u64 {
            r += 1;
        }
        r + 1
    }

    /// Multiplicative inverse by Newton iteration `y ← y(2 − f y)`.
    pub fn inv(&self) -> Result<Self> {
        let c = self.head_constant("inverse")?;
        let two = self.constant_like(BigRational::from_integer(2.into()));
        let mut y = self.constant_like(c.recip());
        for _ in 0..self.newton_rounds() {
            y = y.mul(&two.sub(&self.mul(&y)));
        }
        Ok(y)
    }

    /// `f^{−1/2}` for `f` with constant term 1, by Newton iteration
    /// `y ← y + y(1 − f y²)/2`.
    pub fn inv_sqrt(&self) -> Result<Self> {
        let c = self.head_constant("inverse square root")?;
        if !c.is_one() {
            return Err(Error::Domain("inverse square root needs constant term 1".into()));
        }
        let one = self.constant_like(BigRational::one());
        let half = BigRational::new(1.into(), 2.into());
        let mut y = one.clone();
        for _ in 0..self.newton_rounds() {
            let err = one.sub(&self.mul(&y.mul(&y)));
            y = y.add(&y.mul(&err).scale(&half));
        }
        Ok(y)
    }

    /// Sets variable `name` to `value` and removes it.
    pub fn specialize(&self, name: &str, value: &BigRational) -> Result<Self> {
        let k = self.var_index(name)?;
        if k == self.trunc_var {
            return Err(Error::Domain("cannot specialize the truncation variable".into()));
        }
        let mut vars = self.vars.clone();
        vars.remove(k);
        let trunc_var = if k < self.trunc_var { self.trunc_var - 1 } else { self.trunc_var };
        let mut out = TruncatedSeries {
            vars,
            trunc_var,
            order: self.order,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let p = e2.remove(k);
            out.add_term(e2, c * num_traits::pow(value.clone(), p as usize));
        }
        Ok(out)
    }

    /// Integer coefficients, or the first non-integral one as an error.
    pub fn integer_terms(&self) -> Result<BTreeMap<Vec<u32>, BigInt>> {
        self.terms
            .iter()
            .map(|(e, c)| {
                if c.is_integer() {
                    Ok((e.clone(), c.to_integer()))
                } else {
                    Err(Error::NonIntegral(format!("{c} at {e:?}")))
                }
            })
            .collect()
    }

    pub fn from_qpoly(p: &QPoly, order: u32) -> Self {
        let mut out = TruncatedSeries::zero(&["q"], "q", order).expect("q is a variable");
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term(vec![j as u32], BigRational::from_integer(c.clone()));
        }
        out
    }

    pub fn from_qtpoly(p: &QTPoly, order: u32) -> Self {
        let mut out = TruncatedSeries::zero(&["t", "q"], "q", order).expect("q is a variable");
        for (&i, qp) in p.terms() {
            for (j, c) in qp.coeffs().iter().enumerate() {
                out.add_term(vec![i as u32, j as u32], BigRational::from_integer(c.clone()));
            }
        }
        out
    }

    /// Back to a [`QPoly`] when the series is univariate in `q` and integral.
    pub fn to_qpoly(&self) -> Result<QPoly> {
        if self.vars != ["q"] {
            return Err(Error::Domain(format!("expected a series in q, got {:?}", self.vars)));
        }
        let mut coeffs = vec![BigInt::zero(); self.order as usize + 1];
        for (e, c) in self.integer_terms()? {
            coeffs[e[0] as usize] = c;
        }
        Ok(QPoly::from_coeffs(coeffs))
    }

    /// Back to a [`QTPoly`] when the variables are `(t, q)` and integral.
    pub fn to_qtpoly(&self) -> Result<QTPoly> {
        if self.vars != ["t", "q"] {
            return Err(Error::Domain(format!("expected a series in t, q, got {:?}", self.vars)));
        }
        let mut out = QTPoly::zero();
        for (e, c) in self.integer_terms()? {
            out.add_term(e[0] as usize, &QPoly::monomial(c, e[1] as usize));
        }
        Ok(out)
    }

    /// Nested by variable, e.g. `{"t^1": {"q^2": 1}}`, plus `"truncation"`.
    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for (e, c) in &self.terms {
            let mut node = &mut coeffs;
            for (k, (name, p)) in self.vars.iter().zip(e).enumerate() {
                let key = format!("{name}^{p}");
                if k + 1 == self.vars.len() {
                    node.insert(key, rational_json(c));
                    break;
                }
                node = node
                    .entry(key)
                    .or_insert_with(|| Value::Object(Map::new()))
                    .as_object_mut()
                    .expect("nested objects");
            }
        }
        let mut out = Map::new();
        out.insert("truncation".into(), Value::from(self.order));
        out.insert("variable".into(), Value::from(self.trunc_var()));
        out.insert("coefficients".into(), Value::Object(coeffs));
        Value::Object(out)
    }
}

fn rational_json(c: &BigRational) -> Value {
    if c.is_integer() {
        bigint_json(&c.to_integer())
    } else {
        Value::String(c.to_string())
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.integer_terms() {
            Ok(ints) => {
                // Order by the truncation variable first.
                let t = self.trunc_var;
                let mut items: Vec<(&Vec<u32>, &BigInt)> = ints.iter().collect();
                items.sort_by(|a, b| (a.0[t], a.0).cmp(&(b.0[t], b.0)));
                write_terms(
                    f,
                    items.into_iter().map(|(e, c)| {
                        (
                            self.vars.iter().map(|s| s.as_str()).zip(e.iter().map(|&x| x as usize)).collect(),
                            c,
                        )
                    }),
                )?;
            }
            Err(_) => {
                let parts: Vec<String> = self.terms.iter().map(|(e, c)| format!("({c})*{e:?}")).collect();
                f.write_str(&parts.join(" + "))?;
            }
        }
        write!(f, " + O({}^{})", self.trunc_var(), self.order + 1)
    }
}

/// Exponents `s_i` with `f ≡ Π_{i≥1} (1 − q^i)^{−s_i}` to the truncation order.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct ExponentSequence {
    pub s: Vec<i64>,
}

impl ExponentSequence {
    /// `Π_{i ≤ order} (1 − q^i)^{−s_i}` truncated at `order`.
    pub fn reconstruct(&self, order: usize) -> QPoly {
        let mut c = vec![BigInt::zero(); order + 1];
        c[0] = BigInt::one();
        for (k, &s) in self.s.iter().enumerate().take(order) {
            apply_factor(&mut c, k + 1, -s);
        }
        QPoly::from_coeffs(c)
    }
}

/// Multiplies the truncated coefficient vector by `(1 − q^i)^e`.
fn apply_factor(c: &mut [BigInt], i: usize, e: i64) {
    let n = c.len();
    for _ in 0..e.unsigned_abs() {
        if e > 0 {
            for k in (i..n).rev() {
                let prev = c[k - i].clone();
                c[k] -= prev;
            }
        } else {
            for k in i..n {
                let prev = c[k - i].clone();
                c[k] += prev;
            }
        }
    }
}

/// Peels `s_1, s_2, …` order by order: `s_i` is the current coefficient of
/// `q^i`, which the factor `(1 − q^i)^{s_i}` then cancels.
pub fn product_exponents(f: &TruncatedSeries, order: u32) -> Result<ExponentSequence> {
    if f.vars().len() != 1 {
        return Err(Error::Precondition(format!(
            "product exponents need a univariate series, got {:?}",
            f.vars()
        )));
    }
    let order = order.min(f.order()) as usize;
    let mut c = vec![BigInt::zero(); order + 1];
    for (e, x) in f.integer_terms()? {
        if (e[0] as usize) <= order {
            c[e[0] as usize] = x;
        }
    }
    if !c[0].is_one() {
        return Err(Error::Precondition(format!("constant term is {}, not 1", c[0])));
    }
    let mut s = Vec::with_capacity(order);
    for i in 1..=order {
        let si = c[i]
            .to_i64()
            .ok_or_else(|| Error::Domain(format!("exponent s_{i} = {} does not fit in i64", c[i])))?;
        apply_factor(&mut c, i, si);
        debug_assert!(c[i].is_zero());
        s.push(si);
    }
    Ok(ExponentSequence { s })
}

/// `1/(q;q)_i` truncated at `order`.
pub fn inv_q_pochhammer(i: usize, order: usize) -> QPoly {
    inv_product(1..=i, order)
}

/// `Π_{i ∈ parts, i ≤ order} 1/(1 − q^i)` truncated at `order`.
pub fn inv_product<I: IntoIterator<Item = usize>>(parts: I, order: usize) -> QPoly {
    let mut c = vec![BigInt::zero(); order + 1];
    c[0] = BigInt::one();
    for i in parts {
        if (1..=order).contains(&i) {
            apply_factor(&mut c, i, -1);
        }
    }
    QPoly::from_coeffs(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_series(cs: &[i64], order: u32) -> TruncatedSeries {
        TruncatedSeries::from_qpoly(&QPoly::from_i64s(cs), order)
    }

    #[test]
    fn inverse_of_one_minus_q() {
        let f = q_series(&[1, -1], 6);
        let g = f.inv().unwrap();
        assert_eq!(g.to_qpoly().unwrap(), QPoly::from_i64s(&[1; 7]));
    }

    #[test]
    fn inverse_sqrt_of_one_minus_4q() {
        // central binomial coefficients
        let f = q_series(&[1, -4], 6);
        let g = f.inv_sqrt().unwrap();
        assert_eq!(g.to_qpoly().unwrap(), QPoly::from_i64s(&[1, 2, 6, 20, 70, 252, 924]));
    }

    #[test]
    fn non_integral_is_reported() {
        let f = q_series(&[1, -1], 3).inv_sqrt().unwrap();
        assert!(matches!(f.integer_terms(), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn exponents() {
        let f = TruncatedSeries::from_qpoly(&inv_q_pochhammer(1, 8), 8);
        assert_eq!(product_exponents(&f, 8).unwrap().s, vec![1, 0, 0, 0, 0, 0, 0, 0]);
        let f = TruncatedSeries::from_qpoly(&inv_q_pochhammer(2, 8), 8);
        assert_eq!(product_exponents(&f, 8).unwrap().s, vec![1, 1, 0, 0, 0, 0, 0, 0]);
        let seq = ExponentSequence { s: vec![1, 1] };
        assert_eq!(seq.reconstruct(8), inv_q_pochhammer(2, 8));
        assert!(product_exponents(&q_series(&[2, 1], 4), 4).is_err());
    }

    #[test]
    fn specialization() {
        let s = TruncatedSeries::from_qtpoly(&QTPoly::from_triples(&[(0, 0, 1), (2, 1, 3)]), 4);
        let at2 = s.specialize("t", &BigRational::from_integer(2.into())).unwrap();
        assert_eq!(at2.to_qpoly().unwrap(), QPoly::from_i64s(&[1, 12]));
    }
}
