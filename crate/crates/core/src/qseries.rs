//! Exact univariate polynomials and truncated power series with
//! arbitrary-precision integer coefficients, and rational series whose
//! denominators are products of factors `(1 - t^e)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Number, Value};

use crate::error::{Error, Result};

/// Truncation degree used when the caller does not pick one.
pub const DEFAULT_TRUNCATION: usize = 40;

/// A polynomial in one variable with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: BTreeMap<usize, BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly::monomial(0, 1)
    }

    pub fn monomial(exp: usize, coeff: impl Into<BigInt>) -> Self {
        let mut p = QPoly::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from dense coefficients, lowest degree first.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = QPoly::zero();
        for (e, c) in coeffs.into_iter().enumerate() {
            p.add_term(e, c.into());
        }
        p
    }

    /// The q-integer `[k]_q = 1 + q + … + q^{k-1}`.
    pub fn q_integer(k: usize) -> Self {
        QPoly::from_coeffs(std::iter::repeat_n(1, k))
    }

    /// The q-factorial `[1]_q [2]_q ⋯ [k]_q`.
    pub fn q_factorial(k: usize) -> Self {
        (1..=k).fold(QPoly::one(), |acc, i| &acc * &QPoly::q_integer(i))
    }

    pub fn add_term(&mut self, exp: usize, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.values().next_back()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> + '_ {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    /// Sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// `p(t) ↦ p(t^k)`.
    pub fn stretch(&self, k: usize) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// `t^d p(1/t) = p(t)` with `d` the degree.
    pub fn is_palindromic(&self) -> bool {
        let Some(top) = self.degree() else {
            return true;
        };
        self.coeffs
            .iter()
            .all(|(&e, c)| self.coeffs.get(&(top - e)) == Some(c))
    }

    /// Exact division by a divisor whose leading coefficient is `±1`.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly> {
        let (dtop, dlead) = match divisor.coeffs.iter().next_back() {
            Some((&e, c)) => (e, c.clone()),
            None => return Err(Error::invalid("division by the zero polynomial")),
        };
        if !dlead.abs().is_one() {
            return Err(Error::invalid("divisor must have a unit leading coefficient"));
        }
        let mut rem = self.clone();
        let mut quot = QPoly::zero();
        while let Some((&e, c)) = rem.coeffs.iter().next_back() {
            if e < dtop {
                break;
            }
            let factor = c * &dlead;
            let shift = e - dtop;
            for (&de, dc) in &divisor.coeffs {
                rem.add_term(de + shift, -(&factor * dc));
            }
            quot.add_term(shift, factor);
        }
        if !rem.is_zero() {
            return Err(Error::Consistency(format!(
                "polynomial division left remainder {rem}"
            )));
        }
        Ok(quot)
    }

    pub fn truncate(&self, trunc: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(trunc);
        for (&e, c) in self.coeffs.range(..=trunc) {
            s.coeffs[e] = c.clone();
        }
        s
    }

    /// Renders the polynomial in the variable `var`, highest terms last.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = e == 0 || !mag.is_one();
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            match e {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&e.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Add for &QPoly {
    type Output = QPoly;

    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.coeffs {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;

    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &(-rhs)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;

    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;

    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (&e1, c1) in &self.coeffs {
            for (&e2, c2) in &rhs.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

/// A power series known exactly through degree `trunc`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(trunc: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); trunc + 1],
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = TruncatedSeries::zero(trunc);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `coeffs[0..=D]`; the truncation degree is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::invalid("a truncated series needs at least one coefficient"));
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn coeff_mut(&mut self, exp: usize) -> &mut BigInt {
        &mut self.coeffs[exp]
    }

    /// Coefficients as `i64`, when they all fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    /// Restricts to a smaller truncation degree.
    pub fn truncated(&self, trunc: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(trunc);
        for (dst, src) in s.coeffs.iter_mut().zip(&self.coeffs) {
            *dst = src.clone();
        }
        s
    }

    /// Drops coefficients above `trunc` into a polynomial.
    pub fn to_poly(&self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().cloned())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_trunc(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_trunc(other)?;
        let d = self.trunc();
        let mut out = TruncatedSeries::zero(d);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Exact division of every coefficient by `k`; fails if any is not a multiple.
    pub fn div_exact_scalar(&self, k: &BigInt) -> Result<TruncatedSeries> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (e, c) in self.coeffs.iter().enumerate() {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(Error::Consistency(format!(
                    "coefficient {c} at degree {e} is not divisible by {k}"
                )));
            }
            coeffs.push(q);
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplies in place by `(1 - t^e)^{-1}` (a running sum with stride `e`).
    pub fn divide_by_one_minus(&mut self, e: usize) {
        assert!(e >= 1);
        for k in e..self.coeffs.len() {
            let prev = self.coeffs[k - e].clone();
            self.coeffs[k] += prev;
        }
    }

    /// Multiplies in place by `(1 + t^e)^{-1}`.
    pub fn divide_by_one_plus(&mut self, e: usize) {
        assert!(e >= 1);
        for k in e..self.coeffs.len() {
            let prev = self.coeffs[k - e].clone();
            self.coeffs[k] -= prev;
        }
    }

    /// Multiplies in place by `(1 - t^e)`.
    pub fn multiply_by_one_minus(&mut self, e: usize) {
        assert!(e >= 1);
        for k in (e..self.coeffs.len()).rev() {
            let prev = self.coeffs[k - e].clone();
            self.coeffs[k] -= prev;
        }
    }

    /// Substitutes `s = t^k`: coefficient of `s^j` moves to `t^{kj}`,
    /// and the result is truncated at `trunc` in `t`.
    pub fn stretch(&self, k: usize, trunc: usize) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(trunc);
        for (j, c) in self.coeffs.iter().enumerate() {
            if j * k > trunc {
                break;
            }
            out.coeffs[j * k] = c.clone();
        }
        out
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// First degree at which the two series differ, comparing through the
    /// smaller truncation degree.
    pub fn first_mismatch(&self, other: &TruncatedSeries) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    fn check_trunc(&self, other: &TruncatedSeries) -> Result<()> {
        if self.trunc() != other.trunc() {
            return Err(Error::TruncationMismatch {
                left: self.trunc(),
                right: other.trunc(),
            });
        }
        Ok(())
    }

    /// `{"var":"t","trunc":D,"coeffs":[c0,…,cD]}` with exact integers.
    pub fn to_json(&self) -> Value {
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|c| Value::Number(Number::from_str(&c.to_string()).expect("integer literal")))
            .collect();
        json!({ "var": "t", "trunc": self.trunc(), "coeffs": coeffs })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Format("expected an object".into()))?;
        if obj.get("var").and_then(Value::as_str) != Some("t") {
            return Err(Error::Format("\"var\" must be \"t\"".into()));
        }
        let trunc = obj
            .get("trunc")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Format("\"trunc\" must be a nonnegative integer".into()))?
            as usize;
        let raw = obj
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Format("\"coeffs\" must be an array".into()))?;
        if raw.len() != trunc + 1 {
            return Err(Error::Format(format!(
                "expected {} coefficients, found {}",
                trunc + 1,
                raw.len()
            )));
        }
        let coeffs = raw
            .iter()
            .map(|v| match v {
                Value::Number(n) => BigInt::from_str(&n.to_string())
                    .map_err(|_| Error::Format(format!("{n} is not an integer"))),
                other => Err(Error::Format(format!("{other} is not an integer"))),
            })
            .collect::<Result<Vec<_>>>()?;
        TruncatedSeries::from_coeffs(coeffs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(t^{})", self.to_poly(), self.trunc() + 1)
    }
}

/// `numerator / ∏ (1 - t^e)^m`, with the denominator kept in factored form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSeries {
    pub numerator: QPoly,
    denominator: BTreeMap<usize, usize>,
}

impl RationalSeries {
    /// `factors` lists pairs `(e, m)` standing for `(1 - t^e)^m`; repeated
    /// exponents accumulate.
    pub fn new(numerator: QPoly, factors: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut denominator = BTreeMap::new();
        for (e, m) in factors {
            if e == 0 {
                return Err(Error::invalid("denominator factor (1 - t^0) vanishes"));
            }
            if m > 0 {
                *denominator.entry(e).or_insert(0) += m;
            }
        }
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    pub fn polynomial(numerator: QPoly) -> Self {
        RationalSeries {
            numerator,
            denominator: BTreeMap::new(),
        }
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.denominator.iter().map(|(&e, &m)| (e, m))
    }

    /// The denominator expanded as a polynomial.
    pub fn denominator_poly(&self) -> QPoly {
        let mut p = QPoly::one();
        for (e, m) in self.denominator_factors() {
            let factor = &QPoly::one() - &QPoly::monomial(e, 1);
            for _ in 0..m {
                p = &p * &factor;
            }
        }
        p
    }

    pub fn expand(&self, trunc: usize) -> TruncatedSeries {
        let mut s = self.numerator.truncate(trunc);
        for (e, m) in self.denominator_factors() {
            for _ in 0..m {
                s.divide_by_one_minus(e);
            }
        }
        s
    }

    /// Product of two series; denominators are merged factor by factor.
    pub fn product(&self, other: &RationalSeries) -> RationalSeries {
        let mut denominator = self.denominator.clone();
        for (e, m) in other.denominator_factors() {
            *denominator.entry(e).or_insert(0) += m;
        }
        RationalSeries {
            numerator: &self.numerator * &other.numerator,
            denominator,
        }
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.numerator)?;
        if self.denominator.is_empty() {
            return Ok(());
        }
        write!(f, " / (")?;
        for (i, (e, m)) in self.denominator_factors().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "(1 - t^{e})")?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        write!(f, ")")
    }
}

/// `∏_d (1 - t^d)^{-m_d}` through degree `trunc`: the Hilbert series of a
/// free polynomial algebra with `m_d` generators in degree `d`.
pub fn product_series(weights: &BTreeMap<usize, usize>, trunc: usize) -> Result<TruncatedSeries> {
    if weights.get(&0).is_some_and(|&m| m > 0) {
        return Err(Error::invalid(
            "a generator of degree 0 makes the graded series diverge",
        ));
    }
    Ok(RationalSeries::new(QPoly::one(), weights.iter().map(|(&d, &m)| (d, m)))?.expand(trunc))
}
