use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weylcomb::{self, GroupKind, Permutation, SignedPermutation, WeylElement};

/// Exponents `((a_1, b_1), …, (a_n, b_n))` of `x_1^{a_1} y_1^{b_1} ⋯ x_n^{a_n} y_n^{b_n}`.
pub type Monomial = Vec<(u32, u32)>;

/// Total degree of a monomial (`x_i` and `y_i` both of degree 1).
pub fn monomial_degree(m: &[(u32, u32)]) -> usize {
    m.iter().map(|&(a, b)| (a + b) as usize).sum()
}

/// A polynomial in `x_1..x_n, y_1..y_n` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, vec![(0, 0); n])
    }

    pub fn monomial(n: usize, exps: Monomial) -> Self {
        assert_eq!(exps.len(), n, "monomial has the wrong number of pairs");
        let mut p = MultiPoly::zero(n);
        p.terms.insert(exps, BigRational::one());
        p
    }

    /// Builds `∏ x_i^{xs[i]} y_i^{ys[i]}` from two exponent vectors.
    pub fn from_exponents(xs: &[u32], ys: &[u32]) -> Result<Self> {
        if xs.len() != ys.len() {
            return Err(Error::invalid("x and y exponent vectors differ in length"));
        }
        Ok(Self::monomial(
            xs.len(),
            xs.iter().copied().zip(ys.iter().copied()).collect(),
        ))
    }

    /// `x_i`, 1-based.
    pub fn x(n: usize, i: usize) -> Self {
        let mut m = vec![(0, 0); n];
        m[i - 1].0 = 1;
        Self::monomial(n, m)
    }

    /// `y_i`, 1-based.
    pub fn y(n: usize, i: usize) -> Self {
        let mut m = vec![(0, 0); n];
        m[i - 1].1 = 1;
        Self::monomial(n, m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[(u32, u32)]) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, k: &BigRational) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        if k.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect();
        out
    }

    /// Degree of every term, if the polynomial is homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| monomial_degree(m));
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    /// `(x-degree, y-degree)` of every term, if bihomogeneous and nonzero.
    pub fn bidegree(&self) -> Option<(usize, usize)> {
        let bi = |m: &Monomial| {
            m.iter().fold((0usize, 0usize), |(x, y), &(a, b)| {
                (x + a as usize, y + b as usize)
            })
        };
        let mut it = self.terms.keys().map(bi);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        (0..k).fold(MultiPoly::one(self.n), |acc, _| &acc * self)
    }

    /// Substitutes `x_i ↦ ε_i x_{t_i}` and `y_i ↦ ε_i y_{t_i}`.
    fn substitute(&self, targets: &[usize], negated: &[bool]) -> MultiPoly {
        let mut out = MultiPoly::zero(self.n);
        for (m, c) in &self.terms {
            let mut image = vec![(0, 0); self.n];
            let mut sign_flip = false;
            for (i, &(a, b)) in m.iter().enumerate() {
                image[targets[i]] = (a, b);
                if negated[i] && (a + b) % 2 == 1 {
                    sign_flip = !sign_flip;
                }
            }
            out.add_term(image, if sign_flip { -c.clone() } else { c.clone() });
        }
        out
    }

    fn check_rank(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::invalid(format!(
                "group of rank {n} cannot act on polynomials in {} variable pairs",
                self.n
            )));
        }
        Ok(())
    }
}

/// Diagonal action `x_i ↦ x_{w(i)}`, `y_i ↦ y_{w(i)}`.
pub fn act_perm(w: &Permutation, p: &MultiPoly) -> Result<MultiPoly> {
    p.check_rank(w.rank())?;
    let targets: Vec<usize> = w.word().iter().map(|&v| v as usize - 1).collect();
    Ok(p.substitute(&targets, &vec![false; p.n]))
}

/// Diagonal signed action `x_i ↦ ±x_{|w(i)|}`, `y_i ↦ ±y_{|w(i)|}`.
pub fn act_signed(w: &SignedPermutation, p: &MultiPoly) -> Result<MultiPoly> {
    p.check_rank(w.rank())?;
    let targets: Vec<usize> = w.word().iter().map(|v| v.unsigned_abs() as usize - 1).collect();
    let negated: Vec<bool> = w.word().iter().map(|&v| v < 0).collect();
    Ok(p.substitute(&targets, &negated))
}

pub fn act(w: &WeylElement, p: &MultiPoly) -> Result<MultiPoly> {
    match w {
        WeylElement::Sym(w) => act_perm(w, p),
        WeylElement::Signed(w) => act_signed(w, p),
    }
}

/// The Reynolds operator `P ↦ (1/|W|) Σ_w w·P`, by summing over the group.
pub fn average(kind: GroupKind, p: &MultiPoly) -> Result<MultiPoly> {
    let mut total = MultiPoly::zero(p.n);
    for w in weylcomb::enumerate(kind, p.n)? {
        total = &total + &act(&w, p)?;
    }
    let order = BigRational::from_integer(BigInt::from(kind.order(p.n)));
    Ok(total.scale(&order.recip()))
}

/// `p_n(a, b) = Σ_i x_i^a y_i^b`.
pub fn power_sum(n: usize, a: u32, b: u32) -> Result<MultiPoly> {
    if a == 0 && b == 0 {
        return Err(Error::invalid("power sum p(0,0) is a constant, not a generator"));
    }
    let mut p = MultiPoly::zero(n);
    for i in 0..n {
        let mut m = vec![(0, 0); n];
        m[i] = (a, b);
        p.add_term(m, BigRational::one());
    }
    Ok(p)
}

impl Add for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, rhs.n);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &rhs.scale(&-BigRational::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.n, rhs.n);
        let mut out = MultiPoly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = m1
                    .iter()
                    .zip(m2)
                    .map(|(&(a1, b1), &(a2, b2))| (a1 + a2, b1 + b2))
                    .collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &[(u32, u32)]) -> fmt::Result {
    let mut first = true;
    let mut factor = |f: &mut fmt::Formatter<'_>, var: char, i: usize, e: u32| -> fmt::Result {
        if e == 0 {
            return Ok(());
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{var}{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        Ok(())
    };
    for (i, &(a, _)) in m.iter().enumerate() {
        factor(f, 'x', i, a)?;
    }
    for (i, &(_, b)) in m.iter().enumerate() {
        factor(f, 'y', i, b)?;
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            write!(f, "{sep}")?;
            let mag = c.abs();
            let constant = m.iter().all(|&(a, b)| a + b == 0);
            if constant {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write_monomial(f, m)?;
        }
        Ok(())
    }
}
