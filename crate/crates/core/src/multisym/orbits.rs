//! Coordinates on graded pieces of the invariant rings.
//!
//! A `Σ_n`-invariant is determined by its coefficients on one monomial per
//! orbit; we use the monomial whose pairs `(a_i, b_i)` are sorted in
//! nonincreasing order. For `B_n` only orbits whose pairs all have even
//! `a_i + b_i` carry invariants.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::linalg::SparseRow;
use super::poly::{Monomial, MultiPoly};
use crate::error::{Error, Result};
use crate::weylcomb::GroupKind;

/// Sorted-pair representative of the orbit of `m`.
pub fn canonical(m: &[(u32, u32)]) -> Monomial {
    let mut c = m.to_vec();
    c.sort_unstable_by(|a, b| b.cmp(a));
    c
}

fn admissible(kind: GroupKind, m: &[(u32, u32)]) -> bool {
    match kind {
        GroupKind::Symmetric => true,
        GroupKind::Signed => m.iter().all(|&(a, b)| (a + b) % 2 == 0),
    }
}

/// Canonical orbit representatives of degree `d`, in a fixed order.
pub fn orbit_representatives(kind: GroupKind, n: usize, d: usize) -> Vec<Monomial> {
    // pairs of degree k, listed in decreasing lexicographic order
    let pairs_of = |k: usize| -> Vec<(u32, u32)> {
        (0..=k as u32).rev().map(|a| (a, k as u32 - a)).collect()
    };
    fn go(
        slots: usize,
        rest: usize,
        bound: (u32, u32),
        pairs_of: &dyn Fn(usize) -> Vec<(u32, u32)>,
        prefix: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if slots == 0 {
            if rest == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // the last slot has to absorb whatever degree is left
        let lowest = if slots == 1 { rest } else { 0 };
        for k in (lowest..=rest).rev() {
            for p in pairs_of(k) {
                if p > bound {
                    continue;
                }
                prefix.push(p);
                go(slots - 1, rest - k, p, pairs_of, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(n, d, (u32::MAX, u32::MAX), &pairs_of, &mut Vec::new(), &mut out);
    out.retain(|m| admissible(kind, m));
    out
}

/// Dimension of the degree-`d` piece of the invariant ring.
pub fn invariant_graded_dim(kind: GroupKind, n: usize, d: usize) -> usize {
    orbit_representatives(kind, n, d).len()
}

/// Number of monomials in the orbit of `m` under `Σ_n`.
pub fn orbit_size(m: &[(u32, u32)]) -> BigInt {
    let mut counts: HashMap<(u32, u32), usize> = HashMap::new();
    for &p in m {
        *counts.entry(p).or_default() += 1;
    }
    let fact = |k: usize| -> BigInt { (1..=k).map(BigInt::from).product() };
    counts
        .values()
        .fold(fact(m.len()), |acc, &c| acc / fact(c))
}

/// Sum of the distinct monomials in the `Σ_n`-orbit of `m`.
pub fn orbit_sum(m: &[(u32, u32)]) -> MultiPoly {
    fn go(rest: &mut Vec<(u32, u32)>, prefix: &mut Monomial, out: &mut MultiPoly) {
        if rest.is_empty() {
            out.add_term(prefix.clone(), BigRational::one());
            return;
        }
        let mut tried: Vec<(u32, u32)> = Vec::new();
        for i in 0..rest.len() {
            let p = rest[i];
            if tried.contains(&p) {
                continue;
            }
            tried.push(p);
            rest.remove(i);
            prefix.push(p);
            go(rest, prefix, out);
            prefix.pop();
            rest.insert(i, p);
        }
    }
    let mut out = MultiPoly::zero(m.len());
    go(&mut m.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Column index of every orbit of one degree.
#[derive(Clone, Debug)]
pub struct OrbitBasis {
    pub kind: GroupKind,
    pub degree: usize,
    pub reps: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl OrbitBasis {
    pub fn new(kind: GroupKind, n: usize, degree: usize) -> Self {
        let reps = orbit_representatives(kind, n, degree);
        let index = reps.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        OrbitBasis {
            kind,
            degree,
            reps,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// Coordinates of a homogeneous invariant of this degree, scaled to a
    /// primitive integer row. Fails if `p` is not invariant or has terms of
    /// another degree.
    pub fn coordinates(&self, p: &MultiPoly) -> Result<SparseRow> {
        let mut coords: Vec<(usize, BigRational)> = Vec::new();
        let mut seen: HashMap<usize, usize> = HashMap::new();
        for (m, c) in p.terms() {
            let canon = canonical(m);
            let Some(&col) = self.index.get(&canon) else {
                return Err(Error::Consistency(format!(
                    "monomial {m:?} is outside the degree-{} invariant coordinates",
                    self.degree
                )));
            };
            *seen.entry(col).or_default() += 1;
            if *m == canon {
                coords.push((col, c.clone()));
            } else if p.coeff(&canon) != *c {
                return Err(Error::Consistency(format!(
                    "polynomial is not invariant: {m:?} and {canon:?} differ"
                )));
            }
        }
        for (&col, &count) in &seen {
            if BigInt::from(count) != orbit_size(&self.reps[col]) {
                return Err(Error::Consistency(format!(
                    "polynomial is not invariant: orbit of {:?} is incomplete",
                    self.reps[col]
                )));
            }
        }
        coords.sort_by_key(|(i, _)| *i);
        let lcm = coords
            .iter()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let row = coords
            .into_iter()
            .map(|(i, c)| (i, (c * BigRational::from_integer(lcm.clone())).to_integer()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Ok(SparseRow::new(row))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multisym::poly::{average, power_sum};

    #[test]
    fn dims() {
        assert_eq!(invariant_graded_dim(GroupKind::Symmetric, 2, 1), 2);
        assert_eq!(invariant_graded_dim(GroupKind::Symmetric, 2, 0), 1);
        for n in 1..=3 {
            assert_eq!(invariant_graded_dim(GroupKind::Signed, n, 1), 0);
        }
        for d in 0..8 {
            assert_eq!(invariant_graded_dim(GroupKind::Symmetric, 1, d), d + 1);
        }
    }

    #[test]
    fn dims_by_brute_force() {
        // count Σ_n-orbits of all monomials of degree d directly
        for n in 1..=3usize {
            for d in 0..=5usize {
                let vars = 2 * n;
                let mut orbits = std::collections::HashSet::new();
                let mut odd_free = std::collections::HashSet::new();
                let mut exps = vec![0u32; vars];
                fn rec(
                    i: usize,
                    left: u32,
                    exps: &mut Vec<u32>,
                    n: usize,
                    orbits: &mut std::collections::HashSet<Monomial>,
                    even: &mut std::collections::HashSet<Monomial>,
                ) {
                    if i == exps.len() - 1 {
                        exps[i] = left;
                        let m: Monomial = (0..n).map(|k| (exps[k], exps[n + k])).collect();
                        let c = canonical(&m);
                        if c.iter().all(|&(a, b)| (a + b) % 2 == 0) {
                            even.insert(c.clone());
                        }
                        orbits.insert(c);
                        return;
                    }
                    for e in 0..=left {
                        exps[i] = e;
                        rec(i + 1, left - e, exps, n, orbits, even);
                    }
                }
                rec(0, d as u32, &mut exps, n, &mut orbits, &mut odd_free);
                assert_eq!(invariant_graded_dim(GroupKind::Symmetric, n, d), orbits.len());
                assert_eq!(invariant_graded_dim(GroupKind::Signed, n, d), odd_free.len());
            }
        }
    }

    #[test]
    fn orbit_sums() {
        let s = orbit_sum(&[(1, 0), (0, 0), (0, 0)]);
        assert_eq!(s, power_sum(3, 1, 0).unwrap());
        assert_eq!(BigInt::from(s.len()), orbit_size(&[(1, 0), (0, 0), (0, 0)]));
        assert_eq!(orbit_sum(&[(1, 0), (0, 1), (0, 0)]).len(), 6);
    }

    #[test]
    fn coordinates_of_averages() {
        let basis = OrbitBasis::new(GroupKind::Symmetric, 3, 2);
        let p = MultiPoly::monomial(3, vec![(1, 0), (0, 1), (0, 0)]);
        let avg = average(GroupKind::Symmetric, &p).unwrap();
        let row = basis.coordinates(&avg).unwrap();
        assert_eq!(row.len(), 1);
        // a non-invariant polynomial is rejected
        assert!(basis.coordinates(&p).is_err());
    }
}
