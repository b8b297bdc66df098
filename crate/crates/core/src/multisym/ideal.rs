use std::collections::HashMap;

use super::linalg::Echelon;
use super::orbits::{orbit_representatives, orbit_sum, OrbitBasis};
use super::poly::{power_sum, MultiPoly};
use super::{check_caps, GradedDims};
use crate::error::{Error, Result};
use crate::poincare::{Family, GroupSpec};
use crate::report::Check;
use crate::weylcomb::GroupKind;

/// Generators `p_n(a, b)` of an ideal in the invariant ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSpec {
    pub generators: Vec<(u32, u32)>,
}

impl IdealSpec {
    pub fn new(generators: Vec<(u32, u32)>) -> Result<Self> {
        if let Some(&(a, b)) = generators.iter().find(|&&(a, b)| a + b == 0) {
            return Err(Error::invalid(format!(
                "ideal generator p({a},{b}) has degree 0"
            )));
        }
        Ok(IdealSpec { generators })
    }

    pub fn empty() -> Self {
        IdealSpec {
            generators: Vec::new(),
        }
    }

    /// Kills the positive-degree invariants in `x` alone and in `y` alone;
    /// the quotient is `(H^*(G/T) ⊗ H^*(G/T))^W`, i.e. `H^*(E_com G)`.
    /// `SU(n)` shares the ideal of `U(n)`.
    pub fn ecom(g: &GroupSpec) -> Self {
        let degrees = Self::x_invariant_degrees(g);
        let mut generators: Vec<(u32, u32)> = degrees.iter().map(|&d| (d, 0)).collect();
        generators.extend(degrees.iter().map(|&d| (0, d)));
        IdealSpec { generators }
    }

    /// `J_n` for `U(n)`, `K_n = J_n + (p(0,1))` for `SU(n)`, `L_n` for `Sp(n)`;
    /// the quotient is `H^*(B_com G)`.
    pub fn bcom(g: &GroupSpec) -> Self {
        let mut generators: Vec<(u32, u32)> = Self::x_invariant_degrees(g)
            .into_iter()
            .map(|d| (d, 0))
            .collect();
        if g.family == Family::SU {
            generators.push((0, 1));
        }
        IdealSpec { generators }
    }

    fn x_invariant_degrees(g: &GroupSpec) -> Vec<u32> {
        let n = g.n as u32;
        match g.family {
            Family::U | Family::SU => (1..=n).collect(),
            Family::Sp => (1..=n).map(|a| 2 * a).collect(),
        }
    }
}

/// Exponent vectors `e` with `Σ e_i·degrees[i] = target`.
pub(crate) fn exponent_vectors(degrees: &[usize], target: usize) -> Vec<Vec<u32>> {
    fn go(degrees: &[usize], i: usize, rest: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == degrees.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let d = degrees[i];
        let max = rest / d;
        for e in 0..=max {
            cur.push(e as u32);
            go(degrees, i + 1, rest - e * d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(degrees, 0, target, &mut Vec::new(), &mut out);
    out
}

/// Memoized products `∏ gens[i]^{e_i}`.
pub(crate) struct Products {
    n: usize,
    gens: Vec<MultiPoly>,
    pub(crate) degrees: Vec<usize>,
    cache: HashMap<Vec<u32>, MultiPoly>,
}

impl Products {
    pub(crate) fn new(n: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        let gens = pairs
            .iter()
            .map(|&(a, b)| power_sum(n, a, b))
            .collect::<Result<Vec<_>>>()?;
        let degrees = pairs.iter().map(|&(a, b)| (a + b) as usize).collect();
        Ok(Products {
            n,
            gens,
            degrees,
            cache: HashMap::new(),
        })
    }

    pub(crate) fn get(&mut self, exps: &[u32]) -> MultiPoly {
        if let Some(p) = self.cache.get(exps) {
            return p.clone();
        }
        let p = match exps.iter().position(|&e| e > 0) {
            None => MultiPoly::one(self.n),
            Some(i) => {
                let mut rest = exps.to_vec();
                rest[i] -= 1;
                let tail = self.get(&rest);
                &self.gens[i] * &tail
            }
        };
        self.cache.insert(exps.to_vec(), p.clone());
        p
    }
}

fn check_ideal_parity(kind: GroupKind, ideal: &IdealSpec) -> Result<()> {
    if kind == GroupKind::Signed {
        if let Some(&(a, b)) = ideal.generators.iter().find(|&&(a, b)| (a + b) % 2 == 1) {
            return Err(Error::invalid(format!(
                "p({a},{b}) is not invariant under signed permutations"
            )));
        }
    }
    Ok(())
}

/// Graded dimensions of `(invariants) / ideal` through polynomial degree `max_degree`.
pub fn quotient_graded_dims(
    kind: GroupKind,
    n: usize,
    ideal: &IdealSpec,
    max_degree: usize,
) -> Result<GradedDims> {
    check_caps(n, max_degree)?;
    check_ideal_parity(kind, ideal)?;
    let gens = ideal
        .generators
        .iter()
        .map(|&(a, b)| Ok(((a + b) as usize, power_sum(n, a, b)?)))
        .collect::<Result<Vec<_>>>()?;

    let mut dims = Vec::with_capacity(max_degree + 1);
    for d in 0..=max_degree {
        let basis = OrbitBasis::new(kind, n, d);
        let mut echelon = Echelon::new(basis.dim());
        'fill: for (deg, p) in &gens {
            if *deg > d {
                continue;
            }
            for rep in orbit_representatives(kind, n, d - deg) {
                if echelon.is_full() {
                    break 'fill;
                }
                let product = &orbit_sum(&rep) * p;
                echelon.insert(basis.coordinates(&product)?);
            }
        }
        dims.push(basis.dim() - echelon.rank());
    }
    Ok(GradedDims::new(dims))
}

/// Generators used for the generation check: `p(a,b)` with `0 < a+b ≤ n`
/// for `Σ_n`, and `p(a,b)` with `a+b` even and `0 < a+b ≤ max_degree` for `B_n`.
pub fn power_sum_generators(kind: GroupKind, n: usize, max_degree: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let top = match kind {
        GroupKind::Symmetric => n.min(max_degree),
        GroupKind::Signed => max_degree,
    } as u32;
    for k in 1..=top {
        if kind == GroupKind::Signed && k % 2 == 1 {
            continue;
        }
        for a in (0..=k).rev() {
            out.push((a, k - a));
        }
    }
    out
}

/// Checks degree by degree that products of the designated power sums span
/// the invariant ring.
pub fn verify_power_sum_generation(kind: GroupKind, n: usize, max_degree: usize) -> Result<Vec<Check>> {
    check_caps(n, max_degree)?;
    let pairs = power_sum_generators(kind, n, max_degree);
    let mut products = Products::new(n, &pairs)?;
    let mut checks = Vec::new();
    let label = match kind {
        GroupKind::Symmetric => "Σ",
        GroupKind::Signed => "B",
    };
    for d in 0..=max_degree {
        let basis = OrbitBasis::new(kind, n, d);
        let mut echelon = Echelon::new(basis.dim());
        let degrees = products.degrees.clone();
        for exps in exponent_vectors(&degrees, d) {
            if echelon.is_full() {
                break;
            }
            let p = products.get(&exps);
            echelon.insert(basis.coordinates(&p)?);
        }
        checks.push(Check::from_bool(
            format!("generation {label}_{n} degree {d}"),
            echelon.is_full(),
            format!(
                "power sums span rank {} of invariant dimension {}",
                echelon.rank(),
                basis.dim()
            ),
        ));
    }
    Ok(checks)
}

