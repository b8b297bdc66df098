use num_bigint::BigInt;

use super::check_caps;
use super::ideal::{exponent_vectors, Products};
use super::linalg::Echelon;
use super::orbits::{invariant_graded_dim, OrbitBasis};
use super::poly::{average, MultiPoly};
use crate::error::Result;
use crate::qseries::TruncatedSeries;
use crate::report::Check;
use crate::weylcomb::{self, GroupKind, Permutation, SignedPermutation, WeylElement};

/// `e_w = ∏_{i ∈ Des(w⁻¹)} (x_1⋯x_i) · ∏_{j ∈ Des(w)} (y_{w(1)}⋯y_{w(j)})`.
pub fn descent_monomial(w: &Permutation) -> MultiPoly {
    let n = w.rank();
    let mut m = vec![(0u32, 0u32); n];
    for i in w.inverse().descent_set() {
        for slot in &mut m[..i] {
            slot.0 += 1;
        }
    }
    for j in w.descent_set() {
        for k in 1..=j {
            m[w.apply(k) - 1].1 += 1;
        }
    }
    MultiPoly::monomial(n, m)
}

/// `c_w = ∏_i x_i^{f_i(w⁻¹)} · y_{|w(i)|}^{f_i(w)}`.
pub fn signed_descent_monomial(w: &SignedPermutation) -> MultiPoly {
    let n = w.rank();
    let mut m = vec![(0u32, 0u32); n];
    for (i, f) in w.inverse().f_vector().into_iter().enumerate() {
        m[i].0 = f as u32;
    }
    for (i, f) in w.f_vector().into_iter().enumerate() {
        m[w.word()[i].unsigned_abs() as usize - 1].1 = f as u32;
    }
    MultiPoly::monomial(n, m)
}

pub fn weyl_descent_monomial(w: &WeylElement) -> MultiPoly {
    match w {
        WeylElement::Sym(w) => descent_monomial(w),
        WeylElement::Signed(w) => signed_descent_monomial(w),
    }
}

/// Power sums generating `ℚ[x]^W` (the `y` generators are the mirrors).
pub(crate) fn single_block_generators(kind: GroupKind, n: usize) -> Vec<u32> {
    let n = n as u32;
    match kind {
        GroupKind::Symmetric => (1..=n).collect(),
        GroupKind::Signed => (1..=n).map(|a| 2 * a).collect(),
    }
}

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub element: WeylElement,
    pub monomial: MultiPoly,
    /// `ρ` of the descent monomial.
    pub averaged: MultiPoly,
    /// Polynomial degree.
    pub degree: usize,
}

#[derive(Clone, Debug)]
pub struct FreeBasisReport {
    pub kind: GroupKind,
    pub n: usize,
    pub max_degree: usize,
    pub elements: Vec<BasisElement>,
    pub checks: Vec<Check>,
}

impl FreeBasisReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// Basis degrees, sorted, in polynomial degree.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.elements.iter().map(|e| e.degree).collect();
        d.sort_unstable();
        d
    }
}

/// Averaged descent monomials for every Weyl group element.
pub fn averaged_descent_basis(kind: GroupKind, n: usize) -> Result<Vec<BasisElement>> {
    weylcomb::enumerate(kind, n)?
        .map(|w| {
            let monomial = weyl_descent_monomial(&w);
            let degree = monomial.homogeneous_degree().unwrap_or(0);
            let averaged = average(kind, &monomial)?;
            Ok(BasisElement {
                element: w,
                monomial,
                averaged,
                degree,
            })
        })
        .collect()
}

/// Checks that the averaged descent monomials form a free basis of the
/// invariant ring over `ℚ[x]^W ⊗ ℚ[y]^W`, degree by degree through `max_degree`.
pub fn verify_free_basis(kind: GroupKind, n: usize, max_degree: usize) -> Result<FreeBasisReport> {
    check_caps(n, max_degree)?;
    let elements = averaged_descent_basis(kind, n)?;
    let mut checks = Vec::new();

    let zeros: Vec<String> = elements
        .iter()
        .filter(|e| e.averaged.is_zero())
        .map(|e| format!("{:?}", e.element))
        .collect();
    checks.push(if zeros.is_empty() {
        Check::pass(
            "averaged descent monomials nonzero",
            format!("all {} averages are nonzero", elements.len()),
        )
    } else {
        Check::fail(
            "averaged descent monomials nonzero",
            format!("{} averages vanish", zeros.len()),
            format!("ρ vanishes for {}", zeros[0]),
        )
    });

    let singles = single_block_generators(kind, n);
    let mut pairs: Vec<(u32, u32)> = singles.iter().map(|&a| (a, 0)).collect();
    pairs.extend(singles.iter().map(|&a| (0, a)));
    let mut products = Products::new(n, &pairs)?;
    let degrees = products.degrees.clone();

    for d in 0..=max_degree {
        let basis = OrbitBasis::new(kind, n, d);
        let mut rows = Vec::new();
        for e in &elements {
            if e.degree > d {
                continue;
            }
            for exps in exponent_vectors(&degrees, d - e.degree) {
                rows.push(&e.averaged * &products.get(&exps));
            }
        }
        let name = format!("free basis degree {d}");
        if rows.len() != basis.dim() {
            checks.push(Check::fail(
                name,
                format!("{} products for dimension {}", rows.len(), basis.dim()),
                format!(
                    "degree {d}: {} products but the invariants have dimension {}",
                    rows.len(),
                    basis.dim()
                ),
            ));
            continue;
        }
        let mut echelon = Echelon::new(basis.dim());
        for r in &rows {
            echelon.insert(basis.coordinates(r)?);
        }
        checks.push(Check::from_bool(
            name,
            echelon.is_full(),
            format!("{} products have rank {} of {}", rows.len(), echelon.rank(), basis.dim()),
        ));
    }

    // Σ_w s^{deg} / ∏(1 - s^{deg p})  against the orbit count
    let mut lhs = TruncatedSeries::zero(max_degree);
    for e in &elements {
        if e.degree <= max_degree {
            *lhs.coeff_mut(e.degree) += BigInt::from(1);
        }
    }
    for &deg in &degrees {
        lhs.divide_by_one_minus(deg);
    }
    let rhs = TruncatedSeries::from_coeffs(
        (0..=max_degree)
            .map(|d| BigInt::from(invariant_graded_dim(kind, n, d)))
            .collect(),
    )?;
    checks.push(Check::compare_series(
        "free basis Hilbert series",
        "basis series",
        &lhs,
        "invariant series",
        &rhs,
    ));

    Ok(FreeBasisReport {
        kind,
        n,
        max_degree,
        elements,
        checks,
    })
}
