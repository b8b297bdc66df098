//! Multisymmetric invariants `ℚ[x, y]^W` for `W = Σ_n` acting diagonally and
//! for the signed analogue `W = B_n`.
//!
//! All degrees here are polynomial degrees. A polynomial of degree `d`
//! contributes to cohomological degree `2d`.

mod basis;
mod ideal;
pub mod linalg;
mod orbits;
mod poly;

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qseries::TruncatedSeries;

pub use basis::{
    averaged_descent_basis, descent_monomial, signed_descent_monomial, verify_free_basis,
    weyl_descent_monomial, BasisElement, FreeBasisReport,
};
pub use ideal::{power_sum_generators, quotient_graded_dims, verify_power_sum_generation, IdealSpec};
pub use orbits::{canonical, invariant_graded_dim, orbit_representatives, orbit_size, orbit_sum, OrbitBasis};
pub use poly::{act, act_perm, act_signed, average, monomial_degree, power_sum, Monomial, MultiPoly};

/// Largest rank for the exact linear algebra.
pub const RANK_CAP: usize = 4;
/// Largest polynomial degree for the exact linear algebra.
pub const DEGREE_CAP: usize = 12;

pub(crate) fn check_caps(n: usize, max_degree: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("rank must be at least 1"));
    }
    if n > RANK_CAP {
        return Err(Error::Size {
            what: "multisymmetric rank",
            requested: n,
            cap: RANK_CAP,
            hint: Some("use the series routes for larger ranks"),
        });
    }
    if max_degree > DEGREE_CAP {
        return Err(Error::Size {
            what: "multisymmetric degree",
            requested: max_degree,
            cap: DEGREE_CAP,
            hint: None,
        });
    }
    Ok(())
}

/// Dimensions of graded pieces in polynomial degrees `0..=D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    dims: Vec<usize>,
}

impl GradedDims {
    pub fn new(dims: Vec<usize>) -> Self {
        GradedDims { dims }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn get(&self, d: usize) -> Option<usize> {
        self.dims.get(d).copied()
    }

    pub fn max_degree(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// The series `Σ_d dim_d · t^{2d}` through `t^{2D}`.
    pub fn to_series(&self) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(2 * self.max_degree());
        for (d, &k) in self.dims.iter().enumerate() {
            *s.coeff_mut(2 * d) = BigInt::from(k);
        }
        s
    }
}

impl fmt::Display for GradedDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::poincare::{self, GroupSpec};
    use crate::qseries::QPoly;
    use crate::weylcomb::{self, GroupKind, Permutation, SignedPermutation, WeylElement};
    use num_rational::BigRational;

    const SYM: GroupKind = GroupKind::Symmetric;
    const SIGNED: GroupKind = GroupKind::Signed;

    fn mono(xs: &[u32], ys: &[u32]) -> MultiPoly {
        MultiPoly::from_exponents(xs, ys).unwrap()
    }

    #[test]
    fn action_examples() {
        let p = mono(&[1, 0], &[0, 1]);
        assert_eq!(act_perm(&Permutation::identity(2), &p).unwrap(), p);
        let swap = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(act_perm(&swap, &p).unwrap(), mono(&[0, 1], &[1, 0]));

        let flip = SignedPermutation::new(vec![-1, 2]).unwrap();
        let q = mono(&[2, 0], &[1, 0]);
        assert_eq!(act_signed(&flip, &q).unwrap(), q.scale(&BigRational::from_integer((-1).into())));

        let p11 = power_sum(2, 1, 1).unwrap();
        assert_eq!(p11, &mono(&[1, 0], &[1, 0]) + &mono(&[0, 1], &[0, 1]));
        assert_eq!(act_signed(&flip, &p11).unwrap(), p11);

        assert!(act_perm(&Permutation::identity(3), &p).is_err());
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(2, 1, 0).unwrap(), &MultiPoly::x(2, 1) + &MultiPoly::x(2, 2));
        assert!(power_sum(2, 0, 0).is_err());
    }

    #[test]
    fn averages() {
        for n in 1..=4 {
            let avg = average(SYM, &MultiPoly::x(n, 1)).unwrap();
            let expected = power_sum(n, 1, 0)
                .unwrap()
                .scale(&BigRational::new(1.into(), (n as i64).into()));
            assert_eq!(avg, expected);
        }
        assert!(average(SIGNED, &mono(&[1, 0], &[0, 1])).unwrap().is_zero());

        let avg = average(SYM, &mono(&[1, 0, 0], &[0, 1, 0])).unwrap();
        let mut expected = MultiPoly::zero(3);
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    expected = &expected + &(&MultiPoly::x(3, i) * &MultiPoly::y(3, j));
                }
            }
        }
        assert_eq!(avg, expected.scale(&BigRational::new(1.into(), 6.into())));
    }

    /// Every monomial of degree `d` in `2n` variables.
    fn monomials(n: usize, d: u32) -> Vec<Monomial> {
        fn go(slots: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if slots == 1 {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
                return;
            }
            for e in 0..=left {
                cur.push(e);
                go(slots - 1, left - e, cur, out);
                cur.pop();
            }
        }
        let mut flat = Vec::new();
        go(2 * n, d, &mut Vec::new(), &mut flat);
        flat.into_iter()
            .map(|v| (0..n).map(|i| (v[i], v[n + i])).collect())
            .collect()
    }

    #[test]
    fn signed_vanishing_is_exactly_odd_pairs() {
        for d in 0..=6 {
            for m in monomials(2, d) {
                let odd = m.iter().any(|&(a, b)| (a + b) % 2 == 1);
                let avg = average(SIGNED, &MultiPoly::monomial(2, m.clone())).unwrap();
                assert_eq!(avg.is_zero(), odd, "{m:?}");
            }
        }
    }

    #[test]
    fn average_is_invariant_and_idempotent() {
        for kind in [SYM, SIGNED] {
            for m in monomials(3, 3) {
                let p = MultiPoly::monomial(3, m);
                let avg = average(kind, &p).unwrap();
                assert_eq!(average(kind, &avg).unwrap(), avg);
                for w in weylcomb::enumerate(kind, 3).unwrap() {
                    assert_eq!(act(&w, &avg).unwrap(), avg);
                }
            }
        }
    }

    #[test]
    fn invariant_dim_examples() {
        assert_eq!(invariant_graded_dim(SYM, 2, 1), 2);
        assert_eq!(invariant_graded_dim(SIGNED, 3, 1), 0);
        for d in 0..6 {
            assert_eq!(invariant_graded_dim(SYM, 1, d), d + 1);
        }
    }

    #[test]
    fn quotient_examples() {
        let ecom = IdealSpec::ecom(&GroupSpec::u(2));
        assert_eq!(ecom.generators, vec![(1, 0), (2, 0), (0, 1), (0, 2)]);
        let dims = quotient_graded_dims(SYM, 2, &ecom, 4).unwrap();
        assert_eq!(dims.dims(), &[1, 0, 1, 0, 0]);
        assert_eq!(dims.to_series().to_poly(), QPoly::from_coeffs([1, 0, 0, 0, 1]));

        let j2 = IdealSpec::bcom(&GroupSpec::u(2));
        let dims = quotient_graded_dims(SYM, 2, &j2, 2).unwrap();
        assert_eq!(dims.dims(), &[1, 1, 3]);
        let series = poincare::bcom_series(&GroupSpec::u(2)).unwrap().expand(4);
        assert_eq!(dims.to_series(), series);

        for (kind, n) in [(SYM, 2), (SYM, 3), (SIGNED, 2)] {
            let dims = quotient_graded_dims(kind, n, &IdealSpec::empty(), 5).unwrap();
            let orbits: Vec<usize> = (0..=5).map(|d| invariant_graded_dim(kind, n, d)).collect();
            assert_eq!(dims.dims(), orbits.as_slice());
        }
    }

    #[test]
    fn ecom_quotient_matches_numerator() {
        for g in [GroupSpec::u(2), GroupSpec::u(3), GroupSpec::sp(1), GroupSpec::sp(2)] {
            let top = g.top_ecom_degree() / 2;
            let dims = quotient_graded_dims(g.weyl_kind(), g.n, &IdealSpec::ecom(&g), top + 1).unwrap();
            let numerator = poincare::ecom_numerator(&g).unwrap();
            assert_eq!(dims.to_series(), numerator.truncate(2 * (top + 1)), "{g}");
            assert_eq!(BigInt::from(dims.total()), g.weyl_order(), "{g}");
        }
    }

    #[test]
    fn bcom_quotients_match_series() {
        for g in [GroupSpec::u(2), GroupSpec::su(2), GroupSpec::su(3), GroupSpec::sp(1), GroupSpec::sp(2)] {
            let dims = quotient_graded_dims(g.weyl_kind(), g.n, &IdealSpec::bcom(&g), 6).unwrap();
            let series = poincare::bcom_series(&g).unwrap().expand(12);
            assert_eq!(dims.to_series(), series, "{g}");
        }
    }

    #[test]
    fn signed_ideal_parity() {
        let bad = IdealSpec::new(vec![(1, 0)]).unwrap();
        assert!(quotient_graded_dims(SIGNED, 2, &bad, 2).is_err());
        assert!(IdealSpec::new(vec![(0, 0)]).is_err());
    }

    #[test]
    fn caps() {
        assert!(matches!(
            quotient_graded_dims(SYM, RANK_CAP + 1, &IdealSpec::empty(), 2),
            Err(Error::Size { .. })
        ));
        assert!(matches!(
            verify_free_basis(SYM, 2, DEGREE_CAP + 1),
            Err(Error::Size { .. })
        ));
    }

    #[test]
    fn generation() {
        assert_eq!(
            power_sum_generators(SYM, 2, 4),
            vec![(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        );
        assert_eq!(power_sum_generators(SIGNED, 2, 2), vec![(2, 0), (1, 1), (0, 2)]);
        for (kind, n, d) in [(SYM, 2, 4), (SIGNED, 2, 4), (SYM, 1, 6), (SYM, 3, 5), (SIGNED, 3, 4)] {
            let checks = verify_power_sum_generation(kind, n, d).unwrap();
            assert_eq!(checks.len(), d + 1);
            assert!(checks.iter().all(|c| c.passed), "{checks:?}");
        }
    }

    #[test]
    fn descent_degree_identity() {
        for w in weylcomb::permutations(3).unwrap() {
            let w = WeylElement::Sym(w);
            let e = weyl_descent_monomial(&w);
            assert_eq!(e.homogeneous_degree(), Some(w.maj() + w.inverse().maj()));
        }
    }

    proptest! {
        #[test]
        fn action_is_a_ring_map(
            a in prop::collection::vec((0u32..3, 0u32..3), 3),
            b in prop::collection::vec((0u32..3, 0u32..3), 3),
            idx in 0usize..48,
        ) {
            let p = &MultiPoly::monomial(3, a.clone()) + &MultiPoly::monomial(3, b.clone());
            let q = MultiPoly::monomial(3, b);
            let w = weylcomb::enumerate(SIGNED, 3).unwrap().nth(idx).unwrap();
            let lhs = act(&w, &(&p * &q)).unwrap();
            let rhs = &act(&w, &p).unwrap() * &act(&w, &q).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(act(&w, &p).unwrap().homogeneous_degree(), p.homogeneous_degree());
        }
    }
}
