//! Graded characters of coinvariant algebras, averaged over conjugacy
//! classes of the Weyl group. This gives the `E_com` and `B_com` series by
//! a route that never touches descent statistics.
//!
//! Characters live in `s = t^2`. The graded trace of `w` on the coinvariant
//! algebra is `∏_i (1 - s^{d_i}) / det(1 - s·w)`, where for `Σ_n` and `B_n`
//!
//! ```text
//! det(1 - s·w) = ∏_{positive cycles c} (1 - s^|c|) · ∏_{negative cycles c} (1 + s^|c|)
//! ```
//!
//! For `SU(n)` the torus is the `(n-1)`-dimensional reflection
//! representation, whose determinant is the permutation one divided by
//! `(1 - s)`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poincare::{Family, GroupSpec};
use crate::qseries::{QPoly, TruncatedSeries};
use crate::repa::{partitions, Partition};
use crate::weylcomb::{CycleData, GroupKind};

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// `z = ∏_i i^{m_i} m_i!` for `Σ_n`, or `∏_i (2i)^{m_i} m_i!` for one sign
/// half of a `B_n` class.
fn centralizer_part(lambda: &Partition, base: usize) -> BigInt {
    lambda
        .multiplicities()
        .into_iter()
        .map(|(len, m)| BigInt::from(base * len).pow(m as u32) * factorial(m))
        .product()
}

/// Conjugacy classes of the Weyl group, with their sizes.
pub fn conjugacy_classes(g: &GroupSpec) -> Vec<(CycleData, BigInt)> {
    let n = g.n;
    let order = g.weyl_order();
    match g.weyl_kind() {
        GroupKind::Symmetric => partitions(n)
            .into_iter()
            .map(|lambda| {
                let size = &order / centralizer_part(&lambda, 1);
                let data = CycleData::new(lambda.parts().to_vec(), Vec::new()).expect("positive");
                (data, size)
            })
            .collect(),
        GroupKind::Signed => {
            let mut out = Vec::new();
            for k in (0..=n).rev() {
                for pos in partitions(k) {
                    for neg in partitions(n - k) {
                        let z = centralizer_part(&pos, 2) * centralizer_part(&neg, 2);
                        let data = CycleData::new(pos.parts().to_vec(), neg.parts().to_vec())
                            .expect("positive");
                        out.push((data, &order / z));
                    }
                }
            }
            out
        }
    }
}

fn check_class(g: &GroupSpec, c: &CycleData) -> Result<()> {
    if c.size() != g.n {
        return Err(Error::invalid(format!(
            "cycle data of size {} does not fit {g}",
            c.size()
        )));
    }
    if g.weyl_kind() == GroupKind::Symmetric && !c.negative_cycles.is_empty() {
        return Err(Error::invalid(format!("{g} has no negative cycles")));
    }
    Ok(())
}

/// Multiplies `s` in place by `1 / det(1 - s·w)` on `H^*(BT)`.
fn divide_by_torus_det(g: &GroupSpec, c: &CycleData, s: &mut TruncatedSeries) {
    for &len in &c.positive_cycles {
        s.divide_by_one_minus(len);
    }
    for &len in &c.negative_cycles {
        s.divide_by_one_plus(len);
    }
    if g.family == Family::SU {
        s.multiply_by_one_minus(1);
    }
}

/// Graded character of an element with cycle data `c` on the coinvariant
/// algebra, in `s = t^2`, through `s^trunc`.
pub fn coinvariant_char(g: &GroupSpec, c: &CycleData, trunc: usize) -> Result<TruncatedSeries> {
    check_class(g, c)?;
    let mut s = TruncatedSeries::one(trunc);
    for d in g.invariant_degrees() {
        s.multiply_by_one_minus(d);
    }
    divide_by_torus_det(g, c, &mut s);
    Ok(s)
}

/// The character of the identity as a polynomial in `s`: `∏_i [d_i]_s`.
pub fn identity_char_poly(g: &GroupSpec) -> Result<QPoly> {
    let mut num = QPoly::one();
    for d in g.invariant_degrees() {
        num = &num * &(&QPoly::one() - &QPoly::monomial(d, 1));
    }
    let dim = match g.family {
        Family::SU => g.n - 1,
        _ => g.n,
    };
    let linear = &QPoly::one() - &QPoly::monomial(1, 1);
    for _ in 0..dim {
        num = num.div_exact(&linear)?;
    }
    Ok(num)
}

fn average(g: &GroupSpec, total: TruncatedSeries, trunc_t: usize) -> Result<TruncatedSeries> {
    let averaged = total.div_exact_scalar(&g.weyl_order()).map_err(|e| {
        Error::Consistency(format!("class average for {g} is not integral: {e}"))
    })?;
    Ok(averaged.stretch(2, trunc_t))
}

/// `Σ_classes |C|·χ_C²  / |W|`, the Hilbert series of
/// `(H^*(G/T) ⊗ H^*(G/T))^W`, through `t^trunc`.
pub fn oracle_ecom(g: &GroupSpec, trunc: usize) -> Result<TruncatedSeries> {
    let s_trunc = trunc / 2;
    let mut total = TruncatedSeries::zero(s_trunc);
    for (class, size) in conjugacy_classes(g) {
        let chi = coinvariant_char(g, &class, s_trunc)?;
        total = total.add(&chi.mul(&chi)?.scale(&size))?;
    }
    average(g, total, trunc)
}

/// `Σ_classes |C|·χ_C / det(1 - s·w) / |W|`, the Hilbert series of
/// `(H^*(G/T) ⊗ H^*(BT))^W`, through `t^trunc`.
pub fn oracle_bcom(g: &GroupSpec, trunc: usize) -> Result<TruncatedSeries> {
    let s_trunc = trunc / 2;
    let mut total = TruncatedSeries::zero(s_trunc);
    for (class, size) in conjugacy_classes(g) {
        let mut term = coinvariant_char(g, &class, s_trunc)?;
        divide_by_torus_det(g, &class, &mut term);
        total = total.add(&term.scale(&size))?;
    }
    average(g, total, trunc)
}

/// Sum of class sizes; equals `|W|` when the class list is complete.
pub fn class_size_total(g: &GroupSpec) -> BigInt {
    conjugacy_classes(g).into_iter().map(|(_, s)| s).sum()
}

/// `true` when `s(0) = 1`, as every coinvariant character must satisfy.
pub fn is_normalized(s: &TruncatedSeries) -> bool {
    s.coeff(0).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylcomb;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_i64_vec().unwrap()
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=8 {
            for g in [GroupSpec::u(n), GroupSpec::sp(n)] {
                assert_eq!(class_size_total(&g), g.weyl_order(), "{g}");
            }
        }
        assert_eq!(conjugacy_classes(&GroupSpec::sp(2)).len(), 5);
    }

    #[test]
    fn class_sizes_match_enumeration() {
        use std::collections::HashMap;
        for n in 1..=4 {
            let g = GroupSpec::sp(n);
            let mut counts: HashMap<CycleData, u64> = HashMap::new();
            for w in weylcomb::signed_permutations(n).unwrap() {
                *counts.entry(w.cycle_data()).or_default() += 1;
            }
            for (class, size) in conjugacy_classes(&g) {
                assert_eq!(BigInt::from(counts[&class]), size, "{class:?}");
            }
        }
    }

    #[test]
    fn character_examples() {
        let u2 = GroupSpec::u(2);
        let transposition = CycleData::new(vec![2], vec![]).unwrap();
        assert_eq!(ints(&coinvariant_char(&u2, &transposition, 4).unwrap()), vec![1, -1, 0, 0, 0]);

        let sp1 = GroupSpec::sp(1);
        let flip = CycleData::new(vec![], vec![1]).unwrap();
        assert_eq!(ints(&coinvariant_char(&sp1, &flip, 3).unwrap()), vec![1, -1, 0, 0]);

        for n in 1..=5 {
            let g = GroupSpec::u(n);
            let id = CycleData::new(vec![1; n], vec![]).unwrap();
            let chi = coinvariant_char(&g, &id, 20).unwrap();
            assert!(is_normalized(&chi));
            assert_eq!(chi, QPoly::q_factorial(n).truncate(20));
        }
    }

    #[test]
    fn inconsistent_class_rejected() {
        let bad = CycleData::new(vec![2], vec![]).unwrap();
        assert!(coinvariant_char(&GroupSpec::u(3), &bad, 4).is_err());
        let neg = CycleData::new(vec![], vec![1]).unwrap();
        assert!(coinvariant_char(&GroupSpec::u(1), &neg, 4).is_err());
    }

    #[test]
    fn identity_character_is_regular() {
        for n in 1..=6 {
            for g in [GroupSpec::u(n), GroupSpec::su(n), GroupSpec::sp(n)] {
                let p = identity_char_poly(&g).unwrap();
                assert_eq!(p.eval_at_one(), g.weyl_order(), "{g}");
            }
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            ints(&oracle_ecom(&GroupSpec::u(2), 12).unwrap()),
            vec![1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0]
        );
        assert_eq!(
            ints(&oracle_ecom(&GroupSpec::u(3), 12).unwrap()),
            vec![1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 0, 0, 1]
        );
        assert_eq!(
            ints(&oracle_bcom(&GroupSpec::su(2), 8).unwrap()),
            vec![1, 0, 0, 0, 2, 0, 0, 0, 2]
        );
    }
}
