//! Poincaré series of `E_com G`, `B_com G` and `BG` for the classical
//! families, plus the stable generator catalogs and the identities tying
//! them together.
//!
//! All series here are in the cohomological variable `t`; the generators
//! `x_i, y_i` of the torus cohomology sit in degree 2.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::coinvariants;
use crate::error::{Error, Result};
use crate::qseries::{product_series, QPoly, RationalSeries, TruncatedSeries};
use crate::report::Check;
use crate::weylcomb::{self, GroupKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    U,
    SU,
    Sp,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::U, Family::SU, Family::Sp];

    pub fn weyl_kind(self) -> GroupKind {
        match self {
            Family::U | Family::SU => GroupKind::Symmetric,
            Family::Sp => GroupKind::Signed,
        }
    }

    pub fn slug(self) -> &'static str {
        match self {
            Family::U => "u",
            Family::SU => "su",
            Family::Sp => "sp",
        }
    }

    /// Whether `(a, b)` indexes a polynomial generator `z_{a,b}` of the
    /// stable `B_com` cohomology of this family.
    pub fn catalog_contains(self, a: usize, b: usize) -> bool {
        match self {
            Family::U => b > 0,
            Family::SU => b > 0 && (a, b) != (0, 1),
            Family::Sp => b > 0 && (a + b).is_multiple_of(2),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::U => "U",
            Family::SU => "SU",
            Family::Sp => "Sp",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "u" => Ok(Family::U),
            "su" => Ok(Family::SU),
            "sp" => Ok(Family::Sp),
            _ => Err(Error::invalid(format!(
                "unknown group family {s:?} (expected u, su or sp)"
            ))),
        }
    }
}

/// One of `U(n)`, `SU(n)`, `Sp(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub family: Family,
    pub n: usize,
}

impl GroupSpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("group rank must be at least 1"));
        }
        Ok(GroupSpec { family, n })
    }

    pub fn u(n: usize) -> Self {
        GroupSpec::new(Family::U, n).expect("rank >= 1")
    }

    pub fn su(n: usize) -> Self {
        GroupSpec::new(Family::SU, n).expect("rank >= 1")
    }

    pub fn sp(n: usize) -> Self {
        GroupSpec::new(Family::Sp, n).expect("rank >= 1")
    }

    pub fn weyl_kind(&self) -> GroupKind {
        self.family.weyl_kind()
    }

    pub fn weyl_order(&self) -> BigInt {
        let fact: BigInt = (1..=self.n).map(BigInt::from).product();
        match self.family {
            Family::U | Family::SU => fact,
            Family::Sp => fact << self.n,
        }
    }

    /// Polynomial degrees of the basic invariants of the Weyl group acting
    /// on `H^*(BT)` (cohomological degree is twice these).
    pub fn invariant_degrees(&self) -> Vec<usize> {
        match self.family {
            Family::U => (1..=self.n).collect(),
            Family::SU => (2..=self.n).collect(),
            Family::Sp => (1..=self.n).map(|i| 2 * i).collect(),
        }
    }

    /// Factors `(e, 1)` of `∏ (1 - t^e)` in the denominator of `P_BG`.
    pub fn bg_denominator(&self) -> Vec<(usize, usize)> {
        self.invariant_degrees()
            .into_iter()
            .map(|d| (2 * d, 1))
            .collect()
    }

    pub fn top_ecom_degree(&self) -> usize {
        let n = self.n;
        match self.family {
            Family::U | Family::SU => 2 * n * (n - 1),
            Family::Sp => 4 * n * n,
        }
    }

    pub fn within_enumeration_cap(&self) -> bool {
        self.n <= self.weyl_kind().rank_cap()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.n)
    }
}

/// How the `E_com` numerator is obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Route {
    /// Sum of `t^{2(maj(w)+maj(w⁻¹))}` (or `fmaj`) over the whole Weyl group.
    #[default]
    Enumeration,
    /// Class-weighted coinvariant characters; works past the enumeration caps.
    Oracle,
}

/// `Σ_w t^{2(maj(w)+maj(w⁻¹))}` over `Σ_n` for `U(n)`/`SU(n)`, and
/// `Σ_w t^{2(fmaj(w)+fmaj(w⁻¹))}` over `B_n` for `Sp(n)`.
pub fn ecom_numerator(g: &GroupSpec) -> Result<QPoly> {
    let top = g.top_ecom_degree() / 2;
    let mut counts = vec![0u64; top + 1];
    match g.weyl_kind() {
        GroupKind::Symmetric => {
            for w in weylcomb::permutations(g.n)? {
                counts[w.maj() + w.inverse().maj()] += 1;
            }
        }
        GroupKind::Signed => {
            for w in weylcomb::signed_permutations(g.n)? {
                counts[w.fmaj() + w.inverse().fmaj()] += 1;
            }
        }
    }
    Ok(QPoly::from_coeffs(counts).stretch(2))
}

pub fn ecom_numerator_via(g: &GroupSpec, route: Route) -> Result<QPoly> {
    match route {
        Route::Enumeration => ecom_numerator(g),
        Route::Oracle => {
            let top = g.top_ecom_degree();
            Ok(coinvariants::oracle_ecom(g, top)?.to_poly())
        }
    }
}

pub fn bcom_series(g: &GroupSpec) -> Result<RationalSeries> {
    bcom_series_via(g, Route::Enumeration)
}

pub fn bcom_series_via(g: &GroupSpec, route: Route) -> Result<RationalSeries> {
    RationalSeries::new(ecom_numerator_via(g, route)?, g.bg_denominator())
}

pub fn bg_series(g: &GroupSpec) -> RationalSeries {
    RationalSeries::new(QPoly::one(), g.bg_denominator()).expect("degrees are positive")
}

/// `B_com` series of a finite product of classical groups.
pub fn product_bcom(groups: &[GroupSpec], route: Route) -> Result<RationalSeries> {
    groups.iter().try_fold(RationalSeries::polynomial(QPoly::one()), |acc, g| {
        Ok(acc.product(&bcom_series_via(g, route)?))
    })
}

/// Index pairs `(a, b)` of the stable generators `z_{a,b}`, each of
/// cohomological degree `2(a+b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorCatalog {
    pub family: Family,
    pub pairs: Vec<(usize, usize)>,
}

impl GeneratorCatalog {
    pub fn degree(pair: (usize, usize)) -> usize {
        2 * (pair.0 + pair.1)
    }

    /// Generator count per cohomological degree.
    pub fn weights(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.pairs {
            *m.entry(Self::degree(p)).or_insert(0) += 1;
        }
        m
    }
}

/// Catalog entries of cohomological degree at most `max_total_degree`,
/// ordered by degree and then by `a`.
pub fn generator_catalog(family: Family, max_total_degree: usize) -> GeneratorCatalog {
    let mut pairs = Vec::new();
    for d in 1..=max_total_degree / 2 {
        for a in 0..=d {
            if family.catalog_contains(a, d - a) {
                pairs.push((a, d - a));
            }
        }
    }
    GeneratorCatalog { family, pairs }
}

/// Closed form of the number of stable generators in cohomological degree `deg`.
pub fn stable_weight(family: Family, deg: usize) -> usize {
    if deg == 0 || deg % 2 == 1 {
        return 0;
    }
    let d = deg / 2;
    match family {
        Family::U => d,
        Family::SU if d == 1 => 0,
        Family::SU => d,
        Family::Sp if d.is_multiple_of(2) => d,
        Family::Sp => 0,
    }
}

/// Series of the free polynomial algebra on the generator catalog.
pub fn stable_bcom(family: Family, trunc: usize) -> TruncatedSeries {
    product_series(&generator_catalog(family, trunc).weights(), trunc)
        .expect("catalog degrees are positive")
}

/// Checks `P_{B_com G} = P_{BG} · P_{E_com G}` through `trunc`.
pub fn verify_product_relation(g: &GroupSpec, trunc: usize, route: Route) -> Result<Check> {
    let numerator = ecom_numerator_via(g, route)?;
    let bcom = RationalSeries::new(numerator.clone(), g.bg_denominator())?.expand(trunc);
    let product = bg_series(g).expand(trunc).mul(&numerator.truncate(trunc))?;
    Ok(Check::compare_series(
        format!("product {g}"),
        "P_Bcom",
        &bcom,
        "P_BG·P_Ecom",
        &product,
    ))
}

/// Freeness rank, palindromicity, leading coefficient and top degree of the
/// `E_com` numerator.
pub fn verify_duality(g: &GroupSpec, route: Route) -> Result<Vec<Check>> {
    let p = ecom_numerator_via(g, route)?;
    let order = g.weyl_order();
    let at_one = p.eval_at_one();
    let top = p.degree().unwrap_or(0);
    Ok(vec![
        Check::from_bool(
            format!("rank {g}"),
            at_one == order,
            format!("P_Ecom(1) = {at_one}, |W| = {order}"),
        ),
        Check::from_bool(
            format!("palindromic {g}"),
            p.is_palindromic() && p.low_degree() == Some(0),
            format!("palindromic about t^{}", top / 2),
        ),
        Check::from_bool(
            format!("leading {g}"),
            p.leading_coeff().is_some_and(|c| c.is_one()),
            format!(
                "leading coefficient {}",
                p.leading_coeff().cloned().unwrap_or_default()
            ),
        ),
        Check::from_bool(
            format!("top degree {g}"),
            top == g.top_ecom_degree(),
            format!("top degree {top}, expected {}", g.top_ecom_degree()),
        ),
    ])
}

/// Compares `B_com` of each listed rank with the stable series through `trunc`.
pub fn verify_stabilization(
    family: Family,
    ranks: &[usize],
    trunc: usize,
    route: Route,
) -> Result<Vec<Check>> {
    let stable = stable_bcom(family, trunc);
    let mut checks = Vec::new();
    for &n in ranks {
        let g = GroupSpec::new(family, n)?;
        let series = bcom_series_via(&g, route)?.expand(trunc);
        checks.push(Check::compare_series(
            format!("stable {g}"),
            &format!("P_Bcom {g}"),
            &series,
            &format!("P_Bcom {family}"),
            &stable,
        ));
    }
    Ok(checks)
}

/// Largest `D` through which `B_com` of `g` agrees with the stable series,
/// searched up to `limit`.
pub fn agreement_degree(g: &GroupSpec, limit: usize, route: Route) -> Result<usize> {
    let series = bcom_series_via(g, route)?.expand(limit);
    let stable = stable_bcom(g.family, limit);
    Ok(match series.first_mismatch(&stable) {
        Some(d) => d - 1,
        None => limit,
    })
}
