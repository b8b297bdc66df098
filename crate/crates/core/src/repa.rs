//! Integer partitions, standard Young tableaux and the fake-degree
//! polynomials of the symmetric group.
//!
//! Fake degrees use `q` for the polynomial grading of the coinvariant
//! algebra, so `q = t^2` in cohomological degree.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qseries::QPoly;
use crate::report::Check;
use crate::weylcomb::{self, SYM_RANK_CAP};

/// A partition stored as a nonincreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Accepts parts in any order; zeros are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn weighted_size(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for (j, &col) in conj.parts.iter().enumerate().take(row) {
                hooks.push((row - j - 1) + (col - i - 1) + 1);
            }
        }
        hooks
    }

    /// Multiplicity of each distinct part size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of standard Young tableaux of shape `λ`, by peeling corners.
pub fn count_syt(lambda: &Partition) -> u64 {
    fn go(parts: &mut Vec<usize>) -> u64 {
        if parts.iter().all(|&p| p == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let is_corner = parts[i] > 0 && (i + 1 == parts.len() || parts[i + 1] < parts[i]);
            if is_corner {
                parts[i] -= 1;
                total += go(parts);
                parts[i] += 1;
            }
        }
        total
    }
    go(&mut lambda.parts.clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FakeDegree {
    pub lambda: Partition,
    pub poly: QPoly,
}

/// `f^λ(q) = q^{n(λ)} [n]_q! / ∏_cells [h(c)]_q`.
pub fn fake_degree(lambda: &Partition) -> Result<FakeDegree> {
    let mut poly = QPoly::q_factorial(lambda.size());
    for h in lambda.hook_lengths() {
        poly = poly.div_exact(&QPoly::q_integer(h))?;
    }
    let poly = &poly * &QPoly::monomial(lambda.weighted_size(), 1);
    Ok(FakeDegree {
        lambda: lambda.clone(),
        poly,
    })
}

/// `Σ_{w ∈ Σ_n} q^{maj(w) + maj(w⁻¹)}`.
pub fn bimahonian(n: usize) -> Result<QPoly> {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for w in weylcomb::permutations(n)? {
        *counts.entry(w.maj() + w.inverse().maj()).or_insert(0) += 1;
    }
    let mut p = QPoly::zero();
    for (e, c) in counts {
        p.add_term(e, BigInt::from(c));
    }
    Ok(p)
}

/// Checks `Σ_λ f^λ(1) f^λ(q) = [n]_q!` and `Σ_λ f^λ(q)² = Σ_w q^{maj(w)+maj(w⁻¹)}`.
pub fn verify_fake_degree_identities(n: usize) -> Result<Vec<Check>> {
    if n > SYM_RANK_CAP {
        return Err(Error::Size {
            what: "fake-degree identities",
            requested: n,
            cap: SYM_RANK_CAP,
            hint: None,
        });
    }
    let fakes = partitions(n)
        .iter()
        .map(fake_degree)
        .collect::<Result<Vec<_>>>()?;

    let mut regular = QPoly::zero();
    let mut square = QPoly::zero();
    for f in &fakes {
        regular = &regular + &(&f.poly * &QPoly::monomial(0, f.poly.eval_at_one()));
        square = &square + &(&f.poly * &f.poly);
    }
    let flag = QPoly::q_factorial(n);
    let maj_sum = if n == 0 { QPoly::one() } else { bimahonian(n)? };

    Ok(vec![
        Check::compare_poly(
            format!("fakedeg/regular n={n}"),
            "Σ f^λ(1) f^λ(q)",
            &regular,
            "[n]_q!",
            &flag,
        ),
        Check::compare_poly(
            format!("fakedeg/square n={n}"),
            "Σ f^λ(q)²",
            &square,
            "Σ_w q^(maj w + maj w⁻¹)",
            &maj_sum,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(0), vec![Partition { parts: vec![] }]);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(5).len(), 7);
        let p: Vec<_> = partitions(3).into_iter().map(|p| p.parts).collect();
        assert_eq!(p, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn partition_normalizes_order() {
        assert_eq!(part(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
    }

    #[test]
    fn hooks() {
        let mut h = part(&[2, 1]).hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 1, 3]);
    }

    #[test]
    fn fake_degree_examples() {
        assert_eq!(fake_degree(&part(&[4])).unwrap().poly, QPoly::one());
        assert_eq!(fake_degree(&part(&[1, 1])).unwrap().poly, QPoly::monomial(1, 1));
        assert_eq!(
            fake_degree(&part(&[2, 1])).unwrap().poly,
            QPoly::from_coeffs([0, 1, 1])
        );
        assert_eq!(
            fake_degree(&part(&[1, 1, 1])).unwrap().poly,
            QPoly::monomial(3, 1)
        );
    }

    #[test]
    fn fake_degree_at_one_counts_tableaux() {
        for n in 1..=6 {
            let mut total = 0u64;
            for lambda in partitions(n) {
                let f = fake_degree(&lambda).unwrap();
                let syt = count_syt(&lambda);
                assert_eq!(f.poly.eval_at_one(), BigInt::from(syt), "{lambda}");
                assert!(f.poly.has_nonnegative_coeffs());
                total += syt * syt;
            }
            assert_eq!(total, (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn identities_small() {
        for n in 0..=4 {
            for c in verify_fake_degree_identities(n).unwrap() {
                assert!(c.passed, "{c}");
            }
        }
        assert_eq!(bimahonian(3).unwrap(), QPoly::from_coeffs([1, 0, 1, 2, 1, 0, 1]));
    }
}
