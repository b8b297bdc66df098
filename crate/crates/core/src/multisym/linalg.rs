//! Exact rank computations over `ℚ` with integer rows.
//!
//! Rows are kept primitive (content 1, positive leading entry). Reducing a
//! row against a pivot uses the fraction-free update
//! `r ← lead(p)·r − lead(r)·p` followed by division by the content.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A sparse integer row, sorted by column, with no zero entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseRow {
    entries: Vec<(usize, BigInt)>,
}

impl SparseRow {
    /// Entries may arrive unsorted; zeros are dropped and duplicates summed.
    pub fn new(mut entries: Vec<(usize, BigInt)>) -> Self {
        entries.sort_by_key(|(i, _)| *i);
        let mut merged: Vec<(usize, BigInt)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            match merged.last_mut() {
                Some((j, acc)) if *j == i => *acc += c,
                _ => merged.push((i, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        SparseRow { entries: merged }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, BigInt)] {
        &self.entries
    }

    fn lead(&self) -> Option<(usize, &BigInt)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    /// `a·self − b·other`.
    fn combine(&self, a: &BigInt, other: &SparseRow, b: &BigInt) -> SparseRow {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.entries, &other.entries);
        while i < x.len() || j < y.len() {
            let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
            let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
            if take_x {
                out.push((x[i].0, a * &x[i].1));
                i += 1;
            } else if take_y {
                out.push((y[j].0, -(b * &y[j].1)));
                j += 1;
            } else {
                let v = a * &x[i].1 - b * &y[j].1;
                if !v.is_zero() {
                    out.push((x[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseRow { entries: out }
    }

    fn make_primitive(&mut self) {
        let Some(g) = self
            .entries
            .iter()
            .map(|(_, c)| c.abs())
            .reduce(|a, b| a.gcd(&b))
        else {
            return;
        };
        let flip = self.entries[0].1.is_negative();
        for (_, c) in &mut self.entries {
            *c = &*c / &g;
            if flip {
                *c = -&*c;
            }
        }
    }
}

/// Row-echelon basis of a growing subspace of `ℚ^dim`.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: HashMap<usize, SparseRow>,
    dim: usize,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            pivots: HashMap::new(),
            dim,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.dim
    }

    /// Reduces `row` against the current basis.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        row.make_primitive();
        while let Some((col, lead)) = row.lead() {
            let Some(pivot) = self.pivots.get(&col) else {
                break;
            };
            let (_, plead) = pivot.lead().expect("pivot rows are nonzero");
            let g = plead.gcd(lead);
            let a = plead / &g;
            let b = lead / &g;
            row = row.combine(&a, pivot, &b);
            row.make_primitive();
        }
        row
    }

    /// Adds `row`; returns `true` if it was independent of the basis.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        match row.lead() {
            None => false,
            Some((col, _)) => {
                self.pivots.insert(col, row);
                true
            }
        }
    }
}

/// Rank of a set of rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>, dim: usize) -> usize {
    let mut e = Echelon::new(dim);
    for r in rows {
        e.insert(r);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn row(v: &[i64]) -> SparseRow {
        SparseRow::new(
            v.iter()
                .enumerate()
                .map(|(i, &c)| (i, BigInt::from(c)))
                .collect(),
        )
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank([row(&[1, 2]), row(&[2, 4])], 2), 1);
        assert_eq!(rank([row(&[1, 2]), row(&[2, 3])], 2), 2);
        assert_eq!(rank([row(&[0, 0, 0])], 3), 0);
        assert_eq!(
            rank([row(&[1, 1, 0]), row(&[0, 1, 1]), row(&[1, 0, -1])], 3),
            2
        );
    }

    /// Rank by Gaussian elimination over exact rationals on a dense matrix.
    fn dense_rank(m: &[Vec<i64>]) -> usize {
        use num_rational::BigRational;
        let mut a: Vec<Vec<BigRational>> = m
            .iter()
            .map(|r| r.iter().map(|&c| BigRational::from_integer(c.into())).collect())
            .collect();
        let cols = a.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in 0..a.len() {
                if i != r && !a[i][c].is_zero() {
                    let f = &a[i][c] / &a[r][c];
                    for k in 0..cols {
                        let v = &a[r][k] * &f;
                        a[i][k] -= v;
                    }
                }
            }
            r += 1;
        }
        r
    }

    proptest! {
        #[test]
        fn matches_dense_elimination(m in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..8)) {
            let expected = dense_rank(&m);
            prop_assert_eq!(rank(m.iter().map(|r| row(r)), 5), expected);
        }
    }
}
