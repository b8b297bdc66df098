//! The poset of maximal tori of `U(n)` and its chain classes.
//!
//! Components of the torus space are indexed by partitions `λ ⊢ n`, each a
//! partial flag manifold `Fl(λ)` modulo the block permutations `Σ_λ`.
//! Chains of tori correspond to chains of set partitions of `{1, …, n}`
//! under refinement; conjugacy classes of chains are `Σ_n`-orbits.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::qseries::QPoly;
use crate::repa::{partitions, Partition};

/// Largest `n` accepted by [`chain_classes`].
pub const CHAIN_RANK_CAP: usize = 8;

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToriComponent {
    pub lambda: Partition,
    /// Poincaré polynomial of `Fl(λ)` in `q = t^2`.
    pub flag_poincare: QPoly,
    pub real_dimension: usize,
    /// `|Σ_λ| = ∏ m_j!` over multiplicities of equal parts.
    pub stabilizer_order: BigInt,
}

/// One component per partition of `n`, in the order of [`partitions`].
pub fn components(n: usize) -> Result<Vec<ToriComponent>> {
    if n == 0 {
        return Err(Error::invalid("rank must be at least 1"));
    }
    partitions(n)
        .into_iter()
        .map(|lambda| {
            let mut denom = QPoly::one();
            for &p in lambda.parts() {
                denom = &denom * &QPoly::q_factorial(p);
            }
            let flag_poincare = QPoly::q_factorial(n).div_exact(&denom)?;
            let squares: usize = lambda.parts().iter().map(|p| p * p).sum();
            let stabilizer_order = lambda
                .multiplicities()
                .values()
                .map(|&m| factorial(m))
                .product();
            Ok(ToriComponent {
                real_dimension: n * n - squares,
                flag_poincare,
                stabilizer_order,
                lambda,
            })
        })
        .collect()
}

/// A set partition of `{1, …, n}`: blocks sorted internally and by minimum.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::invalid("set partition blocks must be nonempty"));
            }
            b.sort_unstable();
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &v)| v != i + 1) {
            return Err(Error::invalid("blocks must partition {1, …, n}"));
        }
        Ok(SetPartition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// `true` when every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &SetPartition) -> bool {
        let owner = coarser.owner();
        self.blocks
            .iter()
            .all(|b| b.iter().all(|&v| owner[v - 1] == owner[b[0] - 1]))
    }

    /// Image under the permutation with one-line word `w` (1-based values).
    pub fn permuted(&self, w: &[u32]) -> SetPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&v| w[v - 1] as usize).collect())
            .collect();
        SetPartition::new(blocks).expect("a permutation maps partitions to partitions")
    }

    /// Block index of each element.
    fn owner(&self) -> Vec<usize> {
        let mut owner = vec![0; self.ground_size()];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                owner[v - 1] = i;
            }
        }
        owner
    }

    /// Every set partition of `{1, …, n}` with `k` blocks.
    pub fn all_with_blocks(n: usize, k: usize) -> Vec<SetPartition> {
        fn go(i: usize, n: usize, k: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartition>) {
            if blocks.len() + (n - i) < k {
                return;
            }
            if i == n {
                if blocks.len() == k {
                    out.push(SetPartition {
                        blocks: blocks.clone(),
                    });
                }
                return;
            }
            for j in 0..blocks.len() {
                blocks[j].push(i + 1);
                go(i + 1, n, k, blocks, out);
                blocks[j].pop();
            }
            if blocks.len() < k {
                blocks.push(vec![i + 1]);
                go(i + 1, n, k, blocks, out);
                blocks.pop();
            }
        }
        let mut out = Vec::new();
        go(0, n, k, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).collect::<String>())
            .collect();
        write!(f, "{{{}}}", parts.join("|"))
    }
}

/// Isomorphism type of the leveled tree of a chain, below one block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Shape {
    Leaf(usize),
    Node(Vec<Shape>),
}

impl Shape {
    /// Number of tree automorphisms, counting permutations of elements
    /// inside the finest blocks.
    fn automorphisms(&self) -> BigInt {
        match self {
            Shape::Leaf(size) => factorial(*size),
            Shape::Node(children) => {
                let mut total: BigInt = children.iter().map(Shape::automorphisms).product();
                let mut runs: BTreeMap<&Shape, usize> = BTreeMap::new();
                for c in children {
                    *runs.entry(c).or_default() += 1;
                }
                for m in runs.values() {
                    total *= factorial(*m);
                }
                total
            }
        }
    }
}

fn shape_of(chain: &[SetPartition], level: usize, block: &[usize]) -> Shape {
    if level + 1 == chain.len() {
        return Shape::Leaf(block.len());
    }
    let mut children: Vec<Shape> = chain[level + 1]
        .blocks()
        .iter()
        .filter(|b| block.contains(&b[0]))
        .map(|b| shape_of(chain, level + 1, b))
        .collect();
    children.sort();
    Shape::Node(children)
}

/// Complete invariant of the `Σ_n`-orbit of a chain.
fn chain_shape(chain: &[SetPartition]) -> Shape {
    let mut top: Vec<Shape> = chain[0].blocks().iter().map(|b| shape_of(chain, 0, b)).collect();
    top.sort();
    Shape::Node(top)
}

/// A conjugacy class of chains `π_0 ≤ π_1 ≤ … ≤ π_k`, each refining the last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainClass {
    pub representative: Vec<SetPartition>,
    pub block_counts: Vec<usize>,
    /// Order of the stabilizer in `Σ_n` of the representative.
    pub stabilizer_order: BigInt,
}

impl ChainClass {
    /// Number of chains in the class.
    pub fn orbit_size(&self) -> BigInt {
        let n = self.representative[0].ground_size();
        factorial(n) / &self.stabilizer_order
    }
}

impl fmt::Display for ChainClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.representative.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" ≤ "))
    }
}

fn check_ivals(n: usize, ivals: &[usize]) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("rank must be at least 1"));
    }
    if n > CHAIN_RANK_CAP {
        return Err(Error::Size {
            what: "chain class rank",
            requested: n,
            cap: CHAIN_RANK_CAP,
            hint: None,
        });
    }
    if ivals.is_empty() {
        return Err(Error::invalid("ivals must be nonempty"));
    }
    if ivals.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("ivals must be strictly increasing"));
    }
    if ivals[ivals.len() - 1] >= n {
        return Err(Error::invalid(format!("ivals must lie in 0..{n}")));
    }
    Ok(())
}

/// Conjugacy classes of chains whose block counts are `i_r + 1`.
///
/// Orbits are built one level at a time: each representative is extended by
/// every refinement with the next block count, and extensions are merged by
/// the isomorphism type of their leveled tree.
pub fn chain_classes(n: usize, ivals: &[usize]) -> Result<Vec<ChainClass>> {
    check_ivals(n, ivals)?;
    let counts: Vec<usize> = ivals.iter().map(|i| i + 1).collect();

    let mut reps: Vec<Vec<SetPartition>> = Vec::new();
    let mut seen = BTreeSet::new();
    for p in SetPartition::all_with_blocks(n, counts[0]) {
        let chain = vec![p];
        if seen.insert(chain_shape(&chain)) {
            reps.push(chain);
        }
    }
    for &k in &counts[1..] {
        let finer = SetPartition::all_with_blocks(n, k);
        let mut next = Vec::new();
        let mut seen = BTreeSet::new();
        for chain in &reps {
            let last = chain.last().expect("chains are nonempty");
            for p in finer.iter().filter(|p| p.refines(last)) {
                let mut ext = chain.clone();
                ext.push(p.clone());
                if seen.insert(chain_shape(&ext)) {
                    next.push(ext);
                }
            }
        }
        reps = next;
    }

    let mut classes: Vec<ChainClass> = reps
        .into_iter()
        .map(|representative| {
            let stabilizer_order = chain_shape(&representative).automorphisms();
            ChainClass {
                representative,
                block_counts: counts.clone(),
                stabilizer_order,
            }
        })
        .collect();
    classes.sort_by(|a, b| a.representative.cmp(&b.representative));
    Ok(classes)
}

/// Every chain with the given block counts, without identifying conjugates.
pub fn raw_chains(n: usize, ivals: &[usize]) -> Result<Vec<Vec<SetPartition>>> {
    check_ivals(n, ivals)?;
    let mut chains: Vec<Vec<SetPartition>> = SetPartition::all_with_blocks(n, ivals[0] + 1)
        .into_iter()
        .map(|p| vec![p])
        .collect();
    for &i in &ivals[1..] {
        let finer = SetPartition::all_with_blocks(n, i + 1);
        chains = chains
            .into_iter()
            .flat_map(|c| {
                let last = c.last().expect("chains are nonempty").clone();
                finer
                    .iter()
                    .filter(move |p| p.refines(&last))
                    .map(move |p| {
                        let mut ext = c.clone();
                        ext.push(p.clone());
                        ext
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    Ok(chains)
}
