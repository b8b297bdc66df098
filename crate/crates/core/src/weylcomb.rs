//! Symmetric group `Σ_n` and hyperoctahedral group `B_n`.
//!
//! Elements are stored in one-line notation. For signed permutations only
//! the images of the positive letters are kept; `σ(-k) = -σ(k)` is implied.

use std::fmt;

use crate::error::{Error, Result};

/// Largest `n` for which `Σ_n` may be enumerated exhaustively.
pub const SYM_RANK_CAP: usize = 9;
/// Largest `n` for which `B_n` may be enumerated exhaustively.
pub const SIGNED_RANK_CAP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    /// `Σ_n`, the Weyl group of `U(n)` and `SU(n)`.
    Symmetric,
    /// `B_n`, the Weyl group of `Sp(n)`.
    Signed,
}

impl GroupKind {
    pub fn order(self, n: usize) -> u128 {
        let fact: u128 = (1..=n as u128).product();
        match self {
            GroupKind::Symmetric => fact,
            GroupKind::Signed => fact << n,
        }
    }

    pub fn rank_cap(self) -> usize {
        match self {
            GroupKind::Symmetric => SYM_RANK_CAP,
            GroupKind::Signed => SIGNED_RANK_CAP,
        }
    }

    fn check_rank(self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::invalid("group rank must be at least 1"));
        }
        if n > self.rank_cap() {
            return Err(Error::Size {
                what: match self {
                    GroupKind::Symmetric => "symmetric group enumeration",
                    GroupKind::Signed => "signed permutation enumeration",
                },
                requested: n,
                cap: self.rank_cap(),
                hint: Some("use the cycle-type oracle for larger ranks"),
            });
        }
        Ok(())
    }
}

/// Cycle type of a group element.
///
/// Cycles of a signed permutation are cycles of `|w|`; a cycle is negative
/// when the product of the signs along it is `-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleData {
    /// Lengths in nonincreasing order.
    pub positive_cycles: Vec<usize>,
    /// Lengths in nonincreasing order. Always empty for `Σ_n`.
    pub negative_cycles: Vec<usize>,
}

impl CycleData {
    pub fn new(mut positive_cycles: Vec<usize>, mut negative_cycles: Vec<usize>) -> Result<Self> {
        if positive_cycles.iter().chain(&negative_cycles).any(|&c| c == 0) {
            return Err(Error::invalid("cycle lengths must be positive"));
        }
        positive_cycles.sort_unstable_by(|a, b| b.cmp(a));
        negative_cycles.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleData {
            positive_cycles,
            negative_cycles,
        })
    }

    pub fn size(&self) -> usize {
        self.positive_cycles.iter().chain(&self.negative_cycles).sum()
    }
}

fn descents<T: PartialOrd>(word: &[T]) -> Vec<usize> {
    word.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .map(|(i, _)| i + 1)
        .collect()
}

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<u32>,
}

impl Permutation {
    pub fn new(word: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; word.len()];
        for &v in &word {
            let i = v as usize;
            if i == 0 || i > word.len() || seen[i - 1] {
                return Err(Error::invalid(format!("{word:?} is not a permutation")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n as u32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Image of the letter `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.rank(), other.rank());
        Permutation {
            word: other.word.iter().map(|&j| self.word[j as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u32 + 1;
        }
        Permutation { word }
    }

    pub fn descent_set(&self) -> Vec<usize> {
        descents(&self.word)
    }

    pub fn maj(&self) -> usize {
        self.descent_set().into_iter().sum()
    }

    pub fn cycle_data(&self) -> CycleData {
        let n = self.word.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.word[i] as usize - 1;
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        CycleData {
            positive_cycles: cycles,
            negative_cycles: Vec::new(),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word)
    }
}

fn write_word<T: fmt::Display>(f: &mut fmt::Formatter<'_>, word: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, v) in word.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    write!(f, ")")
}

/// A signed permutation of `𝕀_n = {±1..±n}`, stored by the images of `1..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    word: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(word: Vec<i32>) -> Result<Self> {
        let abs: Vec<u32> = word.iter().map(|v| v.unsigned_abs()).collect();
        Permutation::new(abs)
            .map_err(|_| Error::invalid(format!("{word:?} is not a signed permutation")))?;
        Ok(SignedPermutation { word })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            word: (1..=n as i32).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    /// Image of the signed letter `i`, extended by `σ(-k) = -σ(k)`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.word[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            word: other.word.iter().map(|&j| self.apply(j)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            let pos = i as i32 + 1;
            word[v.unsigned_abs() as usize - 1] = if v < 0 { -pos } else { pos };
        }
        SignedPermutation { word }
    }

    /// The underlying permutation `|w|`.
    pub fn unsigned(&self) -> Permutation {
        Permutation {
            word: self.word.iter().map(|v| v.unsigned_abs()).collect(),
        }
    }

    /// Descents in the natural order of the integers on `𝕀_n`.
    pub fn descent_set(&self) -> Vec<usize> {
        descents(&self.word)
    }

    pub fn maj(&self) -> usize {
        self.descent_set().into_iter().sum()
    }

    pub fn neg(&self) -> usize {
        self.word.iter().filter(|&&v| v < 0).count()
    }

    /// `(f_1, …, f_n)` with `f_i = 2·d_i + ε_i`, where `d_i` counts descents
    /// at positions `≥ i` and `ε_i` flags a negative entry at `i`.
    pub fn f_vector(&self) -> Vec<usize> {
        let n = self.word.len();
        let mut f = vec![0; n];
        let mut d = 0;
        for i in (0..n).rev() {
            if i + 1 < n && self.word[i] > self.word[i + 1] {
                d += 1;
            }
            f[i] = 2 * d + usize::from(self.word[i] < 0);
        }
        f
    }

    /// Flag major index, as the sum of the `f`-vector.
    pub fn fmaj(&self) -> usize {
        self.f_vector().into_iter().sum()
    }

    pub fn cycle_data(&self) -> CycleData {
        let n = self.word.len();
        let mut seen = vec![false; n];
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut negatives = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                let v = self.word[i];
                negatives += usize::from(v < 0);
                i = v.unsigned_abs() as usize - 1;
                len += 1;
            }
            if negatives % 2 == 1 {
                negative.push(len);
            } else {
                positive.push(len);
            }
        }
        positive.sort_unstable_by(|a, b| b.cmp(a));
        negative.sort_unstable_by(|a, b| b.cmp(a));
        CycleData {
            positive_cycles: positive,
            negative_cycles: negative,
        }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word)
    }
}

/// Iterator over `Σ_n` in lexicographic order of the one-line word.
#[derive(Clone, Debug)]
pub struct Permutations {
    next: Option<Vec<u32>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_lex(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation { word: current })
    }
}

fn next_lex(word: &mut [u32]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| word[i] < word[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
    word.swap(i, j);
    word[i + 1..].reverse();
    true
}

/// Iterator over `B_n`: lexicographic in `|w|`, sign patterns innermost.
#[derive(Clone, Debug)]
pub struct SignedPermutations {
    perms: Permutations,
    base: Option<Permutation>,
    mask: u32,
    n: usize,
}

impl Iterator for SignedPermutations {
    type Item = SignedPermutation;

    fn next(&mut self) -> Option<SignedPermutation> {
        if self.base.is_none() || self.mask == 1 << self.n {
            self.base = Some(self.perms.next()?);
            self.mask = 0;
        }
        let base = self.base.as_ref()?;
        let word = base
            .word
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                if self.mask >> i & 1 == 1 {
                    -(v as i32)
                } else {
                    v as i32
                }
            })
            .collect();
        self.mask += 1;
        Some(SignedPermutation { word })
    }
}

pub fn permutations(n: usize) -> Result<Permutations> {
    GroupKind::Symmetric.check_rank(n)?;
    Ok(Permutations {
        next: Some((1..=n as u32).collect()),
    })
}

pub fn signed_permutations(n: usize) -> Result<SignedPermutations> {
    GroupKind::Signed.check_rank(n)?;
    Ok(SignedPermutations {
        perms: permutations(n)?,
        base: None,
        mask: 0,
        n,
    })
}

/// An element of either Weyl group, for code that is generic over the kind.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeylElement {
    Sym(Permutation),
    Signed(SignedPermutation),
}

impl WeylElement {
    pub fn inverse(&self) -> WeylElement {
        match self {
            WeylElement::Sym(w) => WeylElement::Sym(w.inverse()),
            WeylElement::Signed(w) => WeylElement::Signed(w.inverse()),
        }
    }

    pub fn maj(&self) -> usize {
        match self {
            WeylElement::Sym(w) => w.maj(),
            WeylElement::Signed(w) => w.maj(),
        }
    }

    pub fn descent_set(&self) -> Vec<usize> {
        match self {
            WeylElement::Sym(w) => w.descent_set(),
            WeylElement::Signed(w) => w.descent_set(),
        }
    }

    pub fn cycle_data(&self) -> CycleData {
        match self {
            WeylElement::Sym(w) => w.cycle_data(),
            WeylElement::Signed(w) => w.cycle_data(),
        }
    }
}

/// Every element of the Weyl group of the given kind, exactly once.
pub fn enumerate(kind: GroupKind, n: usize) -> Result<Box<dyn Iterator<Item = WeylElement>>> {
    Ok(match kind {
        GroupKind::Symmetric => Box::new(permutations(n)?.map(WeylElement::Sym)),
        GroupKind::Signed => Box::new(signed_permutations(n)?.map(WeylElement::Signed)),
    })
}
