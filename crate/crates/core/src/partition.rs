//! Integer partitions, Dyson ranks, Durfee data, and the dictionary between
//! binary words and partitions fitting in a box.
//!
//! A word `w` in `Π(1^m 2^n)` is read as a lattice path from `(0,0)` to
//! `(n,m)`, a 1 stepping north and a 2 stepping east. `λ(w)` is the set of
//! boxes of the `m × n` rectangle lying northwest of the path, so that
//! `inv w = |λ(w)|`. Ones are indexed right to left: `λ_i` counts the twos
//! before the `i`-th one from the right.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::Word;

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

/// A partition together with a rectangle `rows × cols` containing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoxedPartition {
    pub partition: Partition,
    pub rows: usize,
    pub cols: usize,
}

/// `λ = D(λ) ⊎ R(λ) ⊎ B(λ)`: the Durfee square and the pieces to its right
/// and below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DurfeeDecomposition {
    pub side: usize,
    pub right: Partition,
    pub below: Partition,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts and drops zero parts.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` for 1-based `i`, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are indexed from 1");
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// `d(λ)`, the side of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// `[r_1(λ), ..., r_d(λ)]` with `r_i = λ_i - λ'_i`.
    pub fn ranks(&self) -> Vec<i64> {
        let d = self.durfee();
        let conj = self.conjugate();
        (1..=d)
            .map(|i| self.part(i) as i64 - conj.part(i) as i64)
            .collect()
    }

    /// `r(λ)`; `None` when the Durfee square is empty.
    pub fn max_rank(&self) -> Option<i64> {
        self.ranks().into_iter().max()
    }

    /// Largest `i` with `r_i(λ) = r(λ)`.
    pub fn max_rank_index(&self) -> Option<usize> {
        let ranks = self.ranks();
        let r = *ranks.iter().max()?;
        ranks.iter().rposition(|&x| x == r).map(|i| i + 1)
    }

    /// `δ(λ) = λ_1 - λ_2`.
    pub fn delta(&self) -> usize {
        self.part_or_zero(1) - self.part_or_zero(2)
    }

    fn part_or_zero(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.0.len() <= rows && self.0.first().is_none_or(|&p| p <= cols)
    }

    pub fn durfee_decomposition(&self) -> DurfeeDecomposition {
        let d = self.durfee();
        let right = Partition::from_parts(self.0.iter().take(d).map(|&p| p - d).collect());
        let below = Partition(self.0.iter().skip(d).copied().collect());
        DurfeeDecomposition {
            side: d,
            right,
            below,
        }
    }

    pub fn contains_part(&self, part: usize) -> bool {
        self.0.contains(&part)
    }

    /// Ferrers diagram, one row of dots per part.
    pub fn ferrers(&self) -> String {
        self.0
            .iter()
            .map(|&p| vec!["•"; p].join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// The southeast boundary word `w(λ)`: 1 for north steps, 2 for east
    /// steps, traced inside the tight box `len(λ) × λ_1`.
    pub fn boundary_word(&self) -> Result<Word> {
        if self.is_empty() {
            return Err(Error::EmptyPartition);
        }
        word_in_box(self, self.len(), self.largest())
    }

    /// Inverse of [`Partition::boundary_word`], with `ε ↦ ∅`.
    pub fn from_boundary_word(w: &Word) -> Result<Partition> {
        if w.is_empty() {
            return Ok(Partition::empty());
        }
        let l = w.letters();
        if !w.is_binary() || l[0] != 2 || l[l.len() - 1] != 1 {
            return Err(Error::Domain(format!(
                "{w} is not a boundary word (must lie in 2{{1,2}}*1)"
            )));
        }
        Ok(lambda(w)?.partition)
    }
}

/// `λ(w) ⊆ m × n` for `w ∈ Π(1^m 2^n)`.
pub fn lambda_of_word(w: &Word, m: usize, n: usize) -> Result<BoxedPartition> {
    if !w.is_binary() || w.count(1) != m || w.count(2) != n {
        return Err(Error::WrongContent {
            word: w.to_string(),
            ones: m,
            twos: n,
        });
    }
    let mut twos_seen = 0;
    let mut before_each_one = Vec::with_capacity(m);
    for &a in w.letters() {
        if a == 2 {
            twos_seen += 1;
        } else {
            before_each_one.push(twos_seen);
        }
    }
    before_each_one.reverse();
    Ok(BoxedPartition {
        partition: Partition::from_parts(before_each_one),
        rows: m,
        cols: n,
    })
}

/// `λ(w)` in the box `(#ones) × (#twos)` of a binary word.
pub fn lambda(w: &Word) -> Result<BoxedPartition> {
    if !w.is_binary() {
        return Err(Error::NotBinary(w.to_string()));
    }
    lambda_of_word(w, w.count(1), w.count(2))
}

/// The unique `w ∈ Π(1^rows 2^cols)` with `λ(w) = λ`.
pub fn word_in_box(lambda: &Partition, rows: usize, cols: usize) -> Result<Word> {
    if !lambda.fits_in(rows, cols) {
        return Err(Error::Domain(format!(
            "{lambda} does not fit in a {rows}x{cols} box"
        )));
    }
    let mut letters = Vec::with_capacity(rows + cols);
    let mut placed = 0;
    for i in (1..=rows).rev() {
        let target = lambda.part_or_zero(i);
        letters.extend(std::iter::repeat_n(2, target - placed));
        placed = target;
        letters.push(1);
    }
    letters.extend(std::iter::repeat_n(2, cols - placed));
    Ok(Word::from_letters(letters))
}

/// Every partition of `n`, in increasing lexicographic order of parts.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_exact(n, n, usize::MAX, &mut current, &mut out);
    out.sort();
    out
}

fn fill_exact(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if current.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill_exact(remaining - p, p, max_len, current, out);
        current.pop();
    }
}

/// Partitions with `|λ| <= max_size`, parts `<= max_part` and at most
/// `max_len` parts, ordered by size and then lexicographically.
pub fn partitions_bounded(max_size: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for n in 0..=max_size {
        let mut current = Vec::new();
        let mut layer = Vec::new();
        fill_exact(n, max_part.min(n), max_len, &mut current, &mut layer);
        layer.sort();
        out.extend(layer);
    }
    out
}

/// Every partition fitting in `rows × cols`, ordered by size then lexicographically.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    partitions_bounded(rows * cols, cols, rows)
}

/// Named sets of partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionSet {
    /// Every partition.
    All,
    /// `R_{k,l}`: all ranks negative and `λ ⊆ rows × cols`; `R_n` is the square case.
    NegativeRanksInBox { rows: usize, cols: usize },
    /// `R_{≥t}`: every rank at least `t`.
    RanksAtLeast(i64),
    /// `R_{≤t}`: every rank at most `t`.
    RanksAtMost(i64),
    /// Every rank in `[lo, hi]`.
    RanksInInterval(i64, i64),
    /// `P_{≠t}`: no part equal to `t`.
    NoPartEqual(usize),
    /// `D_t`: `λ_1 - λ_2 = t`.
    Delta(usize),
    /// No part congruent to any of `residues` modulo `modulus`.
    NoPartCongruent { modulus: usize, residues: Vec<usize> },
}

impl PartitionSet {
    /// `R_n`.
    pub fn negative_ranks_square(n: usize) -> Self {
        PartitionSet::NegativeRanksInBox { rows: n, cols: n }
    }

    /// Parts avoiding `0` and `±r` modulo `m`.
    pub fn rogers_ramanujan_type(m: usize, r: usize) -> Self {
        PartitionSet::NoPartCongruent {
            modulus: m,
            residues: vec![0, r % m, (m - r % m) % m],
        }
    }

    pub fn contains(&self, lambda: &Partition) -> bool {
        match self {
            PartitionSet::All => true,
            PartitionSet::NegativeRanksInBox { rows, cols } => {
                lambda.fits_in(*rows, *cols) && lambda.ranks().iter().all(|&r| r < 0)
            }
            PartitionSet::RanksAtLeast(t) => lambda.ranks().iter().all(|r| r >= t),
            PartitionSet::RanksAtMost(t) => lambda.ranks().iter().all(|r| r <= t),
            PartitionSet::RanksInInterval(lo, hi) => {
                lambda.ranks().iter().all(|r| lo <= r && r <= hi)
            }
            PartitionSet::NoPartEqual(t) => !lambda.contains_part(*t),
            PartitionSet::Delta(t) => lambda.delta() == *t,
            PartitionSet::NoPartCongruent { modulus, residues } => lambda
                .parts()
                .iter()
                .all(|p| !residues.contains(&(p % modulus))),
        }
    }

    /// Members with `|λ| <= max_size`, ordered by size then lexicographically.
    pub fn enumerate(&self, max_size: usize) -> Vec<Partition> {
        let candidates = match self {
            PartitionSet::NegativeRanksInBox { rows, cols } => {
                partitions_bounded(max_size.min(rows * cols), *cols, *rows)
            }
            _ => partitions_bounded(max_size, max_size, max_size),
        };
        candidates.into_iter().filter(|l| self.contains(l)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParsePartition(s.to_string());
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .unwrap_or(t)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|tok| tok.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn lambda_of_figure_word() {
        let b = lambda_of_word(&w("112211212"), 5, 4).unwrap();
        assert_eq!(b.partition, p("(3,2,2)"));
        assert_eq!(lambda_of_word(&w("111222"), 3, 3).unwrap().partition, Partition::empty());
        assert_eq!(lambda_of_word(&w("222111"), 3, 3).unwrap().partition, p("(3,3,3)"));
        assert!(lambda_of_word(&w("1122"), 3, 1).is_err());
    }

    #[test]
    fn boundary_words() {
        assert_eq!(p("(3,2,2)").boundary_word().unwrap(), w("221121"));
        assert_eq!(p("(1)").boundary_word().unwrap(), w("21"));
        assert_eq!(Partition::empty().boundary_word(), Err(Error::EmptyPartition));
        assert_eq!(Partition::from_boundary_word(&w("221121")).unwrap(), p("(3,2,2)"));
        assert_eq!(Partition::from_boundary_word(&w("")).unwrap(), Partition::empty());
        assert!(Partition::from_boundary_word(&w("12")).is_err());
    }

    #[test]
    fn ranks_of_worked_example() {
        let l = p("(8,8,6,5,2,1)");
        assert_eq!(l.ranks(), vec![2, 3, 2, 1]);
        assert_eq!(l.max_rank(), Some(3));
        assert_eq!(l.max_rank_index(), Some(2));
        assert_eq!(p("(8,4,3,3,3,3,2,2,1,1)").ranks(), vec![-2, -4, -3]);
        assert_eq!(p("(3,3,3)").ranks(), vec![0, 0, 0]);
        assert_eq!(Partition::empty().max_rank(), None);
        assert_eq!(Partition::empty().max_rank_index(), None);
    }

    #[test]
    fn durfee_pieces() {
        let dd = p("(3,2,2)").durfee_decomposition();
        assert_eq!((dd.side, dd.right, dd.below), (2, p("(1)"), p("(2)")));
        let dd = Partition::empty().durfee_decomposition();
        assert_eq!((dd.side, dd.right.is_empty(), dd.below.is_empty()), (0, true, true));
        let dd = p("(4,4,4,4)").durfee_decomposition();
        assert_eq!((dd.side, dd.right.is_empty(), dd.below.is_empty()), (4, true, true));
    }

    #[test]
    fn conjugate_and_delta() {
        assert_eq!(p("(8,8,6,5,2,1)").conjugate(), p("(6,5,4,4,4,3,2,2)"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("(4)").delta(), 4);
        assert_eq!(p("(3,3,1)").delta(), 0);
        assert_eq!(Partition::empty().delta(), 0);
    }

    #[test]
    fn enumeration_counts() {
        // p(n) for n = 0..10
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions_in_box(3, 3).len(), 20);
        let four: Vec<String> = partitions_of(4).iter().map(|l| l.to_string()).collect();
        assert_eq!(four, vec!["(1,1,1,1)", "(2,1,1)", "(2,2)", "(3,1)", "(4)"]);
    }

    #[test]
    fn no_part_one_of_size_five() {
        let set = PartitionSet::NoPartEqual(1);
        let five: Vec<_> = set.enumerate(5).into_iter().filter(|l| l.size() == 5).collect();
        assert_eq!(five, vec![p("(3,2)"), p("(5)")]);
    }

    #[test]
    fn empty_partition_has_vacuous_ranks() {
        for t in -3..=3 {
            assert!(PartitionSet::RanksAtLeast(t).contains(&Partition::empty()));
            assert!(PartitionSet::RanksAtMost(t).contains(&Partition::empty()));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("(8,8,6,5,2,1)").to_string(), "(8,8,6,5,2,1)");
        assert_eq!(p("()").to_string(), "()");
        assert_eq!(p("3, 1"), Partition::new(vec![3, 1]).unwrap());
        assert!("(1,2)".parse::<Partition>().is_err());
        assert!("(2,0)".parse::<Partition>().is_err());
    }
}
