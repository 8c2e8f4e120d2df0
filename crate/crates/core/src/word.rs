//! Words over the positive integers and the statistics defined on them.
//!
//! Positions are 1-based at every public boundary: `descent_set` of
//! `2121312` is `{1, 3, 5}` and `maj` sums those positions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A letter of a word. Always at least 1.
pub type Letter = u32;

/// A finite word `a_1 a_2 ... a_n` over the positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

/// A composition allowing zero parts, e.g. the ones' and twos' compositions
/// of a binary word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

/// A maximal constant factor of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub value: Letter,
    pub len: usize,
    pub is_prefix: bool,
    pub is_suffix: bool,
}

/// Prefix excess data of a binary word written as
/// `1^{m_0} 2^{n_0} ... 1^{m_d} 2^{n_d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcessProfile {
    /// `e_i = (n_0 + ... + n_i) - (m_0 + ... + m_i)` for `0 <= i <= d`.
    pub excesses: Vec<i64>,
    /// `e(w)`, the maximum of `excesses`.
    pub max_excess: i64,
    /// `p(w)`, the number of matched (1, 2) parenthesis pairs.
    pub pairs: usize,
}

/// Parenthesis matching of a binary word with 1 as "(" and 2 as ")".
/// All positions are 1-based.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pairing {
    pub pairs: Vec<(usize, usize)>,
    pub unpaired_twos: Vec<usize>,
    pub unpaired_ones: Vec<usize>,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Caller guarantees every letter is positive.
    pub(crate) fn from_letters(letters: Vec<Letter>) -> Self {
        debug_assert!(letters.iter().all(|&a| a > 0));
        Word(letters)
    }

    /// `letter^count` in multiplicity notation.
    pub fn power(letter: Letter, count: usize) -> Self {
        assert!(letter > 0, "letters are positive");
        Word(vec![letter; count])
    }

    /// Builds a word from `(letter, multiplicity)` blocks, skipping empty blocks.
    pub fn from_blocks(blocks: &[(Letter, usize)]) -> Self {
        let mut letters = Vec::with_capacity(blocks.iter().map(|b| b.1).sum());
        for &(a, m) in blocks {
            assert!(a > 0, "letters are positive");
            letters.extend(std::iter::repeat_n(a, m));
        }
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&a| a <= 2)
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&a| a == letter).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    /// Letters sorted into weakly increasing order.
    pub fn sorted(&self) -> Word {
        let mut letters = self.0.clone();
        letters.sort_unstable();
        Word(letters)
    }

    pub fn descent_set(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn des(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    pub fn maj(&self) -> usize {
        self.descent_set().into_iter().sum()
    }

    /// Pairs `(i, j)` with `i < j` and `a_i > a_j`, 1-based.
    pub fn inversion_set(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in self.0.iter().enumerate().skip(i + 1) {
                if a > b {
                    out.push((i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn inv(&self) -> usize {
        let mut total = 0;
        for (i, &a) in self.0.iter().enumerate() {
            total += self.0[i + 1..].iter().filter(|&&b| a > b).count();
        }
        total
    }

    /// Number of indices where the word strictly exceeds its weakly
    /// increasing rearrangement.
    pub fn exc(&self) -> usize {
        let sorted = self.sorted();
        self.0.iter().zip(sorted.0.iter()).filter(|(a, b)| a > b).count()
    }

    /// Every prefix has at least as many `i`s as `(i+1)`s, for every `i`.
    pub fn is_ballot(&self) -> bool {
        let mut counts: Vec<usize> = Vec::new();
        for &a in &self.0 {
            let a = a as usize;
            if counts.len() <= a {
                counts.resize(a + 1, 0);
            }
            counts[a] += 1;
            if a > 1 && counts[a] > counts[a - 1] {
                return false;
            }
        }
        true
    }

    fn require_binary(&self) -> Result<()> {
        if self.is_binary() {
            Ok(())
        } else {
            Err(Error::NotBinary(self.to_string()))
        }
    }

    /// `w'`: reverse the word and swap ones with twos.
    pub fn prime(&self) -> Result<Word> {
        self.require_binary()?;
        Ok(Word(self.0.iter().rev().map(|&a| 3 - a).collect()))
    }

    pub fn runs(&self) -> Vec<Run> {
        let n = self.0.len();
        let mut runs = Vec::new();
        let mut start = 0;
        while start < n {
            let value = self.0[start];
            let mut end = start;
            while end < n && self.0[end] == value {
                end += 1;
            }
            runs.push(Run {
                value,
                len: end - start,
                is_prefix: start == 0,
                is_suffix: end == n,
            });
            start = end;
        }
        runs
    }

    /// The factorization `1^{m_0} 2^{n_0} ... 1^{m_d} 2^{n_d}` with
    /// `d = des(v)`, returned as `(omega, tau) = ((m_i), (n_i))`.
    pub fn ones_twos_compositions(&self) -> Result<(Composition, Composition)> {
        self.require_binary()?;
        let mut ones = vec![0usize];
        let mut twos = vec![0usize];
        let mut prev = 0;
        for &a in &self.0 {
            if a == 1 && prev == 2 {
                ones.push(0);
                twos.push(0);
            }
            let last = ones.len() - 1;
            if a == 1 {
                ones[last] += 1;
            } else {
                twos[last] += 1;
            }
            prev = a;
        }
        Ok((Composition(ones), Composition(twos)))
    }

    /// Rebuilds `1^{m_0} 2^{n_0} ... 1^{m_d} 2^{n_d}`.
    pub fn from_compositions(ones: &Composition, twos: &Composition) -> Word {
        assert_eq!(ones.len(), twos.len(), "compositions must have equal length");
        let mut blocks = Vec::with_capacity(2 * ones.len());
        for (&m, &n) in ones.0.iter().zip(twos.0.iter()) {
            blocks.push((1, m));
            blocks.push((2, n));
        }
        Word::from_blocks(&blocks)
    }

    /// Matches each 2 with the nearest unmatched 1 to its left.
    pub fn pairing(&self) -> Result<Pairing> {
        self.require_binary()?;
        let mut open: Vec<usize> = Vec::new();
        let mut pairing = Pairing::default();
        for (i, &a) in self.0.iter().enumerate() {
            let pos = i + 1;
            if a == 1 {
                open.push(pos);
            } else if let Some(j) = open.pop() {
                pairing.pairs.push((j, pos));
            } else {
                pairing.unpaired_twos.push(pos);
            }
        }
        pairing.pairs.sort_unstable();
        pairing.unpaired_ones = open;
        debug_assert!(match (pairing.unpaired_twos.last(), pairing.unpaired_ones.first()) {
            (Some(t), Some(o)) => t < o,
            _ => true,
        });
        Ok(pairing)
    }

    pub fn excess_profile(&self) -> Result<ExcessProfile> {
        let (ones, twos) = self.ones_twos_compositions()?;
        let mut excesses = Vec::with_capacity(ones.len());
        let mut acc: i64 = 0;
        for (&m, &n) in ones.0.iter().zip(twos.0.iter()) {
            acc += n as i64 - m as i64;
            excesses.push(acc);
        }
        let max_excess = *excesses.iter().max().expect("at least one block");
        let pairs = self.pairing()?.pairs.len();
        Ok(ExcessProfile {
            excesses,
            max_excess,
            pairs,
        })
    }

    /// `e(w)`: maximum excess of twos over ones among the block prefixes.
    pub fn max_excess(&self) -> Result<i64> {
        Ok(self.excess_profile()?.max_excess)
    }

    /// True iff some subsequence is order-isomorphic to `pattern`, which
    /// must be a permutation of `1..k`.
    pub fn contains_pattern(&self, pattern: &Word) -> Result<bool> {
        let k = pattern.len();
        let mut seen = vec![false; k + 1];
        for &p in &pattern.0 {
            let p = p as usize;
            if p > k || seen[p] {
                return Err(Error::NotPermutation(pattern.to_string()));
            }
            seen[p] = true;
        }
        let mut chosen = Vec::with_capacity(k);
        Ok(embed(&self.0, &pattern.0, 0, &mut chosen))
    }

    pub fn avoids(&self, pattern: &Word) -> Result<bool> {
        self.contains_pattern(pattern).map(|c| !c)
    }
}

fn embed(text: &[Letter], pattern: &[Letter], from: usize, chosen: &mut Vec<Letter>) -> bool {
    let j = chosen.len();
    if j == pattern.len() {
        return true;
    }
    if text.len() - from < pattern.len() - j {
        return false;
    }
    for pos in from..text.len() {
        let x = text[pos];
        let consistent = chosen.iter().zip(pattern.iter()).all(|(&y, &p)| {
            y != x && ((p < pattern[j]) == (y < x))
        });
        if consistent {
            chosen.push(x);
            if embed(text, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

impl From<Vec<usize>> for Composition {
    fn from(parts: Vec<usize>) -> Self {
        Composition(parts)
    }
}

impl fmt::Display for Composition {
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

/// Digit string when every letter is at most 9, comma-separated otherwise.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a <= 9) {
            for a in &self.0 {
                write!(f, "{a}")?;
            }
        } else {
            for (i, a) in self.0.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "ε" {
            return Ok(Word::empty());
        }
        let bad = || Error::ParseWord(s.to_string());
        let letters: Vec<Letter> = if s.contains(',') {
            s.split(',')
                .map(|tok| tok.trim().parse::<Letter>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Word::new(letters).map_err(|_| bad())
    }
}

impl AsRef<[Letter]> for Word {
    fn as_ref(&self) -> &[Letter] {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn descents_of_worked_example() {
        let v = w("2121312");
        assert_eq!(v.descent_set(), vec![1, 3, 5]);
        assert_eq!(v.maj(), 9);
        assert_eq!(v.des(), 3);
        assert!(w("").descent_set().is_empty());
        assert_eq!(w("1122").maj(), 0);
    }

    #[test]
    fn inversions() {
        assert_eq!(w("2213112").inv(), 9);
        assert_eq!(w("").inv(), 0);
        assert_eq!(w("112211212").inv(), 7);
    }

    #[test]
    fn excedances() {
        assert_eq!(w("321").exc(), 1);
        assert_eq!(w("123").exc(), 0);
        assert_eq!(w("2121312").exc(), 3);
    }

    #[test]
    fn prime_reverses_and_swaps() {
        assert_eq!(w("112122").prime().unwrap(), w("112122"));
        assert_eq!(w("12").prime().unwrap(), w("12"));
        assert_eq!(w("").prime().unwrap(), w(""));
        assert_eq!(w("1112").prime().unwrap(), w("1222"));
        assert!(matches!(w("123").prime(), Err(Error::NotBinary(_))));
    }

    #[test]
    fn ballot() {
        assert!(w("1122").is_ballot());
        assert!(w("1212").is_ballot());
        assert!(!w("2112").is_ballot());
        assert!(w("").is_ballot());
        assert!(w("112211212").is_ballot());
        assert!(w("1213").is_ballot());
        assert!(!w("1223").is_ballot());
        assert!(!w("121333").is_ballot());
        assert!(w("123123").is_ballot());
    }

    #[test]
    fn excess_and_pairs() {
        let p = w("1122").excess_profile().unwrap();
        assert_eq!((p.max_excess, p.pairs), (0, 2));
        let p = w("2211").excess_profile().unwrap();
        assert_eq!((p.max_excess, p.pairs), (2, 0));
        assert_eq!(p.excesses, vec![2, 0]);
        let p = w("").excess_profile().unwrap();
        assert_eq!((p.excesses.clone(), p.max_excess, p.pairs), (vec![0], 0, 0));
        assert!(w("13").excess_profile().is_err());
    }

    #[test]
    fn max_excess_can_be_negative() {
        assert_eq!(w("1112").max_excess().unwrap(), -2);
    }

    #[test]
    fn runs_of_example() {
        let runs = w("1112212222").runs();
        let shape: Vec<_> = runs.iter().map(|r| (r.value, r.len)).collect();
        assert_eq!(shape, vec![(1, 3), (2, 2), (1, 1), (2, 4)]);
        assert!(runs[0].is_prefix && !runs[0].is_suffix);
        assert!(runs[3].is_suffix && !runs[3].is_prefix);
        assert!(w("").runs().is_empty());
        let single = w("2").runs();
        assert_eq!(single.len(), 1);
        assert!(single[0].is_prefix && single[0].is_suffix);
    }

    #[test]
    fn compositions_of_table_word() {
        let v = w("22122112221121");
        let (om, ta) = v.ones_twos_compositions().unwrap();
        assert_eq!(om.parts(), &[0, 1, 2, 2, 1]);
        assert_eq!(ta.parts(), &[2, 2, 3, 1, 0]);
        assert_eq!(Word::from_compositions(&om, &ta), v);

        let (om, ta) = w("").ones_twos_compositions().unwrap();
        assert_eq!((om.parts(), ta.parts()), (&[0][..], &[0][..]));
        let (om, ta) = w("1122").ones_twos_compositions().unwrap();
        assert_eq!((om.parts(), ta.parts()), (&[2][..], &[2][..]));
    }

    #[test]
    fn patterns() {
        assert!(w("2413").contains_pattern(&w("231")).unwrap());
        assert!(!w("123").contains_pattern(&w("21")).unwrap());
        assert!(w("3412").contains_pattern(&w("12")).unwrap());
        assert!(!w("1324").contains_pattern(&w("321")).unwrap());
        assert!(w("").contains_pattern(&w("")).unwrap());
        assert!(w("12").contains_pattern(&w("13")).is_err());
        // repeated letters never realize a permutation pattern
        assert!(!w("11").contains_pattern(&w("12")).unwrap());
    }

    #[test]
    fn pairing_positions() {
        let p = w("2112").pairing().unwrap();
        assert_eq!(p.pairs, vec![(3, 4)]);
        assert_eq!(p.unpaired_twos, vec![1]);
        assert_eq!(p.unpaired_ones, vec![2]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(w("2121312").to_string(), "2121312");
        let big = w("1,10,2");
        assert_eq!(big.letters(), &[1, 10, 2]);
        assert_eq!(big.to_string(), "1,10,2");
        assert_eq!(w("").to_string(), "");
        assert!("1a".parse::<Word>().is_err());
        assert!("102".parse::<Word>().is_err());
        assert!(Word::new(vec![0]).is_err());
    }
}
