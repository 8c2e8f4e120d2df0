//! Enumerators for the finite word families, and length-capped slices of
//! the infinite ones. Every enumerator yields each word once, in
//! lexicographic order with `1 < 2 < ...` (a proper prefix sorts first).

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::lambda;
use crate::word::{Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `Π(w)`: all rearrangements of `w`.
    Rearrangements(Word),
    /// `S_n`.
    Permutations(usize),
    /// `{1,2}^n`.
    Binary(usize),
    /// Every word of length `len` over `{1..alphabet}`.
    Words { alphabet: Letter, len: usize },
    /// `B_{m,n}`: ballot rearrangements of `1^ones 2^twos`.
    Ballot { ones: usize, twos: usize },
    /// `B_n = B_{n,n}`.
    Catalan(usize),
    /// `F_n`: binary words of length `n` with no two adjacent ones.
    NoAdjacentOnes(usize),
    /// `F_{n,k}`: members of `F_n` with exactly `k` ones.
    NoAdjacentOnesWithOnes { len: usize, ones: usize },
    /// `G_n`: binary words of length `n` with no two adjacent twos.
    NoAdjacentTwos(usize),
    /// `H_n`: binary words whose letters sum to `n`.
    LetterSum(usize),
    /// `E_{n,k}`: words of `Π(1^n 2^n)` with maximal excess `e(w) = k`.
    MaxExcess { n: usize, k: i64 },
    /// `P_{n,k}`: words of `Π(1^n 2^n)` with `r(λ(w)) = k`.
    MaxRank { n: usize, k: i64 },
    /// `W_v = {1,2}* v ⊎ {ε}`, cut at `max_len`.
    Suffix { suffix: Word, max_len: Option<usize> },
    /// `B_v`: ballot members of `W_v`, cut at `max_len`.
    BallotSuffix { suffix: Word, max_len: Option<usize> },
    /// `Av_n(Π)`: permutations of `1..n` avoiding every pattern.
    Avoiding { n: usize, patterns: Vec<Word> },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Rearrangements(w) => write!(f, "Pi({w})"),
            Family::Permutations(n) => write!(f, "S_{n}"),
            Family::Binary(n) => write!(f, "{{1,2}}^{n}"),
            Family::Words { alphabet, len } => write!(f, "{{1..{alphabet}}}^{len}"),
            Family::Ballot { ones, twos } => write!(f, "B_{{{ones},{twos}}}"),
            Family::Catalan(n) => write!(f, "B_{n}"),
            Family::NoAdjacentOnes(n) => write!(f, "F_{n}"),
            Family::NoAdjacentOnesWithOnes { len, ones } => write!(f, "F_{{{len},{ones}}}"),
            Family::NoAdjacentTwos(n) => write!(f, "G_{n}"),
            Family::LetterSum(n) => write!(f, "H_{n}"),
            Family::MaxExcess { n, k } => write!(f, "E_{{{n},{k}}}"),
            Family::MaxRank { n, k } => write!(f, "P_{{{n},{k}}}"),
            Family::Suffix { suffix, .. } => write!(f, "W_{suffix}"),
            Family::BallotSuffix { suffix, .. } => write!(f, "B_{suffix}"),
            Family::Avoiding { n, patterns } => {
                let ps: Vec<String> = patterns.iter().map(|p| p.to_string()).collect();
                write!(f, "Av_{n}({})", ps.join(","))
            }
        }
    }
}

/// Rearranges `a` into the next permutation in lexicographic order.
pub fn next_permutation<T: Ord>(a: &mut [T]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Every distinct rearrangement of `w`, in lexicographic order.
pub fn rearrangements(w: &Word) -> Vec<Word> {
    let mut cur = w.sorted().into_letters();
    let mut out = vec![Word::from_letters(cur.clone())];
    while next_permutation(&mut cur) {
        out.push(Word::from_letters(cur.clone()));
    }
    out
}

/// All words of length `len` over `{1..alphabet}`, lexicographically.
pub fn all_words(alphabet: Letter, len: usize) -> Vec<Word> {
    if alphabet == 0 {
        return if len == 0 { vec![Word::empty()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut cur = vec![1; len];
    loop {
        out.push(Word::from_letters(cur.clone()));
        let mut i = len;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < alphabet {
                cur[i] += 1;
                for x in &mut cur[i + 1..] {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// All words of length at most `max_len` over `{1..alphabet}`.
pub fn words_up_to(alphabet: Letter, max_len: usize) -> Vec<Word> {
    let mut out: Vec<Word> = (0..=max_len).flat_map(|l| all_words(alphabet, l)).collect();
    out.sort();
    out
}

fn has_adjacent(w: &Word, letter: Letter) -> bool {
    w.letters().windows(2).any(|p| p[0] == letter && p[1] == letter)
}

fn letter_sum_words(n: usize) -> Vec<Word> {
    fn go(remaining: usize, cur: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if remaining == 0 {
            out.push(Word::from_letters(cur.clone()));
            return;
        }
        for a in 1..=remaining.min(2) {
            cur.push(a as Letter);
            go(remaining - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out
}

fn suffix_slice(suffix: &Word, max_len: Option<usize>, name: &str) -> Result<Vec<Word>> {
    let cap = max_len.ok_or_else(|| Error::MissingLengthCap(name.to_string()))?;
    let mut out = vec![Word::empty()];
    if suffix.len() <= cap {
        for l in 0..=cap - suffix.len() {
            for x in all_words(2, l) {
                let w = x.concat(suffix);
                // v = ε already listed
                if !w.is_empty() {
                    out.push(w);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

impl Family {
    /// `Π(1^n 2^n)`.
    pub fn balanced(n: usize) -> Family {
        Family::Rearrangements(Word::from_blocks(&[(1, n), (2, n)]))
    }

    pub fn enumerate(&self) -> Result<Vec<Word>> {
        let mut out = match self {
            Family::Rearrangements(w) => rearrangements(w),
            Family::Permutations(n) => {
                rearrangements(&Word::from_letters((1..=*n as Letter).collect()))
            }
            Family::Binary(n) => all_words(2, *n),
            Family::Words { alphabet, len } => all_words(*alphabet, *len),
            Family::Ballot { ones, twos } => {
                rearrangements(&Word::from_blocks(&[(1, *ones), (2, *twos)]))
                    .into_iter()
                    .filter(Word::is_ballot)
                    .collect()
            }
            Family::Catalan(n) => Family::Ballot { ones: *n, twos: *n }.enumerate()?,
            Family::NoAdjacentOnes(n) => all_words(2, *n)
                .into_iter()
                .filter(|w| !has_adjacent(w, 1))
                .collect(),
            Family::NoAdjacentOnesWithOnes { len, ones } => all_words(2, *len)
                .into_iter()
                .filter(|w| !has_adjacent(w, 1) && w.count(1) == *ones)
                .collect(),
            Family::NoAdjacentTwos(n) => all_words(2, *n)
                .into_iter()
                .filter(|w| !has_adjacent(w, 2))
                .collect(),
            Family::LetterSum(n) => letter_sum_words(*n),
            Family::MaxExcess { n, k } => {
                let mut v = Vec::new();
                for w in rearrangements(&Word::from_blocks(&[(1, *n), (2, *n)])) {
                    if w.max_excess()? == *k {
                        v.push(w);
                    }
                }
                v
            }
            Family::MaxRank { n, k } => {
                let mut v = Vec::new();
                for w in rearrangements(&Word::from_blocks(&[(1, *n), (2, *n)])) {
                    if lambda(&w)?.partition.max_rank() == Some(*k) {
                        v.push(w);
                    }
                }
                v
            }
            Family::Suffix { suffix, max_len } => {
                suffix_slice(suffix, *max_len, &self.to_string())?
            }
            Family::BallotSuffix { suffix, max_len } => {
                suffix_slice(suffix, *max_len, &self.to_string())?
                    .into_iter()
                    .filter(Word::is_ballot)
                    .collect()
            }
            Family::Avoiding { n, patterns } => {
                let perms = Family::Permutations(*n).enumerate()?;
                let mut v = Vec::new();
                for w in perms {
                    let mut keep = true;
                    for p in patterns {
                        if w.contains_pattern(p)? {
                            keep = false;
                            break;
                        }
                    }
                    if keep {
                        v.push(w);
                    }
                }
                v
            }
        };
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn count(f: Family) -> usize {
        f.enumerate().unwrap().len()
    }

    #[test]
    fn catalan_and_fibonacci_counts() {
        assert_eq!(count(Family::Catalan(3)), 5);
        assert_eq!(count(Family::Catalan(2)), 2);
        assert_eq!(count(Family::NoAdjacentOnes(4)), 8);
        assert_eq!(count(Family::LetterSum(5)), 8);
        assert_eq!(count(Family::NoAdjacentTwos(4)), 8);
        assert_eq!(count(Family::Permutations(4)), 24);
    }

    #[test]
    fn letter_sum_five_listing() {
        let got = Family::LetterSum(5).enumerate().unwrap();
        let mut want: Vec<Word> = ["11111", "1112", "1121", "1211", "2111", "122", "212", "221"]
            .iter()
            .map(|s| w(s))
            .collect();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn lexicographic_output() {
        let got: Vec<String> = Family::Catalan(2).enumerate().unwrap().iter().map(|x| x.to_string()).collect();
        assert_eq!(got, vec!["1122", "1212"]);
        let pi = Family::Rearrangements(w("121")).enumerate().unwrap();
        assert_eq!(pi, vec![w("112"), w("121"), w("211")]);
    }

    #[test]
    fn avoiders() {
        let av = Family::Avoiding { n: 4, patterns: vec![w("132")] };
        assert_eq!(count(av), 14);
        let av3 = Family::Avoiding { n: 3, patterns: vec![w("123")] };
        assert_eq!(count(av3), 5);
    }

    #[test]
    fn suffix_families_need_a_cap() {
        let err = Family::Suffix { suffix: w("21"), max_len: None }.enumerate();
        assert!(matches!(err, Err(Error::MissingLengthCap(_))));
        let got = Family::Suffix { suffix: w("21"), max_len: Some(3) }.enumerate().unwrap();
        assert_eq!(got, vec![w(""), w("121"), w("21"), w("221")]);
        let ballot = Family::BallotSuffix { suffix: w("21"), max_len: Some(4) }.enumerate().unwrap();
        assert_eq!(ballot, vec![w(""), w("1121"), w("121")]);
    }

    #[test]
    fn excess_and_rank_classes_partition_the_balanced_words() {
        let n = 3;
        let total = count(Family::balanced(n));
        let e: usize = (-3..=3).map(|k| count(Family::MaxExcess { n, k })).sum();
        assert_eq!(e, total);
        assert_eq!(count(Family::MaxExcess { n, k: 0 }), 5);
    }
}
