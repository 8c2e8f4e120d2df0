//! Structured bijections on ballot sequences and partitions: the split map
//! `β`, the composition encodings `o` and `t`, the rank-reduction step `κ`
//! and the map `CSV` built from it, and the Greene–Kleitman maps `γ` and
//! `GK`.

use crate::error::{Error, Result};
use crate::foata::phi_inverse;
use crate::partition::Partition;
use crate::word::{Composition, Letter, Word};

/// `β(xy) = (x, y')` where `x` and `y` are the two halves of `w ∈ B_n`.
pub fn beta(w: &Word) -> Result<(Word, Word)> {
    if !w.is_binary() {
        return Err(Error::NotBinary(w.to_string()));
    }
    let n = w.len() / 2;
    if !w.len().is_multiple_of(2) || w.count(1) != n {
        return Err(Error::WrongContent {
            word: w.to_string(),
            ones: n,
            twos: n,
        });
    }
    if !w.is_ballot() {
        return Err(Error::NotBallot(w.to_string()));
    }
    let (x, y) = w.letters().split_at(n);
    let x = Word::from_letters(x.to_vec());
    let y = Word::from_letters(y.to_vec()).prime()?;
    Ok((x, y))
}

/// Membership in `O_{n,d}` (`d = len - 1`): only part 0 may vanish and the
/// tail sums satisfy `ω_d + ... + ω_{d-i+1} >= 2i`.
pub fn in_ones_set(omega: &Composition) -> bool {
    in_tail_set(omega, |i| 2 * i, |idx, d| idx == 0 || idx > d)
}

/// Membership in `T_{n,d}`: only the last part may vanish and the tail sums
/// satisfy `τ_d + ... + τ_{d-i+1} >= 2i - 1`.
pub fn in_twos_set(tau: &Composition) -> bool {
    in_tail_set(tau, |i| 2 * i - 1, |idx, d| idx == d)
}

fn in_tail_set(
    c: &Composition,
    bound: impl Fn(usize) -> usize,
    may_vanish: impl Fn(usize, usize) -> bool,
) -> bool {
    let parts = c.parts();
    if parts.is_empty() {
        return false;
    }
    let d = parts.len() - 1;
    if parts
        .iter()
        .enumerate()
        .any(|(idx, &p)| p == 0 && !may_vanish(idx, d))
    {
        return false;
    }
    let mut tail = 0;
    for i in 1..=d {
        tail += parts[d - i + 1];
        if tail < bound(i) {
            return false;
        }
    }
    true
}

/// `o(ω) = 1^{ω_d - 1} 2 1^{ω_{d-1} - 1} 2 ... 1^{ω_1 - 1} 2 1^{ω_0}`.
pub fn o_map(omega: &Composition) -> Result<Word> {
    if !in_ones_set(omega) {
        return Err(Error::InvalidComposition(omega.parts().to_vec()));
    }
    let p = omega.parts();
    let d = p.len() - 1;
    let mut blocks: Vec<(Letter, usize)> = Vec::new();
    for i in (1..=d).rev() {
        blocks.push((1, p[i] - 1));
        blocks.push((2, 1));
    }
    blocks.push((1, p[0]));
    Ok(Word::from_blocks(&blocks))
}

/// `t(τ) = 1^{τ_d} 2 1^{τ_{d-1} - 1} 2 ... 2 1^{τ_0 - 1}`.
pub fn t_map(tau: &Composition) -> Result<Word> {
    if !in_twos_set(tau) {
        return Err(Error::InvalidComposition(tau.parts().to_vec()));
    }
    let p = tau.parts();
    let d = p.len() - 1;
    if d == 0 {
        return Ok(Word::power(1, p[0]));
    }
    let mut blocks: Vec<(Letter, usize)> = vec![(1, p[d]), (2, 1)];
    for i in (1..d).rev() {
        blocks.push((1, p[i] - 1));
        blocks.push((2, 1));
    }
    blocks.push((1, p[0] - 1));
    Ok(Word::from_blocks(&blocks))
}

/// Lengths of the 1-runs between the twos: `1^{k_d} 2 ... 2 1^{k_0}` gives
/// `[k_0, ..., k_d]`.
fn gaps_reversed(x: &Word) -> Result<Vec<usize>> {
    if !x.is_binary() {
        return Err(Error::NotBinary(x.to_string()));
    }
    let mut gaps = vec![0usize];
    for &a in x.letters() {
        if a == 2 {
            gaps.push(0);
        } else {
            *gaps.last_mut().unwrap() += 1;
        }
    }
    gaps.reverse();
    Ok(gaps)
}

/// Inverse of [`o_map`] on `B_{n-d,d}`.
pub fn o_inverse(x: &Word) -> Result<Composition> {
    if !x.is_ballot() {
        return Err(Error::NotBallot(x.to_string()));
    }
    let mut k = gaps_reversed(x)?;
    for part in k.iter_mut().skip(1) {
        *part += 1;
    }
    Ok(Composition::new(k))
}

/// Inverse of [`t_map`] on `B_{n-d,d}`.
pub fn t_inverse(y: &Word) -> Result<Composition> {
    if !y.is_ballot() {
        return Err(Error::NotBallot(y.to_string()));
    }
    let l = gaps_reversed(y)?;
    let d = l.len() - 1;
    let mut tau = l.clone();
    for part in tau.iter_mut().take(d) {
        *part += 1;
    }
    Ok(Composition::new(tau))
}

/// All compositions of `n` of length `d + 1` whose parts satisfy the
/// per-index minimums, in lexicographic order.
fn compositions_with_minimums(n: usize, mins: &[usize]) -> Vec<Composition> {
    fn go(n: usize, mins: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        let idx = cur.len();
        if idx == mins.len() {
            if n == 0 {
                out.push(Composition::new(cur.clone()));
            }
            return;
        }
        let rest_min: usize = mins[idx + 1..].iter().sum();
        if n < mins[idx] + rest_min {
            return;
        }
        for p in mins[idx]..=n - rest_min {
            cur.push(p);
            go(n - p, mins, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, mins, &mut Vec::new(), &mut out);
    out
}

/// `O_{n,d}`.
pub fn ones_set(n: usize, d: usize) -> Vec<Composition> {
    let mut mins = vec![1; d + 1];
    mins[0] = 0;
    compositions_with_minimums(n, &mins)
        .into_iter()
        .filter(in_ones_set)
        .collect()
}

/// `T_{n,d}`.
pub fn twos_set(n: usize, d: usize) -> Vec<Composition> {
    let mut mins = vec![1; d + 1];
    mins[d] = 0;
    compositions_with_minimums(n, &mins)
        .into_iter()
        .filter(in_twos_set)
        .collect()
}

/// One pass of the CSV loop: with `i` the largest index attaining the
/// maximal rank, remove a column of height `i`, add a part `i - 1` and grow
/// the first part by one.
pub fn kappa(lambda: &Partition) -> Result<Partition> {
    let undefined = |reason: &str| Error::KappaUndefined {
        partition: lambda.to_string(),
        reason: reason.to_string(),
    };
    let r = lambda
        .max_rank()
        .ok_or_else(|| undefined("empty Durfee square"))?;
    if r < 0 {
        return Err(undefined("maximal rank is negative"));
    }
    let i = lambda.max_rank_index().expect("ranks exist");
    let mut columns = lambda.conjugate().parts().to_vec();
    let pos = columns
        .iter()
        .position(|&c| c == i)
        .ok_or_else(|| undefined(&format!("conjugate has no part {i}")))?;
    columns.remove(pos);
    let mut parts = Partition::from_parts(columns).conjugate().parts().to_vec();
    if i > 1 {
        parts.push(i - 1);
    }
    let mut parts = Partition::from_parts(parts).parts().to_vec();
    if parts.is_empty() {
        parts.push(0);
    }
    parts[0] += 1;
    Partition::new(parts)
}

/// A row of the CSV stage table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsvStage {
    pub partition: Partition,
    pub ranks: Vec<i64>,
    pub max_rank: Option<i64>,
    pub max_rank_index: Option<usize>,
    /// `w(λ)`.
    pub boundary: Word,
    /// `φ^{-1}(w(λ))`.
    pub preimage: Word,
    /// `[e_0, ..., e_d]` of the preimage.
    pub excesses: Vec<i64>,
}

fn in_negative_ranks(lambda: &Partition) -> bool {
    lambda.ranks().iter().all(|&r| r < 0)
}

fn check_csv_domain(lambda: &Partition) -> Result<()> {
    if in_negative_ranks(lambda) || lambda.delta() == 0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "{lambda} has λ_1 - λ_2 = {} and a nonnegative rank",
            lambda.delta()
        )))
    }
}

/// `CSV(λ) = κ^{r+1}(λ)`, iterating `κ` while the maximal rank is `>= 0`.
/// Inputs already having all ranks negative are returned unchanged.
pub fn csv(lambda: &Partition) -> Result<Partition> {
    check_csv_domain(lambda)?;
    let mut cur = lambda.clone();
    while cur.max_rank().is_some_and(|r| r >= 0) {
        cur = kappa(&cur)?;
    }
    Ok(cur)
}

pub fn csv_trace(lambda: &Partition) -> Result<Vec<CsvStage>> {
    check_csv_domain(lambda)?;
    let mut stages = Vec::new();
    let mut cur = lambda.clone();
    loop {
        let boundary = if cur.is_empty() {
            Word::empty()
        } else {
            cur.boundary_word()?
        };
        let preimage = phi_inverse(&boundary);
        let excesses = preimage.excess_profile()?.excesses;
        let max_rank = cur.max_rank();
        stages.push(CsvStage {
            partition: cur.clone(),
            ranks: cur.ranks(),
            max_rank,
            max_rank_index: cur.max_rank_index(),
            boundary,
            preimage,
            excesses,
        });
        if !max_rank.is_some_and(|r| r >= 0) {
            return Ok(stages);
        }
        cur = kappa(&cur)?;
    }
}

fn fmt_vec(v: &[i64]) -> String {
    let items: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", items.join(","))
}

pub fn render_csv_trace(stages: &[CsvStage]) -> String {
    let mut out = Vec::new();
    for (k, st) in stages.iter().enumerate() {
        let r = st.max_rank.map_or("-".to_string(), |r| r.to_string());
        let i = st.max_rank_index.map_or("-".to_string(), |i| i.to_string());
        out.push(format!(
            "stage {}: λ = {}\n{}\nρ={}  r={}  i={}\nw={}\nv={}\nε={}",
            k + 1,
            st.partition,
            st.partition.ferrers(),
            fmt_vec(&st.ranks),
            r,
            i,
            st.boundary,
            st.preimage,
            fmt_vec(&st.excesses)
        ));
    }
    out.join("\n\n")
}

/// `γ`: change the rightmost unpaired two to a one.
pub fn gamma(w: &Word) -> Result<Word> {
    let pairing = w.pairing()?;
    let pos = *pairing
        .unpaired_twos
        .last()
        .ok_or_else(|| Error::NoUnpairedTwo(w.to_string()))?;
    let mut letters = w.letters().to_vec();
    letters[pos - 1] = 1;
    Ok(Word::from_letters(letters))
}

/// `γ^{-1}`: change the leftmost unpaired one to a two.
pub fn gamma_inverse(w: &Word) -> Result<Word> {
    let pairing = w.pairing()?;
    let pos = *pairing
        .unpaired_ones
        .first()
        .ok_or_else(|| Error::NoUnpairedOne(w.to_string()))?;
    let mut letters = w.letters().to_vec();
    letters[pos - 1] = 2;
    Ok(Word::from_letters(letters))
}

fn repeat(f: fn(&Word) -> Result<Word>, w: &Word, times: usize) -> Result<Word> {
    let mut cur = w.clone();
    for _ in 0..times {
        cur = f(&cur)?;
    }
    Ok(cur)
}

/// Splits `u = x 1 2^m 1` with `m >= 1`, returning `(x, m)`.
fn split_tail(u: &Word) -> Option<(Word, usize)> {
    let l = u.letters();
    if l.len() < 3 || l[l.len() - 1] != 1 {
        return None;
    }
    let body = &l[..l.len() - 1];
    let m = body.iter().rev().take_while(|&&a| a == 2).count();
    if m == 0 || m == body.len() || body[body.len() - m - 1] != 1 {
        return None;
    }
    Some((Word::from_letters(body[..body.len() - m - 1].to_vec()), m))
}

fn with_tail(x: &Word, m: usize) -> Word {
    x.concat(&Word::from_blocks(&[(1, 1), (2, m), (1, 1)]))
}

/// `γ̄(x 1 2^m 1) = γ(x) 1 2^{m+1} 1`.
pub fn gamma_bar(u: &Word) -> Result<Word> {
    let (x, m) = split_tail(u)
        .ok_or_else(|| Error::Domain(format!("{u} does not end in 12^m1 with m >= 1")))?;
    Ok(with_tail(&gamma(&x)?, m + 1))
}

/// `GK(x121) = γ^t(x) 1 2^{t+1} 1` where `t` counts unpaired twos of `x`;
/// `GK(ε) = ε`.
pub fn gk(v: &Word) -> Result<Word> {
    if v.is_empty() {
        return Ok(Word::empty());
    }
    let tail: Word = "121".parse().expect("literal");
    if !v.is_binary() || !v.ends_with(&tail) {
        return Err(Error::Domain(format!("{v} is not in W_121")));
    }
    let x = Word::from_letters(v.letters()[..v.len() - 3].to_vec());
    let t = x.pairing()?.unpaired_twos.len();
    Ok(with_tail(&repeat(gamma, &x, t)?, t + 1))
}

/// Inverse of [`gk`] on ballot words ending in `21`.
pub fn gk_inverse(w: &Word) -> Result<Word> {
    if w.is_empty() {
        return Ok(Word::empty());
    }
    if !w.is_binary() {
        return Err(Error::NotBinary(w.to_string()));
    }
    if !w.is_ballot() {
        return Err(Error::NotBallot(w.to_string()));
    }
    let (y, m) = split_tail(w)
        .ok_or_else(|| Error::Domain(format!("{w} is not in B_21")))?;
    let x = repeat(gamma_inverse, &y, m - 1)?;
    Ok(with_tail(&x, 1))
}

/// The Greene–Kleitman chains of `{1,2}^n`: starting from each word with
/// no unpaired one, apply `γ` until no unpaired two is left.
pub fn symmetric_chains(n: usize) -> Vec<Vec<Word>> {
    let mut chains = Vec::new();
    for w in crate::family::all_words(2, n) {
        let pairing = w.pairing().expect("binary");
        if !pairing.unpaired_ones.is_empty() {
            continue;
        }
        let mut chain = vec![w.clone()];
        for _ in 0..pairing.unpaired_twos.len() {
            let next = gamma(chain.last().unwrap()).expect("unpaired two remains");
            chain.push(next);
        }
        chains.push(chain);
    }
    chains
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn beta_on_sorted_word() {
        assert_eq!(beta(&w("111222")).unwrap(), (w("111"), w("111")));
        assert!(matches!(beta(&w("2112")), Err(Error::NotBallot(_))));
        assert!(beta(&w("112")).is_err());
    }

    #[test]
    fn o_and_t_small() {
        assert_eq!(o_map(&Composition::new(vec![3])).unwrap(), w("111"));
        assert_eq!(t_map(&Composition::new(vec![3])).unwrap(), w("111"));
        assert_eq!(o_map(&Composition::new(vec![1, 2])).unwrap(), w("121"));
        assert_eq!(t_map(&Composition::new(vec![2, 1])).unwrap(), w("121"));
        assert!(o_map(&Composition::new(vec![0, 1])).is_err());
        assert!(t_map(&Composition::new(vec![0, 1])).is_err());
        assert_eq!(o_inverse(&w("121")).unwrap(), Composition::new(vec![1, 2]));
        assert_eq!(t_inverse(&w("121")).unwrap(), Composition::new(vec![2, 1]));
    }

    #[test]
    fn kappa_worked_example() {
        assert_eq!(kappa(&p("(8,8,6,5,2,1)")).unwrap(), p("(8,7,6,5,2,1,1)"));
        assert!(kappa(&Partition::empty()).is_err());
        assert!(kappa(&p("(1,1)")).is_err());
    }

    #[test]
    fn csv_fixes_negative_rank_inputs() {
        let l = p("(2,2,2)");
        assert_eq!(l.ranks(), vec![-1, -1]);
        assert_eq!(csv(&l).unwrap(), l);
        assert_eq!(csv(&Partition::empty()).unwrap(), Partition::empty());
        assert!(csv(&p("(3,1)")).is_err());
    }

    #[test]
    fn gamma_and_gk_small() {
        assert_eq!(gamma(&w("2211")).unwrap(), w("2111"));
        assert!(matches!(gamma(&w("1122")), Err(Error::NoUnpairedTwo(_))));
        assert_eq!(gk(&w("121")).unwrap(), w("121"));
        assert_eq!(gk_inverse(&w("121")).unwrap(), w("121"));
        assert_eq!(gk(&w("")).unwrap(), w(""));
        assert!(gk(&w("1211")).is_err());
        assert!(gk_inverse(&w("2121")).is_err());
        // x = 2 has one unpaired two
        assert_eq!(gk(&w("2121")).unwrap(), w("11221"));
        assert_eq!(gk_inverse(&w("11221")).unwrap(), w("2121"));
        assert_eq!(gamma_bar(&w("2121")).unwrap(), w("11221"));
    }
}
