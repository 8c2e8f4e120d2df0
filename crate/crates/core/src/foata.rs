//! Foata's fundamental bijection `φ` on words, with `maj v = inv φ(v)`.
//!
//! `φ(a_1 ... a_n)` is built one letter at a time. To pass from `w_i` to
//! `w_{i+1}` with the next letter `a`, the current word is cut into factors
//! each ending at a letter on the same side of `a` as the last letter of
//! `w_i` (`<= a` or `> a`); every factor is rotated to bring its last letter
//! to the front, and `a` is appended.

use crate::error::Result;
use crate::word::{Letter, Word};

/// One row of the stage table: `w_i` and its factorization with respect to
/// the next input letter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub word: Word,
    /// Empty for the final stage.
    pub factors: Vec<Word>,
    pub next_letter: Option<Letter>,
}

/// Splits `w` into the factors used when inserting `a`.
fn factor_ranges(w: &[Letter], a: Letter) -> Vec<std::ops::Range<usize>> {
    let Some(&last) = w.last() else {
        return Vec::new();
    };
    let terminal = |x: Letter| if last <= a { x <= a } else { x > a };
    let mut ranges = Vec::new();
    let mut start = 0;
    for (i, &x) in w.iter().enumerate() {
        if terminal(x) {
            ranges.push(start..i + 1);
            start = i + 1;
        }
    }
    debug_assert_eq!(start, w.len());
    ranges
}

fn insert(w: &mut Vec<Letter>, a: Letter) {
    for r in factor_ranges(w, a) {
        w[r].rotate_right(1);
    }
    w.push(a);
}

/// Undoes [`insert`]: strips the last letter and rotates each block back.
fn extract(w: &mut Vec<Letter>) -> Option<Letter> {
    let a = w.pop()?;
    let Some(&first) = w.first() else {
        return Some(a);
    };
    let starts_block = |x: Letter| if first <= a { x <= a } else { x > a };
    let mut start = 0;
    for i in 1..=w.len() {
        if i == w.len() || starts_block(w[i]) {
            w[start..i].rotate_left(1);
            start = i;
        }
    }
    Some(a)
}

pub fn phi(v: &Word) -> Word {
    let mut w = Vec::with_capacity(v.len());
    for &a in v.letters() {
        insert(&mut w, a);
    }
    Word::from_letters(w)
}

/// The intermediate words `w_1, ..., w_n` with their factorizations.
pub fn phi_trace(v: &Word) -> Vec<Stage> {
    let letters = v.letters();
    let mut stages = Vec::with_capacity(letters.len());
    let mut w: Vec<Letter> = Vec::with_capacity(letters.len());
    for (i, &a) in letters.iter().enumerate() {
        insert(&mut w, a);
        let next_letter = letters.get(i + 1).copied();
        let factors = match next_letter {
            Some(b) => factor_ranges(&w, b)
                .into_iter()
                .map(|r| Word::from_letters(w[r].to_vec()))
                .collect(),
            None => Vec::new(),
        };
        stages.push(Stage {
            word: Word::from_letters(w.clone()),
            factors,
            next_letter,
        });
    }
    stages
}

/// Renders a trace as `w_i = word = f_1·f_2·… since a_{i+1}=x`.
pub fn render_trace(v: &Word, stages: &[Stage]) -> String {
    let mut lines = Vec::with_capacity(stages.len());
    for (i, st) in stages.iter().enumerate() {
        let idx = i + 1;
        let line = match st.next_letter {
            Some(a) => {
                let dotted = st
                    .factors
                    .iter()
                    .map(|f| f.to_string())
                    .collect::<Vec<_>>()
                    .join("·");
                format!("w_{idx} = {} = {dotted} since a_{}={a}", st.word, idx + 1)
            }
            None => format!("w_{idx} = {} = φ({v})", st.word),
        };
        lines.push(line);
    }
    lines.join("\n")
}

/// Inverse of [`phi`], peeling letters off the end and undoing the rotations.
pub fn phi_inverse(w: &Word) -> Word {
    let mut cur = w.letters().to_vec();
    let mut out = Vec::with_capacity(cur.len());
    while let Some(a) = extract(&mut cur) {
        out.push(a);
    }
    out.reverse();
    Word::from_letters(out)
}

/// `φ^{-1}` on `{1,2}*` through `φ^{-1}(1^m 2 u 1 2^n) = φ^{-1}(u) 2 1^{m+1} 2^n`.
pub fn phi_inverse_binary(w: &Word) -> Result<Word> {
    if !w.is_binary() {
        return Err(crate::error::Error::NotBinary(w.to_string()));
    }
    Ok(Word::from_letters(inverse_binary_rec(w.letters())))
}

fn inverse_binary_rec(w: &[Letter]) -> Vec<Letter> {
    let m = w.iter().take_while(|&&a| a == 1).count();
    let last_one = w.iter().rposition(|&a| a == 1);
    match last_one {
        // 1^m 2^n with no 2 before a 1 is fixed
        Some(p) if p > m => {
            let n = w.len() - 1 - p;
            let mut out = inverse_binary_rec(&w[m + 1..p]);
            out.push(2);
            out.extend(std::iter::repeat_n(1, m + 1));
            out.extend(std::iter::repeat_n(2, n));
            out
        }
        _ => w.to_vec(),
    }
}

/// `φ(v)` for binary `v` read off directly from its ones' and twos'
/// compositions `(m_0..m_d)`, `(n_0..n_d)`:
/// `1^{m_d-1} 2 ... 1^{m_1-1} 2 1^{m_0} 2^{n_0-1} 1 ... 2^{n_{d-1}-1} 1 2^{n_d}`.
pub fn phi_binary_closed_form(v: &Word) -> Result<Word> {
    let (ones, twos) = v.ones_twos_compositions()?;
    let m = ones.parts();
    let n = twos.parts();
    let d = m.len() - 1;
    if d == 0 {
        return Ok(v.clone());
    }
    let mut blocks: Vec<(Letter, usize)> = Vec::with_capacity(4 * d + 2);
    for i in (1..=d).rev() {
        blocks.push((1, m[i] - 1));
        blocks.push((2, 1));
    }
    blocks.push((1, m[0]));
    for &nj in &n[..d] {
        blocks.push((2, nj - 1));
        blocks.push((1, 1));
    }
    blocks.push((2, n[d]));
    Ok(Word::from_blocks(&blocks))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example() {
        assert_eq!(phi(&w("2121312")), w("2213112"));
        assert_eq!(phi_inverse(&w("2213112")), w("2121312"));
    }

    #[test]
    fn base_cases() {
        assert_eq!(phi(&w("")), w(""));
        for a in 1..=5 {
            let single = Word::power(a, 1);
            assert_eq!(phi(&single), single);
        }
        assert_eq!(phi_inverse(&w("")), w(""));
        assert_eq!(phi_inverse(&w("21")), w("21"));
        assert_eq!(phi_inverse_binary(&w("21")).unwrap(), w("21"));
    }

    #[test]
    fn worked_example_trace() {
        let stages = phi_trace(&w("2121312"));
        let rows: Vec<(String, String)> = stages
            .iter()
            .map(|s| {
                let dots = s.factors.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("·");
                (s.word.to_string(), dots)
            })
            .collect();
        let expected = [
            ("2", "2"),
            ("21", "2·1"),
            ("212", "2·12"),
            ("2211", "2·2·1·1"),
            ("22113", "2·2·113"),
            ("223111", "2·2·31·1·1"),
            ("2213112", ""),
        ];
        for (got, want) in rows.iter().zip(expected.iter()) {
            assert_eq!((got.0.as_str(), got.1.as_str()), *want);
        }
        assert_eq!(rows.len(), 7);
    }

    #[test]
    fn short_traces() {
        assert!(phi_trace(&w("")).is_empty());
        let st = phi_trace(&w("12"));
        let words: Vec<_> = st.iter().map(|s| s.word.to_string()).collect();
        assert_eq!(words, vec!["1", "12"]);
    }

    #[test]
    fn rendered_trace() {
        let v = w("2121312");
        let text = render_trace(&v, &phi_trace(&v));
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "w_1 = 2 = 2 since a_2=1");
        assert_eq!(lines[5], "w_6 = 223111 = 2·2·31·1·1 since a_7=2");
        assert_eq!(lines[6], "w_7 = 2213112 = φ(2121312)");
    }

    #[test]
    fn closed_form_small() {
        assert_eq!(phi_binary_closed_form(&w("1122")).unwrap(), w("1122"));
        assert_eq!(phi_binary_closed_form(&w("21")).unwrap(), w("21"));
        assert_eq!(phi_binary_closed_form(&w("")).unwrap(), w(""));
        assert!(phi_binary_closed_form(&w("13")).is_err());
    }
}
