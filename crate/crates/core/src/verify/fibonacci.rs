//! Checks on the word families counted by Fibonacci numbers.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::family::{all_words, Family};
use crate::foata::phi;
use crate::genfun::{
    carlitz_series, fib_poly, fib_poly_at_t1, fib_poly_closed_form, fib_poly_recursive,
    inv_distribution, maj_distribution,
};
use crate::partition::lambda;
use crate::poly::{LaurentPoly, Var};
use crate::word::Word;

use super::{get, spec, CheckSpec, Checker, Params};

pub(super) fn checks() -> Vec<CheckSpec> {
    vec![
        spec!(
            "fib-counts",
            "|F_n| = |G_n| = F_{n+1} and |H_n| = F_n with F_0 = F_1 = 1",
            quick: &[("n", 10)],
            full: &[("n", 14)],
            fib_counts
        ),
        spec!(
            "fib-poly",
            "f_n(q,t) by enumeration, by f_n = f_{n-1} + q^{n-1} t f_{n-2} from (1, 2), and by Σ_k q^{k(k-1)} t^{k-1}([n-k; k-1] + q^k t [n-k; k]) all agree; f_n(q,1) = Σ_k q^{k(k-1)} [n-k+1; k]",
            quick: &[("n", 9)],
            full: &[("n", 12)],
            fib_poly_check
        ),
        spec!(
            "phi-Fnk",
            "φ(F_{n,k}) = {w in Π(1^k 2^{n-k}) : λ(w) = (λ_1..λ_k) with λ_1 <= n-k and λ_k >= k-1}",
            quick: &[("n", 9)],
            full: &[("n", 12)],
            phi_fnk
        ),
        spec!(
            "phi-inv-Fn",
            "φ^{-1}(F_n) is the set of v in {1,2}^n whose prefix 1-run has length <= 1, suffix 1-run length <= 2, other 1-runs length <= 2 and other 2-runs length >= 2",
            quick: &[("n", 9)],
            full: &[("n", 12)],
            phi_inv_fn
        ),
        CheckSpec {
            empirical: true,
            ..spec!(
                "Gn-empirical",
                "φ^{-1}(G_n) is the set of v = 1^{m_0} 2^{n_0} ... 1^{m_d} 2^{n_d} in {1,2}^n with m_i >= 2 for 0 < i < d, n_j <= 2 for j < d, n_d <= 1, and n_0 <= 1 when m_0 = 0",
                quick: &[("n", 9)],
                full: &[("n", 12)],
                gn_empirical
            )
        },
        spec!(
            "Hn-mahonian",
            "φ(H_n) = H_n, so maj and inv have the same distribution over H_n",
            quick: &[("n", 10)],
            full: &[("n", 14)],
            hn_mahonian
        ),
        spec!(
            "carlitz-series",
            "for j <= max_j and n >= max(2j, 1) the coefficient of q^j in f_n(q,1) equals that of Σ_k q^{k^2-k}/(q)_k",
            quick: &[("max_j", 10)],
            full: &[("max_j", 15)],
            carlitz
        ),
    ]
}

fn fibonacci(n: usize) -> u64 {
    let (mut a, mut b) = (1u64, 1u64);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn fib_counts(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let f = Family::NoAdjacentOnes(n).enumerate()?.len() as u64;
        let g = Family::NoAdjacentTwos(n).enumerate()?.len() as u64;
        let h = Family::LetterSum(n).enumerate()?.len() as u64;
        c.equal(format!("|F_{n}|"), f, fibonacci(n + 1));
        c.equal(format!("|G_{n}|"), g, fibonacci(n + 1));
        c.equal(format!("|H_{n}|"), h, fibonacci(n));
    }
    Ok(c)
}

fn fib_poly_check(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let f = fib_poly(n);
        c.polys(format!("recursion at n = {n}"), fib_poly_recursive(n), f.clone());
        c.polys(format!("closed form at n = {n}"), fib_poly_closed_form(n), f.clone());
        let at1 = f.substitute(&[(Var::T, LaurentPoly::one())])?;
        c.polys(format!("t = 1 at n = {n}"), fib_poly_at_t1(n), at1.clone());
        c.equal(
            format!("f_{n}(1,1)"),
            at1.coefficient_sum(),
            fibonacci(n + 1).into(),
        );
    }
    Ok(c)
}

fn phi_fnk(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        for k in 0..=n {
            let image: BTreeSet<Word> = Family::NoAdjacentOnesWithOnes { len: n, ones: k }
                .enumerate()?
                .iter()
                .map(phi)
                .collect();
            let mut target = BTreeSet::new();
            for w in Family::Rearrangements(Word::from_blocks(&[(1, k), (2, n - k)])).enumerate()? {
                let la = lambda(&w)?.partition;
                // λ as a k-tuple, padded with zero parts
                let last = if k == 0 { usize::MAX } else { la.parts().get(k - 1).copied().unwrap_or(0) };
                if la.largest() <= n - k && (k == 0 || last + 1 >= k) {
                    target.insert(w);
                }
            }
            c.same_sets(format!("n = {n}, k = {k}"), &image, &target);
        }
    }
    Ok(c)
}

fn run_conditions(v: &Word) -> bool {
    v.runs().iter().all(|r| match (r.value, r.is_prefix, r.is_suffix) {
        (1, true, _) => r.len <= 1,
        (1, false, _) => r.len <= 2,
        (_, false, false) => r.len >= 2,
        _ => true,
    })
}

fn preimage_set(n: usize, keep: impl Fn(&Word) -> bool) -> BTreeSet<Word> {
    all_words(2, n).into_iter().filter(|v| keep(&phi(v))).collect()
}

fn phi_inv_fn(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let no_11 = |w: &Word| !w.letters().windows(2).any(|x| x == [1, 1]);
        let target: BTreeSet<Word> = all_words(2, n).into_iter().filter(run_conditions).collect();
        c.same_sets(format!("n = {n}"), &preimage_set(n, no_11), &target);
    }
    Ok(c)
}

fn g_conditions(v: &Word) -> Result<bool> {
    let (om, tau) = v.ones_twos_compositions()?;
    let (m, nn) = (om.parts(), tau.parts());
    let d = m.len() - 1;
    if d == 0 {
        return Ok(nn[0] <= 1);
    }
    let ok = (1..d).all(|i| m[i] >= 2)
        && (0..d).all(|j| nn[j] <= 2)
        && nn[d] <= 1
        && (m[0] > 0 || nn[0] <= 1);
    Ok(ok)
}

fn gn_empirical(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let no_22 = |w: &Word| !w.letters().windows(2).any(|x| x == [2, 2]);
        let mut target = BTreeSet::new();
        for v in all_words(2, n) {
            if g_conditions(&v)? {
                target.insert(v);
            }
        }
        c.same_sets(format!("n = {n}"), &preimage_set(n, no_22), &target);
    }
    Ok(c)
}

fn hn_mahonian(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let h = Family::LetterSum(n).enumerate()?;
        let set: BTreeSet<Word> = h.iter().cloned().collect();
        let image: BTreeSet<Word> = h.iter().map(phi).collect();
        c.same_sets(format!("φ(H_{n})"), &image, &set);
        c.polys(format!("n = {n}"), maj_distribution(&h), inv_distribution(&h));
    }
    Ok(c)
}

fn carlitz(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let max_j = get(p, "max_j");
    let series = carlitz_series(max_j);
    let top = (2 * max_j).max(1) + 2;
    for n in 1..=top {
        let f = fib_poly_at_t1(n);
        for j in 0..=max_j {
            if n >= (2 * j).max(1) {
                c.equal(
                    format!("coefficient of q^{j} in f_{n}(q,1)"),
                    f.coeff_q(j as i32),
                    series.coeff_q(j as i32),
                );
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_numbers() {
        let v: Vec<u64> = (0..7).map(fibonacci).collect();
        assert_eq!(v, vec![1, 1, 2, 3, 5, 8, 13]);
    }

    #[test]
    fn run_condition_examples() {
        let ok = |s: &str| run_conditions(&s.parse().unwrap());
        assert!(ok("211"));
        assert!(ok("12"));
        assert!(!ok("121"));
        assert!(!ok("11"));
        assert!(ok("1"));
        assert!(ok(""));
    }
}
