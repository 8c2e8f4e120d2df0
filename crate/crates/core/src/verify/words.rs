//! Checks on Foata's map and single-word statistics.

use crate::error::Result;
use crate::family::{rearrangements, words_up_to, Family};
use crate::foata::{phi, phi_binary_closed_form, phi_inverse, phi_inverse_binary, phi_trace};
use crate::genfun::{distribution, inv_distribution, maj_distribution, q_factorial, Statistic};
use crate::partition::lambda;
use crate::poly::{LaurentPoly, Var};
use crate::word::{Letter, Word};

use super::{get, spec, CheckSpec, Checker, Params};

pub(super) fn checks() -> Vec<CheckSpec> {
    vec![
        spec!(
            "phi-worked-example",
            "φ(2121312) = 2213112 through the seven factored stages, and φ^{-1} undoes it",
            quick: &[],
            full: &[],
            worked_example
        ),
        spec!(
            "maj-inv-phi",
            "maj v = inv φ(v) and φ^{-1}(φ(v)) = v on {1,2,3}^{<=ternary_len} and {1,2}^{<=binary_len}",
            quick: &[("ternary_len", 7), ("binary_len", 10)],
            full: &[("ternary_len", 9), ("binary_len", 14)],
            maj_inv_phi
        ),
        spec!(
            "phi-binary",
            "on {1,2}* φ agrees with its block closed form and with the rules φ(w2)=φ(w)2, φ(w11)=1φ(w1), φ(w21)=2φ(w)1; the binary inverse recursion agrees with φ^{-1}",
            quick: &[("binary_len", 10)],
            full: &[("binary_len", 14)],
            phi_binary
        ),
        spec!(
            "maj-des-size-durfee",
            "for binary v with λ = λ(φ(v)): maj v = |λ| and des v = d(λ)",
            quick: &[("binary_len", 10)],
            full: &[("binary_len", 14)],
            maj_des
        ),
        spec!(
            "prime-map",
            "for binary y of length n: inv y' = inv y, des y' = des y, maj y' = n des y - maj y, y'' = y, λ(y') = λ(y)'",
            quick: &[("binary_len", 10)],
            full: &[("binary_len", 14)],
            prime_map
        ),
        spec!(
            "excess-pairs",
            "e(w) = n - p(w) on Π(1^n 2^n), and e(w) <= 0 exactly for ballot w",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            excess_pairs
        ),
        spec!(
            "excess-rank",
            "for binary v with λ = λ(φ(v)), d = d(λ) >= 1: e_i(v) = r_{d-i}(λ) + 1 for i < d, e(v) >= r(λ) + 1, with equality when e_d(v) < e(v)",
            quick: &[("binary_len", 10)],
            full: &[("binary_len", 14)],
            excess_rank
        ),
        spec!(
            "macmahon",
            "maj and inv are both distributed as [n]!/([a]![b]![c]!) over every rearrangement class 1^a 2^b 3^c with a+b+c <= size",
            quick: &[("size", 6)],
            full: &[("size", 8)],
            macmahon
        ),
        spec!(
            "sn-mahonian",
            "(S_n, S_n) is Mahonian with common distribution [n]!",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            sn_mahonian
        ),
        spec!(
            "exc-des",
            "exc and des are equidistributed over S_n",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            exc_des
        ),
        spec!(
            "pattern-pairs",
            "maj over Av_n(Π) equals inv over Av_n(Π') for Π among {132,213} {132,312} {213,231} {231,312} and Π' among {132,231} {132,312} {213,231} {213,312}",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            pattern_pairs
        ),
    ]
}

fn w(s: &str) -> Word {
    s.parse().expect("literal word")
}

fn worked_example(_: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let v = w("2121312");
    let expected = [
        ("2", "2"),
        ("21", "2·1"),
        ("212", "2·12"),
        ("2211", "2·2·1·1"),
        ("22113", "2·2·113"),
        ("223111", "2·2·31·1·1"),
        ("2213112", ""),
    ];
    let stages = phi_trace(&v);
    c.equal("number of stages", stages.len(), expected.len());
    for (i, (st, (word, dots))) in stages.iter().zip(expected).enumerate() {
        let got = st
            .factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join("·");
        c.equal(format!("stage {}", i + 1), (st.word.to_string(), got), (word.to_string(), dots.to_string()));
    }
    c.equal("φ(2121312)", phi(&v), w("2213112"));
    c.equal("φ^{-1}(2213112)", phi_inverse(&w("2213112")), v);
    Ok(c)
}

fn transport(c: &mut Checker, v: &Word) {
    let image = phi(v);
    c.ensure(v.maj() == image.inv(), || {
        format!("v = {v}: maj v = {} but inv φ(v) = {}", v.maj(), image.inv())
    });
    c.ensure(v.sorted() == image.sorted(), || format!("φ({v}) = {image} changes letters"));
    c.ensure(&phi_inverse(&image) == v, || format!("φ^{{-1}}(φ({v})) != {v}"));
}

fn maj_inv_phi(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for v in words_up_to(3, get(p, "ternary_len")) {
        transport(&mut c, &v);
    }
    for v in words_up_to(2, get(p, "binary_len")) {
        transport(&mut c, &v);
    }
    Ok(c)
}

/// `φ` on binary words from the recursive rules alone.
fn phi_by_rules(v: &[Letter]) -> Vec<Letter> {
    match v {
        [] => Vec::new(),
        [1] => vec![1],
        [rest @ .., 2] => {
            let mut out = phi_by_rules(rest);
            out.push(2);
            out
        }
        [rest @ .., 1, 1] => {
            let mut out = vec![1];
            out.extend(phi_by_rules(&v[..rest.len() + 1]));
            out
        }
        [rest @ .., 2, 1] => {
            let mut out = vec![2];
            out.extend(phi_by_rules(rest));
            out.push(1);
            out
        }
        _ => unreachable!("binary input"),
    }
}

fn phi_binary(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for v in words_up_to(2, get(p, "binary_len")) {
        let image = phi(&v);
        c.equal(format!("closed form at {v}"), phi_binary_closed_form(&v)?, image.clone());
        c.equal(
            format!("recursive rules at {v}"),
            Word::from_letters(phi_by_rules(v.letters())),
            image.clone(),
        );
        c.equal(format!("binary inverse at {image}"), phi_inverse_binary(&image)?, v.clone());
    }
    Ok(c)
}

fn maj_des(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for v in words_up_to(2, get(p, "binary_len")) {
        let la = lambda(&phi(&v))?.partition;
        c.equal(format!("maj vs |λ| at {v}"), v.maj(), la.size());
        c.equal(format!("des vs d(λ) at {v}"), v.des(), la.durfee());
    }
    Ok(c)
}

fn prime_map(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for y in words_up_to(2, get(p, "binary_len")) {
        let yp = y.prime()?;
        let n = y.len() as i64;
        c.equal(format!("inv at {y}"), yp.inv(), y.inv());
        c.equal(format!("des at {y}"), yp.des(), y.des());
        c.equal(
            format!("maj at {y}"),
            yp.maj() as i64,
            n * y.des() as i64 - y.maj() as i64,
        );
        c.equal(format!("involution at {y}"), yp.prime()?, y.clone());
        c.equal(
            format!("conjugate at {y}"),
            lambda(&yp)?.partition,
            lambda(&y)?.partition.conjugate(),
        );
    }
    Ok(c)
}

fn excess_pairs(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        for w in Family::balanced(n).enumerate()? {
            let prof = w.excess_profile()?;
            c.equal(format!("e(w) vs n - p(w) at {w}"), prof.max_excess, n as i64 - prof.pairs as i64);
            c.equal(format!("ballot vs e(w) <= 0 at {w}"), w.is_ballot(), prof.max_excess <= 0);
        }
    }
    Ok(c)
}

fn excess_rank(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for v in words_up_to(2, get(p, "binary_len")) {
        let la = lambda(&phi(&v))?.partition;
        let d = la.durfee();
        if d == 0 {
            continue;
        }
        let prof = v.excess_profile()?;
        let ranks = la.ranks();
        for i in 0..d {
            c.equal(format!("e_{i} vs r_{} + 1 at {v}", d - i), prof.excesses[i], ranks[d - i - 1] + 1);
        }
        let r = la.max_rank().expect("d >= 1");
        c.ensure(prof.max_excess > r, || format!("e({v}) = {} < r + 1 = {}", prof.max_excess, r + 1));
        if prof.excesses[d] < prof.max_excess {
            c.equal(format!("equality case at {v}"), prof.max_excess, r + 1);
        }
    }
    Ok(c)
}

/// `[a+b+c]! / ([a]![b]![c]!)`.
fn q_multinomial(parts: &[usize]) -> Result<LaurentPoly> {
    let den: LaurentPoly = parts.iter().map(|&k| q_factorial(k)).product();
    q_factorial(parts.iter().sum()).div_exact(&den)
}

fn macmahon(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let size = get(p, "size");
    for a in 0..=size {
        for b in 0..=size - a {
            for k in 0..=size - a - b {
                let w = Word::from_blocks(&[(1, a), (2, b), (3, k)]);
                let class = rearrangements(&w);
                let expected = q_multinomial(&[a, b, k])?;
                c.polys(format!("maj over Π({w})"), maj_distribution(&class), expected.clone());
                c.polys(format!("inv over Π({w})"), inv_distribution(&class), expected);
            }
        }
    }
    Ok(c)
}

fn sn_mahonian(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let s = Family::Permutations(n).enumerate()?;
        c.polys(format!("maj vs inv over S_{n}"), maj_distribution(&s), inv_distribution(&s));
        c.polys(format!("inv over S_{n} vs [n]!"), inv_distribution(&s), q_factorial(n));
    }
    Ok(c)
}

fn exc_des(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let s = Family::Permutations(n).enumerate()?;
        c.polys(
            format!("exc vs des over S_{n}"),
            distribution(&s, &[(Statistic::Exc, Var::T)])?,
            distribution(&s, &[(Statistic::Des, Var::T)])?,
        );
    }
    Ok(c)
}

fn pattern_pairs(p: &Params) -> Result<Checker> {
    let left = [["132", "213"], ["132", "312"], ["213", "231"], ["231", "312"]];
    let right = [["132", "231"], ["132", "312"], ["213", "231"], ["213", "312"]];
    let avoiders = |set: &[&str; 2], n: usize| {
        Family::Avoiding {
            n,
            patterns: set.iter().map(|s| w(s)).collect(),
        }
        .enumerate()
    };
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        for pi in &left {
            let s = maj_distribution(&avoiders(pi, n)?);
            for pj in &right {
                let t = inv_distribution(&avoiders(pj, n)?);
                c.polys(
                    format!("n = {n}, Π = {{{}}}, Π' = {{{}}}", pi.join(","), pj.join(",")),
                    s.clone(),
                    t,
                );
            }
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::all_words;

    #[test]
    fn rules_reproduce_small_images() {
        assert_eq!(Word::from_letters(phi_by_rules(w("121").letters())), w("211"));
        for v in all_words(2, 6) {
            assert_eq!(Word::from_letters(phi_by_rules(v.letters())), phi(&v));
        }
    }

    #[test]
    fn multinomial_oracle() {
        let m = q_multinomial(&[2, 2]).unwrap();
        assert_eq!(m.to_string(), "1 + q + 2*q^2 + q^3 + q^4");
    }
}
