//! Checks on ballot sequences, the Catalan polynomials and negative-rank
//! partitions.

use std::collections::BTreeSet;

use crate::bijections::{beta, o_inverse, o_map, ones_set, t_inverse, t_map, twos_set};
use crate::error::Result;
use crate::family::{rearrangements, Family};
use crate::foata::{phi, phi_inverse};
use crate::genfun::{
    catalan_delta_qt, catalan_qt, catalan_triangle_q, catalan_triangle_qt, inv_distribution,
    maj_distribution, q_binomial, q_catalan,
};
use crate::partition::{lambda, PartitionSet};
use crate::poly::{exponents, LaurentPoly, Var};
use crate::word::Word;

use super::{get, spec, CheckSpec, Checker, Params};

pub(super) fn checks() -> Vec<CheckSpec> {
    vec![
        spec!(
            "phi-Bn",
            "φ(B_n) = {w in Π(1^n 2^n) : λ(w) in R_n} as sets",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            phi_bn
        ),
        spec!(
            "phi-inv-Bn",
            "φ(v) in B_n iff the tail sums of ω(v) are >= 2i, those of τ(v) are >= 2i-1, and both compositions sum to n",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            phi_inv_bn
        ),
        spec!(
            "Rn-catalan-qt",
            "Σ_{λ in R_n} q^{|λ|} t^{d(λ)} = c_n(q,t), and at t = 1 this is [2n choose n]/[n+1]",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            rn_catalan
        ),
        spec!(
            "catalan-q1",
            "c_n(q,1) = [2n choose n]/[n+1]",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            catalan_q1
        ),
        spec!(
            "q-catalan-squares",
            "C_n(q) = Σ_d q^{d^2} C_{n,d}(q)^2",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            q_catalan_squares
        ),
        spec!(
            "four-term-cnqt",
            "c_n(q,t) = Σ_{d <= n/2} [q^n t c c* + c δ* + δ c* + δ δ*] with c = c_{n-1,d-1}, δ = δ_{n,d} and * the substitution q -> 1/q, t -> q^{2n} t",
            quick: &[("n", 4)],
            full: &[("n", 5)],
            four_term
        ),
        spec!(
            "catalan-triangle",
            "o: O_{n,d} -> B_{n-d,d} and t: T_{n,d} -> B_{n-d,d} are bijections and |B_{n-d,d}| = binom(n,d) - binom(n,d-1)",
            quick: &[("n", 6)],
            full: &[("n", 8)],
            catalan_triangle
        ),
        spec!(
            "catalan-squares",
            "Σ_d C_{n,d}^2 = binom(2n,n)/(n+1)",
            quick: &[("n", 7)],
            full: &[("n", 10)],
            catalan_squares
        ),
        spec!(
            "beta-composition",
            "β = (o×t)∘(ω×τ)∘φ^{-1} on B_n; β is a bijection onto ⊎_d B_{n-d,d}^2; ω×τ maps φ^{-1}(B_n) onto ⊎_d O_{n,d}×T_{n,d}; inv w = inv x + inv y' + d^2",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            beta_composition
        ),
        spec!(
            "Bkl-extension",
            "for k >= l: φ(B_{k,l}) = {w in Π(1^k 2^l) : λ(w) in R_{k,l}}",
            quick: &[("max_len", 9)],
            full: &[("max_len", 12)],
            bkl_extension
        ),
        spec!(
            "Rkl-conditions",
            "for k >= l: φ(v) in B_{k,l} iff the tail sums of ω(v) are >= 2i, those of τ(v) plus k-l are >= 2i-1, Σω = k and Στ = l",
            quick: &[("max_len", 9)],
            full: &[("max_len", 12)],
            rkl_conditions
        ),
        spec!(
            "Enk-Pnk",
            "for k > 0: φ(E_{n,k}) = P_{n,k-1}, so (E_{n,k}, P_{n,k-1}) is Mahonian",
            quick: &[("n", 5)],
            full: &[("n", 7)],
            enk_pnk
        ),
    ]
}

fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k as u128).fold(1u128, |acc, i| acc * (n as u128 - i) / (i + 1))
}

fn word_set(words: impl IntoIterator<Item = Word>) -> BTreeSet<Word> {
    words.into_iter().collect()
}

fn negative_rank_words(k: usize, l: usize) -> Result<BTreeSet<Word>> {
    let set = PartitionSet::NegativeRanksInBox { rows: k, cols: l };
    let mut out = BTreeSet::new();
    for w in rearrangements(&Word::from_blocks(&[(1, k), (2, l)])) {
        if set.contains(&lambda(&w)?.partition) {
            out.insert(w);
        }
    }
    Ok(out)
}

fn ballot_words(k: usize, l: usize) -> Result<Vec<Word>> {
    Family::Ballot { ones: k, twos: l }.enumerate()
}

fn phi_bn(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let image = word_set(ballot_words(n, n)?.iter().map(phi));
        c.same_sets(format!("n = {n}"), &image, &negative_rank_words(n, n)?);
    }
    Ok(c)
}

/// The composition conditions for `φ(v) in B_{k,l}`.
fn preimage_conditions(v: &Word, k: usize, l: usize) -> Result<bool> {
    let (om, tau) = v.ones_twos_compositions()?;
    let (m, n) = (om.parts(), tau.parts());
    let d = m.len() - 1;
    let shift = k as i64 - l as i64;
    let (mut sm, mut sn) = (0i64, 0i64);
    for i in 1..=d {
        sm += m[d - i + 1] as i64;
        sn += n[d - i + 1] as i64;
        if sm < 2 * i as i64 || sn + shift < 2 * i as i64 - 1 {
            return Ok(false);
        }
    }
    Ok(om.total() == k && tau.total() == l)
}

fn conditions_match(c: &mut Checker, k: usize, l: usize) -> Result<()> {
    for v in rearrangements(&Word::from_blocks(&[(1, k), (2, l)])) {
        let lhs = phi(&v).is_ballot();
        let rhs = preimage_conditions(&v, k, l)?;
        c.ensure(lhs == rhs, || {
            format!("v = {v}: φ(v) ballot is {lhs} but the conditions give {rhs}")
        });
    }
    Ok(())
}

fn phi_inv_bn(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        conditions_match(&mut c, n, n)?;
    }
    Ok(c)
}

fn rn_distribution(n: usize) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for la in PartitionSet::negative_ranks_square(n).enumerate(n * n) {
        out += &LaurentPoly::monomial(1, exponents(la.size() as i32, la.durfee() as i32, 0, 0));
    }
    out
}

fn catalan_quotient(n: usize) -> Result<LaurentPoly> {
    q_binomial(2 * n as i64, n as i64).div_exact(&LaurentPoly::q_integer(n + 1))
}

fn at_t_one(p: &LaurentPoly) -> Result<LaurentPoly> {
    p.substitute(&[(Var::T, LaurentPoly::one())])
}

fn rn_catalan(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let r = rn_distribution(n);
        c.polys(format!("R_{n} vs c_{n}(q,t)"), r.clone(), catalan_qt(n));
        c.polys(format!("R_{n} at t = 1"), at_t_one(&r)?, catalan_quotient(n)?);
    }
    Ok(c)
}

fn catalan_q1(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        c.polys(format!("n = {n}"), at_t_one(&catalan_qt(n))?, catalan_quotient(n)?);
    }
    Ok(c)
}

fn q_catalan_squares(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let mut rhs = LaurentPoly::zero();
        for d in 0..=n {
            let cnd = catalan_triangle_q(n as i64, d as i64);
            let sq = (d * d) as i32;
            rhs += &(&cnd * &cnd).shift(exponents(sq, 0, 0, 0));
        }
        c.polys(format!("n = {n}"), q_catalan(n), rhs);
    }
    Ok(c)
}

fn four_term(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 1..=get(p, "n") {
        let ni = n as i64;
        let star = |x: &LaurentPoly| {
            x.substitute(&[
                (Var::Q, LaurentPoly::var_pow(Var::Q, -1)),
                (Var::T, LaurentPoly::monomial(1, exponents(2 * n as i32, 1, 0, 0))),
            ])
        };
        let mut rhs = LaurentPoly::zero();
        for d in 0..=ni / 2 {
            let cc = catalan_triangle_qt(ni - 1, d - 1);
            let dd = catalan_delta_qt(ni, d);
            let (cs, ds) = (star(&cc)?, star(&dd)?);
            rhs += &(&cc * &cs).shift(exponents(n as i32, 1, 0, 0));
            rhs += &(&cc * &ds);
            rhs += &(&dd * &cs);
            rhs += &(&dd * &ds);
        }
        c.polys(format!("n = {n}"), catalan_qt(n), rhs);
    }
    Ok(c)
}

fn catalan_triangle(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        for d in 0..=n / 2 {
            let target = word_set(ballot_words(n - d, d)?);
            let expected = binomial(n as i64, d as i64) - binomial(n as i64, d as i64 - 1);
            c.equal(format!("|B_{{{},{d}}}|", n - d), target.len() as u128, expected);
            let os = ones_set(n, d);
            let ts = twos_set(n, d);
            let o_image = word_set(os.iter().map(o_map).collect::<Result<Vec<_>>>()?);
            let t_image = word_set(ts.iter().map(t_map).collect::<Result<Vec<_>>>()?);
            c.equal(format!("|O_{{{n},{d}}}|"), os.len(), target.len());
            c.equal(format!("|T_{{{n},{d}}}|"), ts.len(), target.len());
            c.same_sets(format!("o(O_{{{n},{d}}})"), &o_image, &target);
            c.same_sets(format!("t(T_{{{n},{d}}})"), &t_image, &target);
            for om in &os {
                c.equal(format!("o^{{-1}} o at {om}"), &o_inverse(&o_map(om)?)?, om);
            }
            for tau in &ts {
                c.equal(format!("t^{{-1}} t at {tau}"), &t_inverse(&t_map(tau)?)?, tau);
            }
        }
    }
    Ok(c)
}

fn catalan_squares(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let sum: u128 = (0..=n)
            .map(|d| {
                let k = if d <= n - d { ballot_words(n - d, d).map(|v| v.len()) } else { Ok(0) };
                k.map(|k| (k * k) as u128)
            })
            .sum::<Result<u128>>()?;
        let catalan = binomial(2 * n as i64, n as i64) / (n as u128 + 1);
        c.equal(format!("n = {n}"), sum, catalan);
    }
    Ok(c)
}

fn beta_composition(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let words = ballot_words(n, n)?;
        let mut images = BTreeSet::new();
        let mut pairs = BTreeSet::new();
        for w in &words {
            let (x, y) = beta(w)?;
            let v = phi_inverse(w);
            let (om, tau) = v.ones_twos_compositions()?;
            let via = (o_map(&om)?, t_map(&tau)?);
            c.equal(format!("β vs (o×t)(ω×τ)φ^{{-1}} at {w}"), (x.clone(), y.clone()), via);
            let d = x.count(2);
            c.equal(format!("inv split at {w}"), w.inv(), x.inv() + y.inv() + d * d);
            images.insert(format!("({x},{y})"));
            pairs.insert(format!("({om},{tau})"));
        }
        let mut target = BTreeSet::new();
        let mut comp_target = BTreeSet::new();
        for d in 0..=n / 2 {
            let b = ballot_words(n - d, d)?;
            for x in &b {
                for y in &b {
                    target.insert(format!("({x},{y})"));
                }
            }
            for om in ones_set(n, d) {
                for tau in twos_set(n, d) {
                    comp_target.insert(format!("({om},{tau})"));
                }
            }
        }
        c.equal(format!("β injective on B_{n}"), images.len(), words.len());
        c.same_sets(format!("β(B_{n})"), &images, &target);
        c.same_sets(format!("(ω×τ)(φ^{{-1}}(B_{n}))"), &pairs, &comp_target);
    }
    Ok(c)
}

fn box_shapes(max_len: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for total in 0..=max_len {
        for l in 0..=total / 2 {
            out.push((total - l, l));
        }
    }
    out
}

fn bkl_extension(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for (k, l) in box_shapes(get(p, "max_len")) {
        let image = word_set(ballot_words(k, l)?.iter().map(phi));
        c.same_sets(format!("k = {k}, l = {l}"), &image, &negative_rank_words(k, l)?);
    }
    Ok(c)
}

fn rkl_conditions(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for (k, l) in box_shapes(get(p, "max_len")) {
        conditions_match(&mut c, k, l)?;
    }
    Ok(c)
}

fn enk_pnk(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 1..=get(p, "n") {
        for k in 1..=n as i64 {
            let e = Family::MaxExcess { n, k }.enumerate()?;
            let pk = Family::MaxRank { n, k: k - 1 }.enumerate()?;
            let label = format!("n = {n}, k = {k}");
            c.same_sets(&label, &word_set(e.iter().map(phi)), &word_set(pk.clone()));
            c.polys(&label, maj_distribution(&e), inv_distribution(&pk));
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(4, -1), 0);
        assert_eq!(binomial(20, 10), 184756);
    }

    #[test]
    fn conditions_on_small_words() {
        // φ(2112) = 1212 while φ(1212) = 2112
        assert!(preimage_conditions(&"2112".parse().unwrap(), 2, 2).unwrap());
        assert!(preimage_conditions(&"1122".parse().unwrap(), 2, 2).unwrap());
        assert!(!preimage_conditions(&"1212".parse().unwrap(), 2, 2).unwrap());
    }

    #[test]
    fn box_shape_listing() {
        assert_eq!(box_shapes(2), vec![(0, 0), (1, 0), (2, 0), (1, 1)]);
    }

    #[test]
    fn composition_sets_match_catalan_triangle() {
        assert_eq!(ones_set(4, 2).len(), 2);
        assert_eq!(twos_set(4, 2).len(), 2);
        assert!(ones_set(3, 2).is_empty());
    }
}
