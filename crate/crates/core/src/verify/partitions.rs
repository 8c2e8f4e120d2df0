//! Checks on infinite pairs, rank identities, CSV and Greene–Kleitman.

use std::collections::BTreeSet;

use crate::bijections::{csv, csv_trace, gamma, gamma_bar, gk, gk_inverse, kappa, symmetric_chains};
use crate::error::Result;
use crate::family::{all_words, Family};
use crate::foata::{phi, phi_inverse};
use crate::genfun::{distribution, maj_distribution, truncated_product, Statistic};
use crate::partition::{partitions_bounded, partitions_in_box, partitions_of, Partition, PartitionSet};
use crate::poly::{exponents, LaurentPoly, Var};
use crate::word::{Letter, Word};

use super::{get, spec, CheckSpec, Checker, Params};

pub(super) fn checks() -> Vec<CheckSpec> {
    vec![
        spec!(
            "infinite-pairs",
            "φ^{-1}(P) = W_21, φ^{-1}(R_{>=1}') = B_21, φ^{-1}(P_{≠1}') = W_121 on words of length <= max_len, and Σ_S q^{maj} t^{des} z^{e} = Σ_T q^{|λ|} t^{d(λ)} z^{r(λ)+1} on each slice",
            quick: &[("max_len", 11)],
            full: &[("max_len", 14)],
            infinite_pairs
        ),
        spec!(
            "infinite-pairs-product",
            "Σ_{B_21} q^{maj} = Σ_{W_121} q^{maj} = Π_{i>=2} 1/(1-q^i) modulo q^{degree+1}",
            quick: &[("degree", 12)],
            full: &[("degree", 20)],
            infinite_product
        ),
        spec!(
            "rank-vs-no-ones",
            "Σ_{R_{>=1}} q^{|λ|} = Σ_{P_{≠1}} q^{|λ|} modulo q^{degree+1}",
            quick: &[("degree", 12)],
            full: &[("degree", 20)],
            rank_vs_no_ones
        ),
        spec!(
            "p-neq1-product",
            "Σ_{P_{≠1}} q^{|λ|} = Π_{i>=2} 1/(1-q^i) modulo q^{degree+1}",
            quick: &[("degree", 12)],
            full: &[("degree", 20)],
            p_neq1
        ),
        spec!(
            "rank-interval-vs-residues",
            "for 0 < r < M/2 with M <= max_modulus: partitions with every rank in [2-r, M-r-2] and partitions with no part ≡ 0, ±r mod M are equinumerous by size, and both match Π 1/(1-q^i) over allowed parts, modulo q^{degree+1}",
            quick: &[("degree", 12), ("max_modulus", 7)],
            full: &[("degree", 20), ("max_modulus", 9)],
            rank_interval_vs_residues
        ),
        spec!(
            "rank-interval-base-case",
            "with M = n+2 and r = 1 the two partition sets of n are R_{>=1} and P_{≠1}",
            quick: &[("n", 12)],
            full: &[("n", 20)],
            rank_interval_base_case
        ),
        spec!(
            "csv-worked-example",
            "the CSV run from (8,8,6,5,2,1) passes through the five tabulated stages (ρ, r, i, w, v, ε) and ends at (8,4,3,3,3,3,2,2,1,1)",
            quick: &[],
            full: &[],
            csv_worked_example
        ),
        spec!(
            "kappa-orbits",
            "along CSV runs from D_0: κ keeps |λ|, r drops by exactly one while r > 0 and by at least one at r = 0, and κ = φ∘γ̄∘φ^{-1} at every step",
            quick: &[("max_size", 14)],
            full: &[("max_size", 22)],
            kappa_orbits
        ),
        spec!(
            "csv-size-classes",
            "CSV maps the partitions of n in D_0 bijectively onto those in R_{<=-1}",
            quick: &[("max_size", 16)],
            full: &[("max_size", 25)],
            csv_size_classes
        ),
        spec!(
            "csv-gk-conjugacy",
            "CSV = φ∘GK∘φ^{-1} on D_0, and for r(λ) >= 0 the word φ^{-1}(w(λ)) has r(λ)+1 unpaired twos",
            quick: &[("max_size", 14)],
            full: &[("max_size", 22)],
            csv_gk
        ),
        spec!(
            "gk-bijective",
            "gk_inverse∘GK and GK∘gk_inverse are identities on W_121 and B_21 up to max_len, and GK maps the maj <= degree part of W_121 onto that of B_21 preserving maj",
            quick: &[("max_len", 11), ("degree", 12)],
            full: &[("max_len", 14), ("degree", 18)],
            gk_bijective
        ),
        spec!(
            "gk-symmetric-chains",
            "the γ-chains partition {1,2}^n, keep the pairs fixed, and run from j ones to n-j ones",
            quick: &[("n", 8)],
            full: &[("n", 12)],
            gk_chains
        ),
    ]
}

fn boundary(la: &Partition) -> Result<Word> {
    if la.is_empty() {
        Ok(Word::empty())
    } else {
        la.boundary_word()
    }
}

fn partition_of(w: &Word) -> Result<Partition> {
    Partition::from_boundary_word(w)
}

/// Partitions whose boundary word has length at most `max_len`.
fn boundary_slice(max_len: usize) -> Vec<Partition> {
    let mut out = vec![Partition::empty()];
    for a in 1..max_len {
        for rest in partitions_in_box(max_len - a - 1, a) {
            let mut parts = vec![a];
            parts.extend_from_slice(rest.parts());
            out.push(Partition::from_parts(parts));
        }
    }
    out
}

/// Every binary word of length `<= max_len` with `maj <= max_maj`, found
/// by pruning prefixes whose descents already exceed the bound.
fn binary_words_with_maj_at_most(max_len: usize, max_maj: usize) -> Vec<Word> {
    fn go(cur: &mut Vec<Letter>, maj: usize, max_len: usize, max_maj: usize, out: &mut Vec<Word>) {
        out.push(Word::from_letters(cur.clone()));
        if cur.len() == max_len {
            return;
        }
        for a in [1, 2] {
            let add = if a == 1 && cur.last() == Some(&2) { cur.len() } else { 0 };
            if maj + add <= max_maj {
                cur.push(a);
                go(cur, maj + add, max_len, max_maj, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, max_len, max_maj, &mut out);
    out
}

fn triple(la: &Partition) -> LaurentPoly {
    let z = la.max_rank().map_or(0, |r| r + 1);
    LaurentPoly::monomial(1, exponents(la.size() as i32, la.durfee() as i32, z as i32, 0))
}

/// Membership test for the partition side of a pair.
type Membership = Box<dyn Fn(&Partition) -> bool>;

fn infinite_pairs(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let max_len = get(p, "max_len");
    let slice = boundary_slice(max_len);
    let w = |s: &str| s.parse::<Word>().expect("literal");
    let pairs: [(&str, Family, Membership); 3] = [
        (
            "(W_21, P)",
            Family::Suffix { suffix: w("21"), max_len: Some(max_len) },
            Box::new(|_| true),
        ),
        (
            "(B_21, R_{>=1}')",
            Family::BallotSuffix { suffix: w("21"), max_len: Some(max_len) },
            Box::new(|la| PartitionSet::RanksAtLeast(1).contains(&la.conjugate())),
        ),
        (
            "(W_121, P_{≠1}')",
            Family::Suffix { suffix: w("121"), max_len: Some(max_len) },
            Box::new(|la| !la.conjugate().contains_part(1)),
        ),
    ];
    for (label, family, member) in pairs {
        let s = family.enumerate()?;
        let t: Vec<&Partition> = slice.iter().filter(|la| member(la)).collect();
        let image = s
            .iter()
            .map(|v| partition_of(&phi(v)))
            .collect::<Result<BTreeSet<_>>>()?;
        let target: BTreeSet<Partition> = t.iter().map(|&la| la.clone()).collect();
        c.same_sets(format!("{label} image"), &image, &target);
        let lhs = distribution(
            &s,
            &[(Statistic::Maj, Var::Q), (Statistic::Des, Var::T), (Statistic::MaxExcess, Var::Z)],
        )?;
        let rhs: LaurentPoly = t.iter().map(|la| triple(la)).sum();
        c.polys(format!("{label} triple statistic"), lhs, rhs);
    }
    Ok(c)
}

fn not_one(i: usize) -> bool {
    i != 1
}

fn infinite_product(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let degree = get(p, "degree");
    let product = truncated_product(not_one, degree);
    let words = binary_words_with_maj_at_most(degree + 1, degree);
    let tail21: Word = "21".parse()?;
    let tail121: Word = "121".parse()?;
    let b21: Vec<&Word> = words
        .iter()
        .filter(|v| v.is_empty() || (v.ends_with(&tail21) && v.is_ballot()))
        .collect();
    let w121: Vec<&Word> = words
        .iter()
        .filter(|v| v.is_empty() || v.ends_with(&tail121))
        .collect();
    c.polys("B_21", maj_distribution(b21), product.clone());
    c.polys("W_121", maj_distribution(w121), product);
    Ok(c)
}

fn size_series(parts: &[Partition]) -> LaurentPoly {
    LaurentPoly::from_counts(parts.iter().map(|la| (exponents(la.size() as i32, 0, 0, 0), 1)))
}

fn rank_vs_no_ones(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let degree = get(p, "degree");
    c.polys(
        "R_{>=1} vs P_{≠1}",
        size_series(&PartitionSet::RanksAtLeast(1).enumerate(degree)),
        size_series(&PartitionSet::NoPartEqual(1).enumerate(degree)),
    );
    Ok(c)
}

fn p_neq1(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let degree = get(p, "degree");
    c.polys(
        "P_{≠1} vs product",
        size_series(&PartitionSet::NoPartEqual(1).enumerate(degree)),
        truncated_product(not_one, degree),
    );
    Ok(c)
}

fn rank_interval_vs_residues(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let degree = get(p, "degree");
    let all = partitions_bounded(degree, degree, degree);
    for m in 3..=get(p, "max_modulus") {
        for r in (1..).take_while(|&r| 2 * r < m) {
            let (lo, hi) = (2 - r as i64, m as i64 - r as i64 - 2);
            let ranks: Vec<Partition> = all
                .iter()
                .filter(|la| PartitionSet::RanksInInterval(lo, hi).contains(la))
                .cloned()
                .collect();
            let residue_set = PartitionSet::rogers_ramanujan_type(m, r);
            let residues: Vec<Partition> =
                all.iter().filter(|la| residue_set.contains(la)).cloned().collect();
            let allowed = |i: usize| !i.is_multiple_of(m) && i % m != r && i % m != m - r;
            let label = format!("M = {m}, r = {r}");
            c.polys(&label, size_series(&ranks), size_series(&residues));
            c.polys(&label, size_series(&residues), truncated_product(allowed, degree));
        }
    }
    Ok(c)
}

fn rank_interval_base_case(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 1..=get(p, "n") {
        let parts = partitions_of(n);
        let pick = |set: PartitionSet| -> BTreeSet<Partition> {
            parts.iter().filter(|la| set.contains(la)).cloned().collect()
        };
        let (m, r) = (n + 2, 1);
        let ranks = pick(PartitionSet::RanksInInterval(2 - r as i64, (m - r - 2) as i64));
        let residues = pick(PartitionSet::rogers_ramanujan_type(m, r));
        c.same_sets(format!("rank side, n = {n}"), &ranks, &pick(PartitionSet::RanksAtLeast(1)));
        c.same_sets(format!("part side, n = {n}"), &residues, &pick(PartitionSet::NoPartEqual(1)));
    }
    Ok(c)
}

/// `(ρ, r, i, w, v, ε)` for one stage.
type CsvRow<'a> = (&'a [i64], i64, usize, &'a str, &'a str, &'a [i64]);

fn csv_worked_example(_: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let table: [CsvRow; 5] = [
        (&[2, 3, 2, 1], 3, 2, "21212221212211", "22122112221121", &[2, 3, 4, 3, 2]),
        (&[1, 2, 2, 1], 2, 3, "211212221212121", "221221122111221", &[2, 3, 3, 2, 1]),
        (&[0, 0, 1, 1], 1, 4, "2112112221121221", "2212111221112221", &[2, 2, 1, 1, 0]),
        (&[-1, -2, -1, 0], 0, 4, "21121121211212221", "21121112211122221", &[1, 0, -1, 0, -1]),
        (&[-2, -4, -3], -2, 1, "211211211112122221", "111211122111222221", &[-2, -3, -1, -2]),
    ];
    let start: Partition = "(8,8,6,5,2,1)".parse()?;
    let stages = csv_trace(&start)?;
    c.equal("number of stages", stages.len(), table.len());
    for (k, (st, row)) in stages.iter().zip(table).enumerate() {
        let (rho, r, i, w, v, eps) = row;
        let label = format!("stage {}", k + 1);
        c.equal(&label, st.ranks.as_slice(), rho);
        c.equal(&label, st.max_rank, Some(r));
        c.equal(&label, st.max_rank_index, Some(i));
        c.equal(&label, st.boundary.to_string(), w.to_string());
        c.equal(&label, st.preimage.to_string(), v.to_string());
        c.equal(&label, st.excesses.as_slice(), eps);
        c.equal(&label, st.partition.size(), 30);
    }
    c.equal("second stage", stages[1].partition.to_string(), "(8,7,6,5,2,1,1)".to_string());
    c.equal("CSV output", csv(&start)?.to_string(), "(8,4,3,3,3,3,2,2,1,1)".to_string());
    Ok(c)
}

fn d0_members(max_size: usize) -> Vec<Partition> {
    PartitionSet::Delta(0).enumerate(max_size)
}

fn kappa_orbits(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for la in d0_members(get(p, "max_size")) {
        let mut cur = la.clone();
        while let Some(r) = cur.max_rank().filter(|&r| r >= 0) {
            let next = kappa(&cur)?;
            let label = format!("κ{cur} from {la}");
            c.equal(&label, next.size(), cur.size());
            let r_next = next.max_rank().unwrap_or(i64::MIN);
            if r > 0 {
                c.equal(&label, r_next, r - 1);
            } else {
                c.ensure(r_next < 0, || format!("{label}: rank {r_next} after rank 0"));
            }
            let via = partition_of(&phi(&gamma_bar(&phi_inverse(&boundary(&cur)?))?))?;
            c.equal(format!("{label} vs φγ̄φ^{{-1}}"), &next, &via);
            if c.failed() {
                return Ok(c);
            }
            cur = next;
        }
    }
    Ok(c)
}

fn csv_size_classes(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "max_size") {
        let parts = partitions_of(n);
        let d0: Vec<&Partition> = parts.iter().filter(|la| la.delta() == 0).collect();
        let neg: BTreeSet<Partition> = parts
            .iter()
            .filter(|la| PartitionSet::RanksAtMost(-1).contains(la))
            .cloned()
            .collect();
        let image = d0.iter().map(|la| csv(la)).collect::<Result<Vec<_>>>()?;
        let image_set: BTreeSet<Partition> = image.iter().cloned().collect();
        c.equal(format!("|D_0| vs |R_{{<=-1}}| at n = {n}"), d0.len(), neg.len());
        c.equal(format!("CSV injective at n = {n}"), image_set.len(), image.len());
        c.same_sets(format!("CSV image at n = {n}"), &image_set, &neg);
    }
    Ok(c)
}

fn csv_gk(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for la in d0_members(get(p, "max_size")) {
        let v = phi_inverse(&boundary(&la)?);
        let via = partition_of(&phi(&gk(&v)?))?;
        c.equal(format!("λ = {la}"), csv(&la)?, via);
        if let Some(r) = la.max_rank().filter(|&r| r >= 0) {
            let t = v.pairing()?.unpaired_twos.len() as i64;
            c.equal(format!("unpaired twos of φ^{{-1}}(w{la})"), t, r + 1);
        }
    }
    Ok(c)
}

fn gk_bijective(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    let max_len = get(p, "max_len");
    let w121 = Family::Suffix { suffix: "121".parse()?, max_len: Some(max_len) }.enumerate()?;
    for v in &w121 {
        let image = gk(v)?;
        c.equal(format!("gk_inverse(GK({v}))"), &gk_inverse(&image)?, v);
        c.equal(format!("maj of GK({v})"), image.maj(), v.maj());
    }
    let b21 = Family::BallotSuffix { suffix: "21".parse()?, max_len: Some(max_len) }.enumerate()?;
    for w in &b21 {
        c.equal(format!("GK(gk_inverse({w}))"), &gk(&gk_inverse(w)?)?, w);
    }
    let degree = get(p, "degree");
    let words = binary_words_with_maj_at_most(degree + 1, degree);
    let (tail21, tail121): (Word, Word) = ("21".parse()?, "121".parse()?);
    let source: Vec<&Word> = words.iter().filter(|v| v.is_empty() || v.ends_with(&tail121)).collect();
    let target: BTreeSet<Word> = words
        .iter()
        .filter(|v| v.is_empty() || (v.ends_with(&tail21) && v.is_ballot()))
        .cloned()
        .collect();
    let image = source.iter().map(|v| gk(v)).collect::<Result<Vec<_>>>()?;
    let image_set: BTreeSet<Word> = image.iter().cloned().collect();
    c.equal("GK injective on the maj slice", image_set.len(), image.len());
    c.same_sets("GK onto the maj slice", &image_set, &target);
    Ok(c)
}

fn gk_chains(p: &Params) -> Result<Checker> {
    let mut c = Checker::new();
    for n in 0..=get(p, "n") {
        let chains = symmetric_chains(n);
        let mut seen = BTreeSet::new();
        for chain in &chains {
            let first = &chain[0];
            let last = chain.last().expect("chains are nonempty");
            c.equal(format!("ones at the ends of the chain from {first}"), first.count(1) + last.count(1), n);
            let pairs = first.pairing()?.pairs;
            for (a, b) in chain.iter().zip(chain.iter().skip(1)) {
                c.equal(format!("γ({a})"), &gamma(a)?, b);
                c.equal(format!("pairs of {b}"), &b.pairing()?.pairs, &pairs);
            }
            for w in chain {
                c.ensure(seen.insert(w.clone()), || format!("{w} lies on two chains"));
            }
        }
        let all: BTreeSet<Word> = all_words(2, n).into_iter().collect();
        c.same_sets(format!("chains cover {{1,2}}^{n}"), &seen, &all);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_slice_counts_words() {
        // w(λ) ranges over 2{1,2}*1, so there are 2^{L-2} of each length L >= 2
        let slice = boundary_slice(6);
        assert_eq!(slice.len(), 1 + 1 + 2 + 4 + 8 + 16);
        for la in &slice {
            assert!(la.len() + la.largest() <= 6);
        }
    }

    #[test]
    fn maj_pruned_words_match_filter() {
        let got = binary_words_with_maj_at_most(6, 4);
        let mut want: Vec<Word> = (0..=6)
            .flat_map(|l| all_words(2, l))
            .filter(|w| w.maj() <= 4)
            .collect();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        want.sort();
        assert_eq!(got_sorted, want);
    }
}
