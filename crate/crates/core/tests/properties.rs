use mahonian::bijections::{csv, gk, gk_inverse};
use mahonian::genfun::q_binomial;
use mahonian::partition::lambda;
use mahonian::poly::exponents;
use mahonian::{phi, phi_inverse, LaurentPoly, Partition, Var, Word};
use num_bigint::BigInt;
use proptest::prelude::*;

fn word(alphabet: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=alphabet, 0..=max_len).prop_map(|v| Word::new(v).unwrap())
}

fn balanced(max_n: usize) -> impl Strategy<Value = Word> {
    (0..=max_n)
        .prop_flat_map(|n| Just(Word::from_blocks(&[(1, n), (2, n)]).into_letters()).prop_shuffle())
        .prop_map(|v| Word::new(v).unwrap())
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..9, 0..8).prop_map(Partition::from_parts)
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-3i32..4, -2i32..3, -2i32..3, 0i32..2, -5i64..6), 0..6).prop_map(|terms| {
        let mut p = LaurentPoly::zero();
        for (q, t, z, s, c) in terms {
            p.add_term(exponents(q, t, z, s), BigInt::from(c));
        }
        p
    })
}

/// Inversions counted by merge sort.
fn merge_inversions(a: &[u32]) -> (Vec<u32>, usize) {
    if a.len() < 2 {
        return (a.to_vec(), 0);
    }
    let (l, r) = a.split_at(a.len() / 2);
    let (l, il) = merge_inversions(l);
    let (r, ir) = merge_inversions(r);
    let (mut out, mut count) = (Vec::with_capacity(a.len()), il + ir);
    let (mut i, mut j) = (0, 0);
    while i < l.len() && j < r.len() {
        if r[j] < l[i] {
            count += l.len() - i;
            out.push(r[j]);
            j += 1;
        } else {
            out.push(l[i]);
            i += 1;
        }
    }
    out.extend_from_slice(&l[i..]);
    out.extend_from_slice(&r[j..]);
    (out, count)
}

proptest! {
    #[test]
    fn foata_transports_maj_to_inv(v in word(4, 14)) {
        let image = phi(&v);
        prop_assert_eq!(v.maj(), image.inv());
        prop_assert_eq!(v.sorted(), image.sorted());
        prop_assert_eq!(phi_inverse(&image), v.clone());
        prop_assert_eq!(phi(&phi_inverse(&v)), v);
    }

    #[test]
    fn inv_matches_merge_sort(v in word(6, 30)) {
        prop_assert_eq!(v.inv(), merge_inversions(v.letters()).1);
    }

    #[test]
    fn prime_map_identities(y in word(2, 16)) {
        let yp = y.prime().unwrap();
        let n = y.len();
        prop_assert_eq!(yp.inv(), y.inv());
        prop_assert_eq!(yp.des(), y.des());
        prop_assert_eq!(yp.maj() + y.maj(), n * y.des());
        prop_assert_eq!(yp.prime().unwrap(), y.clone());
        prop_assert_eq!(lambda(&yp).unwrap().partition, lambda(&y).unwrap().partition.conjugate());
    }

    #[test]
    fn compositions_round_trip(v in word(2, 16)) {
        let (ones, twos) = v.ones_twos_compositions().unwrap();
        prop_assert_eq!(ones.len(), v.des() + 1);
        prop_assert_eq!(Word::from_compositions(&ones, &twos), v);
    }

    #[test]
    fn excess_and_pairs(w in balanced(8)) {
        let n = w.len() as i64 / 2;
        let pairs = w.pairing().unwrap().pairs.len() as i64;
        prop_assert_eq!(w.max_excess().unwrap(), n - pairs);
        prop_assert_eq!(w.max_excess().unwrap() <= 0, w.is_ballot());
    }

    #[test]
    fn conjugation_is_an_involution(la in partition()) {
        prop_assert_eq!(la.conjugate().conjugate(), la.clone());
        prop_assert_eq!(la.conjugate().size(), la.size());
    }

    #[test]
    fn boundary_word_round_trip(la in partition()) {
        prop_assume!(!la.is_empty());
        let w = la.boundary_word().unwrap();
        prop_assert_eq!(w.len(), la.len() + la.largest());
        prop_assert_eq!(Partition::from_boundary_word(&w).unwrap(), la);
    }

    #[test]
    fn csv_lands_in_negative_ranks(mut parts in prop::collection::vec(1usize..8, 1..8)) {
        // force λ_1 = λ_2
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.insert(0, parts[0]);
        let la = Partition::from_parts(parts);
        let image = csv(&la).unwrap();
        prop_assert_eq!(image.size(), la.size());
        prop_assert!(image.ranks().iter().all(|&r| r < 0));
    }

    #[test]
    fn gk_round_trip(prefix in word(2, 10)) {
        let v = prefix.concat(&"121".parse().unwrap());
        let image = gk(&v).unwrap();
        prop_assert_eq!(image.maj(), v.maj());
        prop_assert!(image.is_ballot());
        prop_assert_eq!(gk_inverse(&image).unwrap(), v);
    }

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &LaurentPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a + &LaurentPoly::zero(), a);
    }

    #[test]
    fn exact_division_undoes_multiplication(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }
}

#[test]
fn q_binomial_satisfies_q_pascal() {
    let q = LaurentPoly::var(Var::Q);
    for n in 1..=12i64 {
        for k in 0..=n {
            let rhs = &q_binomial(n - 1, k - 1) + &(&q.pow(k as u32) * &q_binomial(n - 1, k));
            assert_eq!(q_binomial(n, k), rhs, "({n},{k})");
        }
    }
}
