mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use partmod::alternating::{self, AltLabel};
use partmod::branching::{self, Sign};
use partmod::classifier;
use partmod::mullineux;
use partmod::partition::{self, Partition};
use partmod::specht;

fn partition_strategy(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn regular_strategy(
    p: usize,
    max_parts: usize,
    max_part: usize,
) -> impl Strategy<Value = Partition> {
    partition_strategy(max_parts, max_part).prop_filter("p-regular", move |l| l.is_p_regular(p))
}

// Cancels a random adjacent "+-" pair until none is left.
fn random_cancellation(word: &[Sign], rng: &mut StdRng) -> Vec<Sign> {
    let mut w = word.to_vec();
    loop {
        let spots: Vec<usize> = (0..w.len().saturating_sub(1))
            .filter(|&k| w[k] == Sign::Addable && w[k + 1] == Sign::Removable)
            .collect();
        if spots.is_empty() {
            return w;
        }
        let k = spots[rng.gen_range(0..spots.len())];
        w.drain(k..k + 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn conjugate_is_an_involution(l in partition_strategy(8, 9)) {
        let c = partition::conjugate(&l);
        prop_assert_eq!(c.size(), l.size());
        prop_assert_eq!(partition::conjugate(&c), l);
    }

    #[test]
    fn display_parse_roundtrip(l in partition_strategy(8, 12)) {
        let back: Partition = l.to_string().parse().unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn cancellation_order_does_not_matter(
        l in regular_strategy(3, 7, 9), i in 0usize..3, seed in any::<u64>()
    ) {
        let seq = branching::signed_sequence(&l, 3, i);
        let word: Vec<Sign> = seq.iter().map(|e| e.sign).collect();
        let reduced: Vec<Sign> = branching::reduce(&seq).iter().map(|e| e.sign).collect();
        let mut rng = StdRng::seed_from_u64(seed);
        prop_assert_eq!(random_cancellation(&word, &mut rng), reduced);
    }

    #[test]
    fn signatures_match_bracket_oracle(l in regular_strategy(2, 8, 12), p in 2usize..6) {
        prop_assume!(l.is_p_regular(p));
        for i in 0..p {
            let report = branching::signature(&l, p, i).unwrap();
            let (normal, conormal) = common::bracket(l.parts(), p, i);
            let lib_normal: Vec<(usize, usize)> =
                report.normal_nodes().iter().map(|n| (n.row, n.col)).collect();
            let lib_conormal: Vec<(usize, usize)> =
                report.conormal_nodes().iter().map(|n| (n.row, n.col)).collect();
            prop_assert_eq!(lib_normal, normal);
            prop_assert_eq!(lib_conormal, conormal);
        }
    }

    #[test]
    fn crystal_operators_invert(l in regular_strategy(3, 6, 8), i in 0usize..3, r in 1usize..3) {
        let phi = branching::phi(&l, 3, i).unwrap();
        prop_assume!(r <= phi);
        let up = branching::f_tilde(&l, 3, i, r).unwrap();
        prop_assert_eq!(branching::e_tilde(&up, 3, i, r).unwrap(), l);
    }

    #[test]
    fn mullineux_matches_crystal_route(l in regular_strategy(5, 6, 7), p in prop::sample::select(vec![3usize, 5, 7])) {
        prop_assume!(l.is_p_regular(p) && l.size() <= 22);
        let by_symbol = mullineux::mullineux(&l, p).unwrap();
        prop_assert_eq!(&by_symbol, &common::mullineux_by_crystal(&l, p));
        let symbol = mullineux::mullineux_symbol(&l, p).unwrap();
        prop_assert_eq!(mullineux::partition_from_symbol(&symbol, p).unwrap(), l.clone());
        // the sign twist negates residues
        let c = partition::content(&l, p).counts;
        let cm = partition::content(&by_symbol, p).counts;
        for i in 0..p {
            prop_assert_eq!(c[i], cm[(p - i) % p]);
        }
    }

    #[test]
    fn labels_roundtrip(l in regular_strategy(3, 5, 6)) {
        prop_assume!(!l.is_empty());
        for label in alternating::alt_labels(&l, 3).unwrap() {
            let back = AltLabel::parse(&label.to_string(), 3).unwrap();
            prop_assert_eq!(back, label);
        }
    }

    #[test]
    fn classify_is_symmetric(n in 5usize..11, p in prop::sample::select(vec![2usize, 3]), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let labels = alternating::all_labels(n, p).unwrap();
        let v = a.get(&labels);
        let w = b.get(&labels);
        let x = classifier::classify(p, n, v, w).unwrap();
        let y = classifier::classify(p, n, w, v).unwrap();
        prop_assert_eq!(x.verdict, y.verdict);
        prop_assert_eq!(x.product, y.product);
    }
}

#[test]
fn two_regular_count_is_distinct_part_count() {
    for n in 0..=20 {
        let count = partition::enumerate_p_regular(n, 2).count() as u64;
        assert_eq!(count, common::distinct_part_count(n), "n = {n}");
    }
}

#[test]
fn regular_counts_match_generating_function() {
    for p in [3, 5] {
        for n in 0..=18 {
            let count = partition::enumerate_p_regular(n, p).count() as u64;
            assert_eq!(count, common::p_regular_count(n, p), "n = {n}, p = {p}");
        }
    }
}

#[test]
fn partitions_enumerate_in_descending_order() {
    for n in 1..=12 {
        let all: Vec<Partition> = partition::partitions(n).collect();
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert!(all.iter().all(|l| l.size() == n));
    }
}

#[test]
fn sign_twist_preserves_dimension() {
    for n in 1..=8 {
        for l in partition::enumerate_p_regular(n, 3) {
            let m = mullineux::mullineux(&l, 3).unwrap();
            let a = specht::gram_rank(&l, 3).unwrap().rank;
            let b = specht::gram_rank(&m, 3).unwrap().rank;
            assert_eq!(a, b, "{l} and {m}");
        }
    }
}

#[test]
fn gram_ranks_bounded() {
    for p in [2, 3] {
        for n in 1..=7 {
            let mut squares = 0;
            for l in partition::enumerate_p_regular(n, p) {
                let c = specht::gram_rank(&l, p).unwrap();
                assert!(c.rank <= c.syt && c.rank > 0, "{l}");
                squares += c.rank * c.rank;
            }
            let factorial: usize = (1..=n).product();
            assert!(squares <= factorial, "p = {p}, n = {n}");
        }
    }
}

#[test]
fn split_labels_have_even_dimension() {
    for (p, max_n) in [(2, 9), (3, 9)] {
        for n in 2..=max_n {
            for l in partition::enumerate_p_regular(n, p) {
                if alternating::splits(&l, p).unwrap() && !alternating::is_dim_one(&l, p).unwrap() {
                    let rank = specht::gram_rank(&l, p).unwrap().rank;
                    assert_eq!(rank % 2, 0, "{l} at p = {p}");
                }
            }
        }
    }
}

#[test]
fn classifier_dimensions_agree_with_oracle() {
    for p in [2, 3] {
        for id in specht::classifier_sweep(p, 9).unwrap() {
            assert!(id.holds, "{id:?}");
        }
    }
}

#[test]
fn no_split_js_for_small_odd_n_at_two() {
    // the case-(i) identity at p = 2 first has content at n = 9
    for n in [5, 7] {
        let hits: Vec<Partition> = partition::enumerate_p_regular(n, 2)
            .filter(|l| {
                alternating::splits(l, 2).unwrap()
                    && branching::is_js(l, 2).unwrap()
                    && !alternating::is_dim_one(l, 2).unwrap()
            })
            .collect();
        assert!(hits.is_empty(), "n = {n}: {hits:?}");
    }
}
