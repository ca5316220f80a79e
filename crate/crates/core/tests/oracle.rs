//! The self-sorting array against a plain sorted copy.

use std::collections::BTreeSet;

use lazysort::pivot::LastElement;
use lazysort::{LazySortedArray, PivotKind, SearchOutcome};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn reference_search(sorted: &[i64], value: i64) -> SearchOutcome {
    match sorted.binary_search(&value) {
        Ok(r) => SearchOutcome::Found(r),
        Err(r) => SearchOutcome::NotFound(r),
    }
}

/// O(n * settled) check of the marker invariant, independent of the
/// library's own audit.
fn brute_audit(items: &[i64], settled: impl Iterator<Item = usize>) -> bool {
    settled.into_iter().all(|i| {
        items[..i].iter().all(|&v| v < items[i]) && items[i + 1..].iter().all(|&v| v > items[i])
    })
}

fn distinct_items() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(-5_000i64..5_000, 1..400)
        .prop_flat_map(|set| Just(set.into_iter().collect::<Vec<_>>()).prop_shuffle())
}

#[derive(Debug, Clone)]
enum Query {
    Select(prop::sample::Index),
    Search(i64),
}

fn query() -> impl Strategy<Value = Query> {
    prop_oneof![
        any::<prop::sample::Index>().prop_map(Query::Select),
        (-5_100i64..5_100).prop_map(Query::Search),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn queries_match_reference(
        items in distinct_items(),
        queries in prop::collection::vec(query(), 1..80),
        kind in prop::sample::select(PivotKind::ALL.to_vec()),
        seed in any::<u64>(),
    ) {
        let mut sorted = items.clone();
        sorted.sort();
        let mut a = LazySortedArray::new(items, kind.build(seed)).unwrap();
        let mut last = a.stats();
        for q in queries {
            match q {
                Query::Select(i) => {
                    let k = i.index(sorted.len());
                    prop_assert_eq!(*a.select(k).unwrap(), sorted[k]);
                    prop_assert!(a.is_settled(k));
                    prop_assert_eq!(a.items()[k], sorted[k]);
                }
                Query::Search(v) => {
                    let got = a.search(&v).unwrap();
                    prop_assert_eq!(got, reference_search(&sorted, v));
                    if let SearchOutcome::Found(k) = got {
                        prop_assert!(a.is_settled(k));
                    }
                }
            }
            prop_assert!(a.audit_invariant());
            let now = a.stats();
            prop_assert!(now.comparisons >= last.comparisons && now.swaps >= last.swaps);
            prop_assert!(now.pivots_settled >= last.pivots_settled);
            prop_assert_eq!(now.pivots_settled as usize, a.markers().count_ones());
            last = now;
        }
        prop_assert!(brute_audit(a.items(), a.markers().iter_ones()));
    }

    #[test]
    fn audit_agrees_with_brute_force(
        items in distinct_items(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..10),
        corrupt in any::<(prop::sample::Index, prop::sample::Index)>(),
    ) {
        let mut a = LazySortedArray::new(items, LastElement).unwrap();
        for p in picks {
            let k = p.index(a.len());
            a.select(k).unwrap();
        }
        let (mut items, markers, s) = a.into_parts();
        let (i, j) = (corrupt.0.index(items.len()), corrupt.1.index(items.len()));
        items.swap(i, j);
        let expected = brute_audit(&items, markers.iter_ones());
        let b = LazySortedArray::from_parts(items, markers, s).unwrap();
        prop_assert_eq!(b.audit_invariant(), expected);
    }

    #[test]
    fn absent_search_settles_its_gap(items in distinct_items(), probe in -5_100i64..5_100) {
        let mut a = LazySortedArray::new(items.clone(), LastElement).unwrap();
        if let SearchOutcome::NotFound(r) = a.search(&probe).unwrap() {
            if r > 0 {
                prop_assert!(a.is_settled(r - 1));
            }
            if r < a.len() {
                prop_assert!(a.is_settled(r));
            }
        }
    }
}

#[test]
fn progressive_sort_completes_in_any_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for kind in PivotKind::ALL {
        let mut v: Vec<i64> = (0..300).map(|i| i * 3 - 100).collect();
        v.shuffle(&mut rng);
        let mut sorted = v.clone();
        sorted.sort();
        let mut ranks: Vec<usize> = (0..v.len()).collect();
        ranks.shuffle(&mut rng);
        let mut a = LazySortedArray::new(v, kind.build(rng.gen())).unwrap();
        for k in ranks {
            a.select(k).unwrap();
        }
        assert_eq!(a.items(), &sorted[..]);
        assert!(a.is_fully_sorted());
    }
}

#[test]
fn settled_set_independent_of_query_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let mut v: Vec<i64> = (0..500).collect();
        v.shuffle(&mut rng);
        let ranks: Vec<usize> = rand::seq::index::sample(&mut rng, 500, 20).into_vec();
        let mut settled_sets = BTreeSet::new();
        for _ in 0..4 {
            let mut order = ranks.clone();
            order.shuffle(&mut rng);
            let mut a = LazySortedArray::new(v.clone(), LastElement).unwrap();
            for k in order {
                a.select(k).unwrap();
            }
            settled_sets.insert(a.markers().iter_ones().collect::<Vec<_>>());
        }
        assert_eq!(settled_sets.len(), 1);
    }
}

#[test]
fn settled_queries_cost_nothing_extra() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let n = 2_000usize;
    let limit = (n as f64).log2().ceil() as u64 + 1;
    let mut v: Vec<i64> = (0..n as i64).map(|i| i * 2).collect();
    v.shuffle(&mut rng);
    let mut a = LazySortedArray::new(v, PivotKind::Random.build(1)).unwrap();
    for _ in 0..200 {
        let k = rng.gen_range(0..n);
        a.select(k).unwrap();
        let before = a.stats();
        a.select(k).unwrap();
        assert_eq!(a.stats().comparisons, before.comparisons);

        let probe = rng.gen_range(-1..2 * n as i64 + 1);
        a.search(&probe).unwrap();
        let before = a.stats();
        a.search(&probe).unwrap();
        let after = a.stats();
        assert!(after.comparisons - before.comparisons <= limit);
        assert_eq!(after.partitions, before.partitions);
    }
}
