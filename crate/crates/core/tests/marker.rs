use lazysort::MarkerBitVector;
use proptest::prelude::*;

fn brute_prev(bits: &[bool], k: usize) -> Option<usize> {
    (0..k).rev().find(|&i| bits[i])
}

fn brute_next(bits: &[bool], k: usize) -> Option<usize> {
    (k + 1..bits.len()).find(|&i| bits[i])
}

proptest! {
    #[test]
    fn scans_match_brute_force(
        n in 1usize..10_000,
        density in 0.0f64..0.2,
        seed in any::<u64>(),
        probes in prop::collection::vec(any::<prop::sample::Index>(), 1..40),
    ) {
        let mut state = seed | 1;
        let mut bits = vec![false; n];
        let mut bv = MarkerBitVector::new(n).unwrap();
        for (i, b) in bits.iter_mut().enumerate() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if (state % 10_000) as f64 / 10_000.0 < density {
                *b = true;
                bv.set(i).unwrap();
            }
        }
        for p in probes {
            let k = p.index(n);
            prop_assert_eq!(bv.prev_one_before(k).ok(), brute_prev(&bits, k));
            prop_assert_eq!(bv.next_one_after(k).ok(), brute_next(&bits, k));
        }
        prop_assert_eq!(bv.count_ones(), bits.iter().filter(|&&b| b).count());
    }

    #[test]
    fn behaves_like_bool_array(
        n in 1usize..700,
        ops in prop::collection::vec((any::<bool>(), any::<prop::sample::Index>()), 1..300),
    ) {
        let mut naive = vec![false; n];
        let mut bv = MarkerBitVector::new(n).unwrap();
        let mut ones_so_far = 0;
        for (is_set, idx) in ops {
            let i = idx.index(n);
            if is_set {
                naive[i] = true;
                bv.set(i).unwrap();
            } else {
                prop_assert_eq!(bv.get(i).unwrap(), naive[i]);
            }
            // bits are never cleared
            let ones = bv.count_ones();
            prop_assert!(ones >= ones_so_far);
            ones_so_far = ones;
        }
        for (i, &b) in naive.iter().enumerate() {
            prop_assert_eq!(bv.get(i).unwrap(), b);
        }
        let expected: Vec<usize> = (0..n).filter(|&i| naive[i]).collect();
        prop_assert_eq!(bv.iter_ones().collect::<Vec<_>>(), expected);
    }
}
