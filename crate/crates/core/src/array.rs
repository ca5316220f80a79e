//! The self-sorting array.
//!
//! [`LazySortedArray`] keeps the items in one array `A` plus a
//! [`MarkerBitVector`] `B`. Whenever `B[i]` is set, `A[i]` is in its final
//! sorted slot: everything left of it is smaller and everything right of it
//! is larger. Rank queries ([`LazySortedArray::select`]) and value queries
//! ([`LazySortedArray::search`]) find the unsettled gap that holds their
//! answer and run quickselect inside that gap only, setting a marker for
//! every pivot the partition step places. After enough distinct queries the
//! array is fully sorted.
//!
//! Items are assumed pairwise distinct. Duplicates are not detected; with
//! duplicates the structure still produces some consistent order but the
//! strict marker invariant is no longer guaranteed.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::marker::MarkerBitVector;
use crate::meter::Meter;
use crate::partition::partition;
use crate::pivot::{AnyPivot, PivotStrategy};

/// Instrumentation counters. All of them only grow.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct QueryStats {
    /// Every item-vs-item comparison, whatever its purpose.
    pub comparisons: u64,
    pub swaps: u64,
    /// Number of marker bits currently set.
    pub pivots_settled: u64,
    pub queries_answered: u64,
    /// Comparisons spent on the initial min/max pass.
    pub preprocess_comparisons: u64,
    /// Comparisons spent on the binary (or interpolation) probe step of searches.
    pub probe_comparisons: u64,
    /// Non-trivial partition passes.
    pub partitions: u64,
}

impl QueryStats {
    /// Comparisons made by quickselect proper (pivot rule, partitioning and
    /// steering a search), excluding preprocessing and search probes.
    pub fn quickselect_comparisons(&self) -> u64 {
        self.comparisons - self.preprocess_comparisons - self.probe_comparisons
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SearchOutcome {
    /// The value is present and now sits, settled, at this rank.
    Found(usize),
    /// The value is absent; this many items are smaller than it.
    NotFound(usize),
}

impl SearchOutcome {
    pub fn rank(self) -> usize {
        match self {
            SearchOutcome::Found(r) | SearchOutcome::NotFound(r) => r,
        }
    }

    pub fn is_found(self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }
}

/// Probe rule for the first step of a search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum ProbeRule {
    #[default]
    Binary,
    Interpolation,
}

/// Items that can be placed on a number line, used by interpolation probes.
pub trait Interpolate {
    fn key(&self) -> f64;
}

macro_rules! interpolate_as_f64 {
    ($($t:ty),*) => {
        $(impl Interpolate for $t {
            #[inline]
            fn key(&self) -> f64 {
                *self as f64
            }
        })*
    };
}

interpolate_as_f64!(u8, u16, u32, u64, usize, i8, i16, i32, i64, isize);

/// Where the probe step of a search stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Landing {
    /// `A[i]` equals the value.
    Hit(usize),
    /// `A[b - 1] < value < A[b]`, with out-of-range neighbours read as
    /// minus and plus infinity.
    Boundary(usize),
}

/// Result of running quickselect inside one gap.
enum Resolved {
    Settled(usize),
    /// The target falls in front of position `r`, between two settled slots.
    Empty(usize),
}

#[derive(Debug, Clone)]
pub struct LazySortedArray<T, P = AnyPivot> {
    items: Vec<T>,
    markers: MarkerBitVector,
    strategy: P,
    meter: Meter,
    settled: u64,
    queries: u64,
    preprocess_comparisons: u64,
    probe_comparisons: u64,
    partitions: u64,
}

impl<T: Ord, P: PivotStrategy> LazySortedArray<T, P> {
    /// Moves the minimum to the front and the maximum to the back and marks
    /// both ends settled. One linear pass of `2(n - 1)` comparisons.
    pub fn new(mut items: Vec<T>, strategy: P) -> Result<Self> {
        let n = items.len();
        let mut markers = MarkerBitVector::new(n)?;
        let mut meter = Meter::new();

        let (mut min, mut max) = (0, 0);
        for i in 1..n {
            if meter.less(&items[i], &items[min]) {
                min = i;
            }
            if meter.less(&items[max], &items[i]) {
                max = i;
            }
        }
        meter.swap(&mut items, 0, min);
        if max == 0 {
            max = min;
        }
        meter.swap(&mut items, n - 1, max);

        markers.set_unchecked(0);
        markers.set_unchecked(n - 1);
        let settled = markers.count_ones() as u64;
        Ok(Self {
            items,
            markers,
            strategy,
            preprocess_comparisons: meter.comparisons,
            meter,
            settled,
            queries: 0,
            probe_comparisons: 0,
            partitions: 0,
        })
    }

    /// Reassembles a structure from raw state without preprocessing or
    /// validation. Use [`audit_invariant`](Self::audit_invariant) to check it.
    pub fn from_parts(items: Vec<T>, markers: MarkerBitVector, strategy: P) -> Result<Self> {
        if items.len() != markers.len() {
            return Err(Error::Corrupt("item count does not match marker length"));
        }
        let settled = markers.count_ones() as u64;
        Ok(Self {
            items,
            markers,
            strategy,
            meter: Meter::new(),
            settled,
            queries: 0,
            preprocess_comparisons: 0,
            probe_comparisons: 0,
            partitions: 0,
        })
    }

    pub fn into_parts(self) -> (Vec<T>, MarkerBitVector, P) {
        (self.items, self.markers, self.strategy)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    /// Always false; construction rejects empty input.
    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// The items in their current arrangement.
    pub fn items(&self) -> &[T] {
        &self.items
    }

    pub fn markers(&self) -> &MarkerBitVector {
        &self.markers
    }

    pub fn strategy(&self) -> &P {
        &self.strategy
    }

    pub fn is_settled(&self, i: usize) -> bool {
        i < self.len() && self.markers.get_unchecked(i)
    }

    pub fn is_fully_sorted(&self) -> bool {
        self.markers.all_set()
    }

    pub fn stats(&self) -> QueryStats {
        QueryStats {
            comparisons: self.meter.comparisons,
            swaps: self.meter.swaps,
            pivots_settled: self.settled,
            queries_answered: self.queries,
            preprocess_comparisons: self.preprocess_comparisons,
            probe_comparisons: self.probe_comparisons,
            partitions: self.partitions,
        }
    }

    /// Returns the item of rank `k` (0-indexed), leaving it settled at `A[k]`.
    pub fn select(&mut self, k: usize) -> Result<&T> {
        let n = self.len();
        if k >= n {
            return Err(Error::OutOfRange { index: k, len: n });
        }
        self.queries += 1;
        if !self.markers.get_unchecked(k) {
            let l = self.markers.prev_one_before(k)?;
            let r = self.markers.next_one_after(k)?;
            self.descend(l + 1, r - 1, |p, _, _| k.cmp(&p));
        }
        Ok(&self.items[k])
    }

    /// Finds `value` by rank using binary-search probes.
    pub fn search(&mut self, value: &T) -> Result<SearchOutcome> {
        self.queries += 1;
        let before = self.meter.comparisons;
        let landing = self.probe_binary(value);
        self.probe_comparisons += self.meter.comparisons - before;
        self.resolve(landing, value)
    }

    /// True iff every set marker certifies its slot: all items to its left
    /// are smaller and all to its right are larger. Runs in `O(n)` and does
    /// not touch the counters.
    pub fn audit_invariant(&self) -> bool {
        let n = self.len();
        // suffix_min[i] = index of the minimum of items[i..]
        let mut suffix_min = vec![n - 1; n];
        for i in (0..n - 1).rev() {
            let next = suffix_min[i + 1];
            suffix_min[i] = if self.items[i] < self.items[next] {
                i
            } else {
                next
            };
        }
        let mut prefix_max: Option<&T> = None;
        for (i, item) in self.items.iter().enumerate() {
            if self.markers.get_unchecked(i) {
                if prefix_max.is_some_and(|m| m >= item) {
                    return false;
                }
                if i + 1 < n && self.items[suffix_min[i + 1]] <= *item {
                    return false;
                }
            }
            prefix_max = match prefix_max {
                Some(m) if m >= item => Some(m),
                _ => Some(item),
            };
        }
        true
    }

    fn probe_binary(&mut self, value: &T) -> Landing {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            match self.meter.cmp(value, &self.items[mid]) {
                Ordering::Equal => return Landing::Hit(mid),
                Ordering::Less => hi = mid,
                Ordering::Greater => lo = mid + 1,
            }
        }
        Landing::Boundary(lo)
    }

    fn resolve(&mut self, landing: Landing, value: &T) -> Result<SearchOutcome> {
        let n = self.len();
        let (l, r) = match landing {
            Landing::Hit(i) if self.markers.get_unchecked(i) => return Ok(SearchOutcome::Found(i)),
            Landing::Hit(i) => (
                self.markers.prev_one_before(i)?,
                self.markers.next_one_after(i)?,
            ),
            Landing::Boundary(0) => return Ok(SearchOutcome::NotFound(0)),
            Landing::Boundary(b) if b == n => return Ok(SearchOutcome::NotFound(n)),
            Landing::Boundary(b) => {
                let l = if self.markers.get_unchecked(b - 1) {
                    b - 1
                } else {
                    self.markers.prev_one_before(b - 1)?
                };
                let r = if self.markers.get_unchecked(b) {
                    b
                } else {
                    self.markers.next_one_after(b)?
                };
                (l, r)
            }
        };
        if r == l + 1 {
            return Ok(SearchOutcome::NotFound(r));
        }
        Ok(
            match self.descend(l + 1, r - 1, |_, pivot, meter| meter.cmp(value, pivot)) {
                Resolved::Settled(p) => SearchOutcome::Found(p),
                Resolved::Empty(r) => SearchOutcome::NotFound(r),
            },
        )
    }

    #[inline]
    fn settle(&mut self, i: usize) {
        if self.markers.set_unchecked(i) {
            self.settled += 1;
        }
    }

    /// Quickselect restricted to the unsettled gap `[x, y]`. `side` reports
    /// where the target lies relative to the freshly settled pivot at `p`.
    fn descend<F>(&mut self, mut x: usize, mut y: usize, mut side: F) -> Resolved
    where
        F: FnMut(usize, &T, &mut Meter) -> Ordering,
    {
        loop {
            if x > y {
                return Resolved::Empty(x);
            }
            if x == y {
                // a one-slot gap is already in place
                self.settle(x);
                return match side(x, &self.items[x], &mut self.meter) {
                    Ordering::Equal => Resolved::Settled(x),
                    Ordering::Less => Resolved::Empty(x),
                    Ordering::Greater => Resolved::Empty(x + 1),
                };
            }
            let window = &mut self.items[x..=y];
            self.strategy.place_in(window, &mut self.meter);
            let p = x + partition(window, &mut self.meter);
            self.partitions += 1;
            self.settle(p);
            if p == x + 1 {
                self.settle(x);
            }
            if p + 1 == y {
                self.settle(y);
            }
            match side(p, &self.items[p], &mut self.meter) {
                Ordering::Equal => return Resolved::Settled(p),
                Ordering::Less if p == x => return Resolved::Empty(x),
                Ordering::Less => y = p - 1,
                Ordering::Greater => x = p + 1,
            }
        }
    }
}

impl<T: Ord + Interpolate, P: PivotStrategy> LazySortedArray<T, P> {
    /// Like [`search`](Self::search) but with a selectable probe rule.
    pub fn search_with(&mut self, value: &T, rule: ProbeRule) -> Result<SearchOutcome> {
        match rule {
            ProbeRule::Binary => self.search(value),
            ProbeRule::Interpolation => {
                self.queries += 1;
                let before = self.meter.comparisons;
                let landing = self.probe_interpolation(value);
                self.probe_comparisons += self.meter.comparisons - before;
                self.resolve(landing, value)
            }
        }
    }

    fn probe_interpolation(&mut self, value: &T) -> Landing {
        let last = self.len() - 1;
        match self.meter.cmp(value, &self.items[0]) {
            Ordering::Less => return Landing::Boundary(0),
            Ordering::Equal => return Landing::Hit(0),
            Ordering::Greater if last == 0 => return Landing::Boundary(1),
            Ordering::Greater => {}
        }
        match self.meter.cmp(value, &self.items[last]) {
            Ordering::Greater => return Landing::Boundary(last + 1),
            Ordering::Equal => return Landing::Hit(last),
            Ordering::Less => {}
        }
        // items[lo] < value < items[hi]
        let (mut lo, mut hi) = (0, last);
        let target = value.key();
        while hi - lo > 1 {
            let (low_key, high_key) = (self.items[lo].key(), self.items[hi].key());
            let frac = (target - low_key) / (high_key - low_key);
            let offset = (frac * (hi - lo) as f64) as usize;
            let mid = (lo + offset).clamp(lo + 1, hi - 1);
            match self.meter.cmp(value, &self.items[mid]) {
                Ordering::Equal => return Landing::Hit(mid),
                Ordering::Less => hi = mid,
                Ordering::Greater => lo = mid,
            }
        }
        Landing::Boundary(hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pivot::{LastElement, MedianOfMedians, PivotKind, Randomized};

    fn bits(a: &LazySortedArray<i32, impl PivotStrategy>) -> String {
        (0..a.len())
            .map(|i| if a.is_settled(i) { '1' } else { '0' })
            .collect()
    }

    #[test]
    fn preprocess_places_extremes() {
        let a = LazySortedArray::new(vec![3, 1, 2], LastElement).unwrap();
        assert_eq!(a.items(), &[1, 2, 3]);
        assert_eq!(bits(&a), "101");

        let a = LazySortedArray::new(vec![5, 2, 9, 4], LastElement).unwrap();
        assert_eq!((a.items()[0], a.items()[3]), (2, 9));
        assert_eq!(bits(&a), "1001");

        let a = LazySortedArray::new(vec![7, 3], LastElement).unwrap();
        assert_eq!(a.items(), &[3, 7]);
        assert_eq!(bits(&a), "11");
        assert!(a.is_fully_sorted());
    }

    #[test]
    fn preprocess_handles_max_at_front() {
        let a = LazySortedArray::new(vec![9, 4, 1, 6], LastElement).unwrap();
        assert_eq!((a.items()[0], a.items()[3]), (1, 9));
        let a = LazySortedArray::new(vec![9, 1], LastElement).unwrap();
        assert_eq!(a.items(), &[1, 9]);
    }

    #[test]
    fn singleton_and_empty() {
        let mut a = LazySortedArray::new(vec![42], LastElement).unwrap();
        assert_eq!(bits(&a), "1");
        assert_eq!(*a.select(0).unwrap(), 42);
        assert_eq!(a.search(&42).unwrap(), SearchOutcome::Found(0));
        assert_eq!(a.search(&1).unwrap(), SearchOutcome::NotFound(0));
        assert_eq!(a.search(&50).unwrap(), SearchOutcome::NotFound(1));
        assert_eq!(
            LazySortedArray::<i32, _>::new(vec![], LastElement).unwrap_err(),
            Error::EmptyInput
        );
    }

    #[test]
    fn preprocess_comparison_count() {
        for n in [1usize, 2, 5, 100] {
            let a = LazySortedArray::new((0..n as i64).rev().collect(), LastElement).unwrap();
            let s = a.stats();
            assert_eq!(s.comparisons, 2 * (n as u64 - 1));
            assert_eq!(s.preprocess_comparisons, s.comparisons);
            assert_eq!(s.quickselect_comparisons(), 0);
        }
    }

    #[test]
    fn select_minimum_is_free() {
        let mut a = LazySortedArray::new(vec![8, 3, 5, 1, 9], LastElement).unwrap();
        let before = a.stats().comparisons;
        assert_eq!(*a.select(0).unwrap(), 1);
        assert_eq!(a.stats().comparisons, before);
    }

    #[test]
    fn select_middle_rank() {
        let mut a = LazySortedArray::new(vec![5, 1, 4, 2, 3], LastElement).unwrap();
        assert_eq!(*a.select(2).unwrap(), 3);
        assert!(a.is_settled(2));
        let c = a.stats().comparisons;
        assert_eq!(*a.select(2).unwrap(), 3);
        assert_eq!(a.stats().comparisons, c);
        assert!(a.audit_invariant());
    }

    #[test]
    fn select_out_of_range() {
        let mut a = LazySortedArray::new(vec![1, 2, 3], LastElement).unwrap();
        assert_eq!(
            a.select(3).unwrap_err(),
            Error::OutOfRange { index: 3, len: 3 }
        );
    }

    #[test]
    fn select_sweep_sorts() {
        let mut v: Vec<i32> = (0..100).map(|i| (i * 37) % 100).collect();
        let mut sorted = v.clone();
        sorted.sort();
        v.rotate_left(13);
        let mut a = LazySortedArray::new(v, PivotKind::Random.build(5)).unwrap();
        for (k, want) in sorted.iter().enumerate() {
            assert_eq!(*a.select(k).unwrap(), *want);
        }
        assert_eq!(a.items(), &sorted[..]);
        assert!(a.is_fully_sorted());
    }

    #[test]
    fn search_examples() {
        let mut a = LazySortedArray::new(vec![40, 10, 50, 30, 20], LastElement).unwrap();
        let probes = a.stats().probe_comparisons;
        assert_eq!(a.search(&10).unwrap(), SearchOutcome::Found(0));
        assert_eq!(a.stats().quickselect_comparisons(), 0);
        assert!(a.stats().probe_comparisons > probes);

        assert_eq!(a.search(&30).unwrap(), SearchOutcome::Found(2));
        assert_eq!(a.items()[2], 30);
        assert!(a.is_settled(2));
        assert_eq!(a.search(&35).unwrap(), SearchOutcome::NotFound(3));
        assert_eq!(a.search(&5).unwrap(), SearchOutcome::NotFound(0));
        assert_eq!(a.search(&55).unwrap(), SearchOutcome::NotFound(5));
        assert!(a.audit_invariant());
    }

    #[test]
    fn absent_search_settles_both_neighbours() {
        let v: Vec<i32> = (0..64).map(|i| ((i * 29) % 64) * 2).collect();
        let mut a = LazySortedArray::new(v, LastElement).unwrap();
        assert_eq!(a.search(&41).unwrap(), SearchOutcome::NotFound(21));
        assert!(a.is_settled(20) && a.is_settled(21));
        assert_eq!((a.items()[20], a.items()[21]), (40, 42));
    }

    #[test]
    fn repeated_search_skips_partitioning() {
        let v: Vec<i32> = (0..1000).map(|i| (i * 611) % 1000).collect();
        let mut a = LazySortedArray::new(v, LastElement).unwrap();
        a.search(&377).unwrap();
        let before = a.stats();
        assert_eq!(a.search(&377).unwrap(), SearchOutcome::Found(377));
        let after = a.stats();
        assert_eq!(after.partitions, before.partitions);
        assert!(after.comparisons - before.comparisons <= 11);
    }

    #[test]
    fn interpolation_probe_agrees_with_binary() {
        let v: Vec<u64> = (0..500).map(|i| (i * 7919) % 500 * 3).collect();
        let mut a = LazySortedArray::new(v.clone(), LastElement).unwrap();
        let mut b = LazySortedArray::new(v, LastElement).unwrap();
        for probe in [0u64, 1, 3, 700, 701, 1497, 1500, 250, 9, 10, 1200] {
            assert_eq!(
                a.search_with(&probe, ProbeRule::Interpolation).unwrap(),
                b.search(&probe).unwrap(),
                "probe {probe}"
            );
        }
        assert!(a.audit_invariant());
    }

    #[test]
    fn audit_detects_corruption() {
        let mut a = LazySortedArray::new(vec![6, 2, 8, 4, 1, 9, 3], MedianOfMedians).unwrap();
        assert!(a.audit_invariant());
        assert_eq!(*a.select(3).unwrap(), 4);
        assert!(a.audit_invariant());
        let (mut items, markers, strategy) = a.into_parts();
        // move an item from the right of the settled slot to its left
        items.swap(1, 5);
        let b = LazySortedArray::from_parts(items, markers, strategy).unwrap();
        assert!(!b.audit_invariant());
    }

    #[test]
    fn from_parts_length_mismatch() {
        let m = MarkerBitVector::new(3).unwrap();
        assert!(LazySortedArray::from_parts(vec![1, 2], m, LastElement).is_err());
    }

    #[test]
    fn randomized_strategy_answers() {
        let mut a =
            LazySortedArray::new((0..50).rev().collect::<Vec<i32>>(), Randomized::seeded(9))
                .unwrap();
        for k in [25, 3, 47, 10] {
            assert_eq!(*a.select(k).unwrap(), k as i32);
        }
        assert!(a.audit_invariant());
    }
}
