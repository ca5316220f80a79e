//! Comparison and swap instrumentation shared by pivot rules, partitioning
//! and the query algorithms.

use std::cmp::Ordering;

/// Running totals of item comparisons and item exchanges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Meter {
    pub comparisons: u64,
    pub swaps: u64,
}

impl Meter {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn less<T: Ord + ?Sized>(&mut self, a: &T, b: &T) -> bool {
        self.comparisons += 1;
        a < b
    }

    #[inline]
    pub fn cmp<T: Ord + ?Sized>(&mut self, a: &T, b: &T) -> Ordering {
        self.comparisons += 1;
        a.cmp(b)
    }

    /// Exchanges `items[i]` and `items[j]`. Self-swaps are free.
    #[inline]
    pub fn swap<T>(&mut self, items: &mut [T], i: usize, j: usize) {
        if i != j {
            self.swaps += 1;
            items.swap(i, j);
        }
    }
}
