//! Conventional comparison points: in-place quicksort, then searching the
//! sorted array.

use std::cmp::Ordering;

use lazysort::{partition, Interpolate, Meter, PivotStrategy, ProbeRule};

/// Quicksort with the given pivot rule and Lomuto partitioning. Recurses
/// into the smaller side so stack depth stays logarithmic.
pub fn quicksort<T: Ord, P: PivotStrategy>(items: &mut [T], strategy: &mut P, meter: &mut Meter) {
    let mut rest = items;
    while rest.len() > 1 {
        strategy.place_in(rest, meter);
        let p = partition(rest, meter);
        let (left, right) = rest.split_at_mut(p);
        let right = &mut right[1..];
        if left.len() < right.len() {
            quicksort(left, strategy, meter);
            rest = right;
        } else {
            quicksort(right, strategy, meter);
            rest = left;
        }
    }
}

/// Searches a sorted slice, returning `Ok(rank)` or `Err(insertion rank)`.
pub fn search_sorted<T: Ord + Interpolate>(
    sorted: &[T],
    value: &T,
    rule: ProbeRule,
    meter: &mut Meter,
) -> Result<usize, usize> {
    match rule {
        ProbeRule::Binary => binary_search(sorted, value, meter),
        ProbeRule::Interpolation => interpolation_search(sorted, value, meter),
    }
}

fn binary_search<T: Ord>(sorted: &[T], value: &T, meter: &mut Meter) -> Result<usize, usize> {
    let (mut lo, mut hi) = (0, sorted.len());
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        match meter.cmp(value, &sorted[mid]) {
            Ordering::Equal => return Ok(mid),
            Ordering::Less => hi = mid,
            Ordering::Greater => lo = mid + 1,
        }
    }
    Err(lo)
}

fn interpolation_search<T: Ord + Interpolate>(
    sorted: &[T],
    value: &T,
    meter: &mut Meter,
) -> Result<usize, usize> {
    let Some(last) = sorted.len().checked_sub(1) else {
        return Err(0);
    };
    match meter.cmp(value, &sorted[0]) {
        Ordering::Less => return Err(0),
        Ordering::Equal => return Ok(0),
        Ordering::Greater if last == 0 => return Err(1),
        Ordering::Greater => {}
    }
    match meter.cmp(value, &sorted[last]) {
        Ordering::Greater => return Err(last + 1),
        Ordering::Equal => return Ok(last),
        Ordering::Less => {}
    }
    let (mut lo, mut hi) = (0, last);
    let target = value.key();
    while hi - lo > 1 {
        let (a, b) = (sorted[lo].key(), sorted[hi].key());
        let offset = ((target - a) / (b - a) * (hi - lo) as f64) as usize;
        let mid = (lo + offset).clamp(lo + 1, hi - 1);
        match meter.cmp(value, &sorted[mid]) {
            Ordering::Equal => return Ok(mid),
            Ordering::Less => hi = mid,
            Ordering::Greater => lo = mid,
        }
    }
    Err(hi)
}
