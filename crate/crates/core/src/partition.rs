use crate::meter::Meter;

/// Lomuto partition of `interval` around the pivot held in its last slot.
///
/// Returns the pivot's final index `p` within `interval`: everything before
/// `p` is less than the pivot, everything after is not less. An interval of
/// length `L` costs exactly `L - 1` comparisons.
pub fn partition<T: Ord>(interval: &mut [T], meter: &mut Meter) -> usize {
    let last = interval.len() - 1;
    let mut store = 0;
    for j in 0..last {
        if meter.less(&interval[j], &interval[last]) {
            meter.swap(interval, store, j);
            store += 1;
        }
    }
    meter.swap(interval, store, last);
    store
}
