//! Pivot rules.
//!
//! A pivot rule receives an interval `A[x..=y]`, chooses one of its items
//! and leaves that item in `A[y]`. It may rearrange the interval freely but
//! touches nothing outside it. Implementors only write [`PivotStrategy::place_in`],
//! which sees the interval as its own slice, so the second half of that
//! contract holds by construction.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::meter::Meter;
use crate::partition::partition;

pub trait PivotStrategy {
    /// Moves the chosen pivot of `interval` into its last slot.
    /// `interval` is never empty.
    fn place_in<T: Ord>(&mut self, interval: &mut [T], meter: &mut Meter);

    fn name(&self) -> &'static str;

    /// Chooses a pivot from `items[x..=y]` and swaps it into `items[y]`.
    fn place_pivot<T: Ord>(
        &mut self,
        items: &mut [T],
        x: usize,
        y: usize,
        meter: &mut Meter,
    ) -> Result<()> {
        if x > y || y >= items.len() {
            return Err(Error::InvalidInterval {
                x,
                y,
                len: items.len(),
            });
        }
        self.place_in(&mut items[x..=y], meter);
        Ok(())
    }
}

/// Source of uniform indices for the randomized rule.
pub trait RandomSource {
    /// Uniform index in `0..len`; `len > 0`.
    fn index_below(&mut self, len: usize) -> usize;
}

/// Reproducible stream backed by ChaCha8.
#[derive(Debug, Clone)]
pub struct SeededRandom(ChaCha8Rng);

impl SeededRandom {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }
}

impl RandomSource for SeededRandom {
    fn index_below(&mut self, len: usize) -> usize {
        self.0.gen_range(0..len)
    }
}

/// Keeps whatever is already in the last slot.
#[derive(Debug, Clone, Copy, Default)]
pub struct LastElement;

impl PivotStrategy for LastElement {
    #[inline]
    fn place_in<T: Ord>(&mut self, _interval: &mut [T], _meter: &mut Meter) {}

    fn name(&self) -> &'static str {
        "last"
    }
}

/// Swaps a uniformly chosen item into the last slot.
#[derive(Debug, Clone)]
pub struct Randomized<R = SeededRandom> {
    rng: R,
}

impl<R: RandomSource> Randomized<R> {
    pub fn new(rng: R) -> Self {
        Self { rng }
    }
}

impl Randomized<SeededRandom> {
    pub fn seeded(seed: u64) -> Self {
        Self::new(SeededRandom::new(seed))
    }
}

impl<R: RandomSource> PivotStrategy for Randomized<R> {
    fn place_in<T: Ord>(&mut self, interval: &mut [T], meter: &mut Meter) {
        let last = interval.len() - 1;
        if last == 0 {
            return;
        }
        let j = self.rng.index_below(interval.len());
        meter.swap(interval, j, last);
    }

    fn name(&self) -> &'static str {
        "random"
    }
}

/// Deterministic median of medians over groups of five.
#[derive(Debug, Clone, Copy, Default)]
pub struct MedianOfMedians;

impl PivotStrategy for MedianOfMedians {
    fn place_in<T: Ord>(&mut self, interval: &mut [T], meter: &mut Meter) {
        let at = median_of_medians(interval, meter);
        meter.swap(interval, at, interval.len() - 1);
    }

    fn name(&self) -> &'static str {
        "mom"
    }
}

fn insertion_sort<T: Ord>(v: &mut [T], meter: &mut Meter) {
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && meter.less(&v[j], &v[j - 1]) {
            meter.swap(v, j, j - 1);
            j -= 1;
        }
    }
}

/// Index of the median-of-medians pivot of `s`. Group medians are gathered
/// into the prefix of `s` before recursing, so all work stays inside `s`.
fn median_of_medians<T: Ord>(s: &mut [T], meter: &mut Meter) -> usize {
    let len = s.len();
    if len < 5 {
        insertion_sort(s, meter);
        return (len - 1) / 2;
    }
    let groups = len.div_ceil(5);
    for g in 0..groups {
        let start = g * 5;
        let end = (start + 5).min(len);
        insertion_sort(&mut s[start..end], meter);
        meter.swap(s, g, start + (end - start - 1) / 2);
    }
    select_index(&mut s[..groups], (groups - 1) / 2, meter)
}

/// Linear-time selection: rearranges `s` so the rank-`k` item sits at `k`
/// and returns `k`.
fn select_index<T: Ord>(s: &mut [T], k: usize, meter: &mut Meter) -> usize {
    let (mut lo, mut hi) = (0, s.len() - 1);
    while lo < hi {
        let window = &mut s[lo..=hi];
        let at = median_of_medians(window, meter);
        let last = window.len() - 1;
        meter.swap(window, at, last);
        let p = lo + partition(window, meter);
        match k.cmp(&p) {
            std::cmp::Ordering::Equal => return p,
            std::cmp::Ordering::Less => hi = p - 1,
            std::cmp::Ordering::Greater => lo = p + 1,
        }
    }
    lo
}

/// Pivot rule chosen by name at runtime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PivotKind {
    Last,
    Random,
    MedianOfMedians,
}

impl PivotKind {
    pub const ALL: [PivotKind; 3] = [
        PivotKind::Last,
        PivotKind::Random,
        PivotKind::MedianOfMedians,
    ];

    /// `seed` is only used by [`PivotKind::Random`].
    pub fn build(self, seed: u64) -> AnyPivot {
        match self {
            PivotKind::Last => AnyPivot::Last(LastElement),
            PivotKind::Random => AnyPivot::Random(Randomized::seeded(seed)),
            PivotKind::MedianOfMedians => AnyPivot::MedianOfMedians(MedianOfMedians),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PivotKind::Last => "last",
            PivotKind::Random => "random",
            PivotKind::MedianOfMedians => "mom",
        }
    }
}

impl fmt::Display for PivotKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownPivot(pub String);

impl fmt::Display for UnknownPivot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unknown pivot rule `{}` (expected last, random or mom)",
            self.0
        )
    }
}

impl std::error::Error for UnknownPivot {}

impl FromStr for PivotKind {
    type Err = UnknownPivot;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "last" => Ok(PivotKind::Last),
            "random" => Ok(PivotKind::Random),
            "mom" => Ok(PivotKind::MedianOfMedians),
            other => Err(UnknownPivot(other.to_string())),
        }
    }
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone)]
pub enum AnyPivot {
    Last(LastElement),
    Random(Randomized<SeededRandom>),
    MedianOfMedians(MedianOfMedians),
}

impl AnyPivot {
    pub fn kind(&self) -> PivotKind {
        match self {
            AnyPivot::Last(_) => PivotKind::Last,
            AnyPivot::Random(_) => PivotKind::Random,
            AnyPivot::MedianOfMedians(_) => PivotKind::MedianOfMedians,
        }
    }
}

impl PivotStrategy for AnyPivot {
    #[inline]
    fn place_in<T: Ord>(&mut self, interval: &mut [T], meter: &mut Meter) {
        match self {
            AnyPivot::Last(p) => p.place_in(interval, meter),
            AnyPivot::Random(p) => p.place_in(interval, meter),
            AnyPivot::MedianOfMedians(p) => p.place_in(interval, meter),
        }
    }

    fn name(&self) -> &'static str {
        self.kind().as_str()
    }
}
