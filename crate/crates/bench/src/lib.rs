//! Benchmark harness for [`lazysort`].
//!
//! Each [`Mode`] times one workload over several seeded trials and reports
//! mean wall time, comparisons and swaps. Every trial is checked against a
//! sorted reference before its numbers are kept, so a run that reports
//! timings has also produced correct answers.

pub mod baseline;

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;
use std::time::Instant;

use anyhow::{bail, ensure, Context, Result};
use lazysort::{LazySortedArray, Meter, PivotKind, ProbeRule, SearchOutcome};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    SelectSort,
    SqrtSelections,
    QuicksortBaseline,
    SearchOld,
    SearchNew,
    Theorem1,
}

impl Mode {
    pub const ALL: [Mode; 6] = [
        Mode::SelectSort,
        Mode::SqrtSelections,
        Mode::QuicksortBaseline,
        Mode::SearchOld,
        Mode::SearchNew,
        Mode::Theorem1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::SelectSort => "select_sort",
            Mode::SqrtSelections => "sqrt_selections",
            Mode::QuicksortBaseline => "quicksort_baseline",
            Mode::SearchOld => "search_old",
            Mode::SearchNew => "search_new",
            Mode::Theorem1 => "theorem1",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .with_context(|| format!("unknown mode `{s}`"))
    }
}

/// How many queries a trial issues, possibly relative to `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QuerySpec {
    Fixed(usize),
    /// `floor(sqrt(n))`
    Sqrt,
    /// `n / d`
    Fraction(usize),
}

impl QuerySpec {
    pub fn resolve(self, n: usize) -> usize {
        match self {
            QuerySpec::Fixed(q) => q,
            QuerySpec::Sqrt => (n as f64).sqrt() as usize,
            QuerySpec::Fraction(d) => n / d,
        }
    }
}

impl fmt::Display for QuerySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuerySpec::Fixed(q) => write!(f, "{q}"),
            QuerySpec::Sqrt => f.write_str("sqrt"),
            QuerySpec::Fraction(d) => write!(f, "n/{d}"),
        }
    }
}

impl FromStr for QuerySpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "sqrt" {
            return Ok(QuerySpec::Sqrt);
        }
        if let Some(d) = s.strip_prefix("n/") {
            let d: usize = d.parse().with_context(|| format!("bad divisor in `{s}`"))?;
            ensure!(d > 0, "divisor must be positive");
            return Ok(QuerySpec::Fraction(d));
        }
        s.parse()
            .map(QuerySpec::Fixed)
            .with_context(|| format!("query count `{s}` is not a number, `sqrt` or `n/<d>`"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Markdown,
}

impl FromStr for Format {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "markdown" => Ok(Format::Markdown),
            _ => bail!("unknown format `{s}`"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub mode: Mode,
    pub n: usize,
    /// `None` picks the mode's default: `sqrt` for selections and searches,
    /// a sweep over powers of two for `theorem1`.
    pub q: Option<QuerySpec>,
    pub pivot: PivotKind,
    pub seed: u64,
    pub trials: usize,
    pub probe: ProbeRule,
    /// Draw items uniformly from `0..n` with repetition instead of using a
    /// permutation. Answers are not verified in this setting.
    pub with_duplicates: bool,
}

impl BenchConfig {
    pub fn new(mode: Mode, n: usize) -> Self {
        Self {
            mode,
            n,
            q: None,
            pivot: PivotKind::Last,
            seed: 1,
            trials: 5,
            probe: ProbeRule::Binary,
            with_duplicates: false,
        }
    }

    fn validate(&self) -> Result<()> {
        ensure!(self.n >= 2, "n must be at least 2");
        ensure!(self.trials >= 1, "trials must be at least 1");
        if let Some(spec) = self.q {
            let q = spec.resolve(self.n);
            ensure!(q <= self.n, "q = {q} exceeds n = {}", self.n);
            if self.mode == Mode::Theorem1 {
                ensure!(q >= 1, "theorem1 needs at least one query");
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub mode: Mode,
    pub n: usize,
    pub q: usize,
    pub q_spec: QuerySpec,
    pub pivot: PivotKind,
    pub trials: usize,
    pub mean_seconds: f64,
    pub mean_comparisons: f64,
    pub mean_swaps: f64,
    /// `2 n H_q`, reported by `theorem1` rows.
    pub bound: Option<f64>,
}

impl BenchRow {
    pub fn ratio(&self) -> Option<f64> {
        self.bound.map(|b| self.mean_comparisons / b)
    }
}

pub fn harmonic(q: usize) -> f64 {
    (1..=q).map(|i| 1.0 / i as f64).sum()
}

/// Upper bound on mean quickselect comparisons for `q` distinct ranks.
pub fn comparison_bound(n: usize, q: usize) -> f64 {
    2.0 * n as f64 * harmonic(q)
}

#[derive(Debug, Clone, Copy, Default)]
struct Sample {
    seconds: f64,
    comparisons: u64,
    swaps: u64,
}

struct Trial {
    rng: ChaCha8Rng,
    items: Vec<u64>,
    sorted: Vec<u64>,
    verify: bool,
}

impl Trial {
    fn new(config: &BenchConfig, index: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(index as u64));
        let n = config.n;
        let items: Vec<u64> = if config.with_duplicates {
            (0..n).map(|_| rng.gen_range(0..n as u64)).collect()
        } else {
            let mut v: Vec<u64> = (0..n as u64).collect();
            v.shuffle(&mut rng);
            v
        };
        let mut sorted = items.clone();
        sorted.sort_unstable();
        Self {
            rng,
            items,
            sorted,
            verify: !config.with_duplicates,
        }
    }

    fn distinct_ranks(&mut self, q: usize) -> Vec<usize> {
        rand::seq::index::sample(&mut self.rng, self.items.len(), q).into_vec()
    }

    fn keys(&mut self, q: usize) -> Vec<u64> {
        let n = self.items.len() as u64;
        (0..q).map(|_| self.rng.gen_range(0..n)).collect()
    }

    fn expect_search(&self, key: u64) -> SearchOutcome {
        match self.sorted.binary_search(&key) {
            Ok(r) => SearchOutcome::Found(r),
            Err(r) => SearchOutcome::NotFound(r),
        }
    }
}

/// Runs every trial of `config` and returns its rows (several for a
/// `theorem1` sweep, one otherwise).
pub fn run(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    config.validate()?;
    match config.mode {
        Mode::Theorem1 => {
            let specs: Vec<QuerySpec> = match config.q {
                Some(spec) => vec![spec],
                None => std::iter::successors(Some(2usize), |q| Some(q * 2))
                    .take_while(|&q| q <= config.n / 2)
                    .map(QuerySpec::Fixed)
                    .collect(),
            };
            specs
                .into_iter()
                .map(|spec| run_mode(config, spec))
                .collect()
        }
        Mode::SelectSort | Mode::QuicksortBaseline => {
            run_mode(config, QuerySpec::Fixed(0)).map(|r| vec![r])
        }
        _ => run_mode(config, config.q.unwrap_or(QuerySpec::Sqrt)).map(|r| vec![r]),
    }
}

fn run_mode(config: &BenchConfig, spec: QuerySpec) -> Result<BenchRow> {
    let mut samples = Vec::with_capacity(config.trials);
    let mut q_used = spec.resolve(config.n);
    for t in 0..config.trials {
        let mut trial = Trial::new(config, t);
        let pivot_seed: u64 = trial.rng.gen();
        let (sample, q) = match config.mode {
            Mode::SelectSort => select_sort(config, &mut trial, pivot_seed)?,
            Mode::SqrtSelections => selections(config, &mut trial, pivot_seed, q_used, false)?,
            Mode::Theorem1 => selections(config, &mut trial, pivot_seed, q_used, true)?,
            Mode::QuicksortBaseline => (quicksort_trial(config, &mut trial, pivot_seed)?, 0),
            Mode::SearchOld => search_old(config, &mut trial, pivot_seed, q_used)?,
            Mode::SearchNew => search_new(config, &mut trial, pivot_seed, q_used)?,
        };
        q_used = q;
        samples.push(sample);
    }
    let trials = samples.len() as f64;
    let mean = |f: fn(&Sample) -> f64| samples.iter().map(f).sum::<f64>() / trials;
    Ok(BenchRow {
        mode: config.mode,
        n: config.n,
        q: q_used,
        q_spec: if config.mode == Mode::SelectSort {
            QuerySpec::Fixed(q_used)
        } else {
            spec
        },
        pivot: config.pivot,
        trials: config.trials,
        mean_seconds: mean(|s| s.seconds),
        mean_comparisons: mean(|s| s.comparisons as f64),
        mean_swaps: mean(|s| s.swaps as f64),
        bound: (config.mode == Mode::Theorem1).then(|| comparison_bound(config.n, q_used)),
    })
}

fn select_sort(
    config: &BenchConfig,
    trial: &mut Trial,
    pivot_seed: u64,
) -> Result<(Sample, usize)> {
    let n = config.n;
    let start = Instant::now();
    let mut a = LazySortedArray::new(
        std::mem::take(&mut trial.items),
        config.pivot.build(pivot_seed),
    )?;
    let mut issued = 0;
    for k in (1..n).step_by(2) {
        a.select(k)?;
        issued += 1;
    }
    let seconds = start.elapsed().as_secs_f64();
    if trial.verify {
        ensure!(
            a.items() == &trial.sorted[..],
            "select_sort left the array unsorted"
        );
        ensure!(a.is_fully_sorted(), "select_sort left unsettled positions");
    }
    let stats = a.stats();
    Ok((
        Sample {
            seconds,
            comparisons: stats.comparisons,
            swaps: stats.swaps,
        },
        issued,
    ))
}

fn selections(
    config: &BenchConfig,
    trial: &mut Trial,
    pivot_seed: u64,
    q: usize,
    quickselect_only: bool,
) -> Result<(Sample, usize)> {
    let ranks = trial.distinct_ranks(q);
    let mut answers = Vec::with_capacity(q);
    let start = Instant::now();
    let mut a = LazySortedArray::new(
        std::mem::take(&mut trial.items),
        config.pivot.build(pivot_seed),
    )?;
    for &k in &ranks {
        answers.push(*a.select(k)?);
    }
    let seconds = start.elapsed().as_secs_f64();
    if trial.verify {
        for (&k, &got) in ranks.iter().zip(&answers) {
            ensure!(
                got == trial.sorted[k],
                "select({k}) returned {got}, expected {}",
                trial.sorted[k]
            );
        }
        ensure!(a.audit_invariant(), "marker invariant violated");
    }
    let stats = a.stats();
    let comparisons = if quickselect_only {
        stats.quickselect_comparisons()
    } else {
        stats.comparisons
    };
    Ok((
        Sample {
            seconds,
            comparisons,
            swaps: stats.swaps,
        },
        q,
    ))
}

fn quicksort_trial(config: &BenchConfig, trial: &mut Trial, pivot_seed: u64) -> Result<Sample> {
    let mut meter = Meter::new();
    let mut strategy = config.pivot.build(pivot_seed);
    let start = Instant::now();
    baseline::quicksort(&mut trial.items, &mut strategy, &mut meter);
    let seconds = start.elapsed().as_secs_f64();
    ensure!(
        trial.items == trial.sorted,
        "quicksort produced an unsorted array"
    );
    Ok(Sample {
        seconds,
        comparisons: meter.comparisons,
        swaps: meter.swaps,
    })
}

fn search_old(
    config: &BenchConfig,
    trial: &mut Trial,
    pivot_seed: u64,
    q: usize,
) -> Result<(Sample, usize)> {
    let keys = trial.keys(q);
    let mut meter = Meter::new();
    let mut strategy = config.pivot.build(pivot_seed);
    let mut answers = Vec::with_capacity(q);
    let start = Instant::now();
    baseline::quicksort(&mut trial.items, &mut strategy, &mut meter);
    for key in &keys {
        answers.push(baseline::search_sorted(
            &trial.items,
            key,
            config.probe,
            &mut meter,
        ));
    }
    let seconds = start.elapsed().as_secs_f64();
    if trial.verify {
        for (key, got) in keys.iter().zip(&answers) {
            let want = match trial.expect_search(*key) {
                SearchOutcome::Found(r) => Ok(r),
                SearchOutcome::NotFound(r) => Err(r),
            };
            ensure!(
                *got == want,
                "search({key}) on sorted array returned {got:?}"
            );
        }
    }
    Ok((
        Sample {
            seconds,
            comparisons: meter.comparisons,
            swaps: meter.swaps,
        },
        q,
    ))
}

fn search_new(
    config: &BenchConfig,
    trial: &mut Trial,
    pivot_seed: u64,
    q: usize,
) -> Result<(Sample, usize)> {
    let keys = trial.keys(q);
    let mut answers = Vec::with_capacity(q);
    let start = Instant::now();
    let mut a = LazySortedArray::new(
        std::mem::take(&mut trial.items),
        config.pivot.build(pivot_seed),
    )?;
    for key in &keys {
        answers.push(a.search_with(key, config.probe)?);
    }
    let seconds = start.elapsed().as_secs_f64();
    if trial.verify {
        for (key, got) in keys.iter().zip(&answers) {
            ensure!(
                *got == trial.expect_search(*key),
                "search({key}) returned {got:?}"
            );
        }
        ensure!(a.audit_invariant(), "marker invariant violated");
    }
    let stats = a.stats();
    Ok((
        Sample {
            seconds,
            comparisons: stats.comparisons,
            swaps: stats.swaps,
        },
        q,
    ))
}

pub const CSV_HEADER: &str = "mode,n,q,pivot,trials,mean_seconds,mean_comparisons,mean_swaps";

/// Renders rows as CSV or as markdown tables with one row per method and
/// one column per `n`.
pub fn emit(rows: &[BenchRow], format: Format) -> String {
    match format {
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.mode,
                    r.n,
                    r.q,
                    r.pivot,
                    r.trials,
                    r.mean_seconds,
                    r.mean_comparisons,
                    r.mean_swaps
                )
                .unwrap();
            }
            out
        }
        Format::Markdown => markdown(rows),
    }
}

fn markdown(rows: &[BenchRow]) -> String {
    let mut sizes: Vec<usize> = rows.iter().map(|r| r.n).collect();
    sizes.sort_unstable();
    sizes.dedup();

    let mut methods: BTreeMap<(Mode, QuerySpec, PivotKind), BTreeMap<usize, &BenchRow>> =
        BTreeMap::new();
    for r in rows {
        methods
            .entry((r.mode, r.q_spec, r.pivot))
            .or_default()
            .insert(r.n, r);
    }

    let mut out = String::new();
    let table = |out: &mut String, title: &str, cell: &dyn Fn(&BenchRow) -> String| {
        writeln!(out, "{title}\n").unwrap();
        write!(out, "| method | q | pivot |").unwrap();
        for n in &sizes {
            write!(out, " n={n} |").unwrap();
        }
        write!(out, "\n|---|---|---|").unwrap();
        for _ in &sizes {
            out.push_str("---:|");
        }
        out.push('\n');
        for ((mode, spec, pivot), by_n) in &methods {
            let q_label = match mode {
                Mode::QuicksortBaseline => "-".to_string(),
                Mode::SelectSort => "odd ranks".to_string(),
                _ => spec.to_string(),
            };
            write!(out, "| {mode} | {q_label} | {pivot} |").unwrap();
            for n in &sizes {
                match by_n.get(n) {
                    Some(r) => write!(out, " {} |", cell(r)).unwrap(),
                    None => out.push_str(" |"),
                }
            }
            out.push('\n');
        }
        out.push('\n');
    };
    table(&mut out, "Mean seconds", &|r| r.mean_seconds.to_string());
    table(&mut out, "Mean comparisons", &|r| {
        r.mean_comparisons.to_string()
    });

    let bounded: Vec<&BenchRow> = rows.iter().filter(|r| r.bound.is_some()).collect();
    if !bounded.is_empty() {
        out.push_str("Comparison bound\n\n| n | q | mean comparisons | 2nH_q | ratio |\n|---:|---:|---:|---:|---:|\n");
        for r in bounded {
            writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                r.n,
                r.q,
                r.mean_comparisons,
                r.bound.unwrap(),
                r.ratio().unwrap()
            )
            .unwrap();
        }
        out.push('\n');
    }
    out
}
