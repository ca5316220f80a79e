use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use lazysort::{PivotKind, ProbeRule};
use lazysort_bench::{emit, run, BenchConfig, Format, Mode, QuerySpec};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PivotArg {
    Last,
    Random,
    Mom,
}

impl From<PivotArg> for PivotKind {
    fn from(p: PivotArg) -> Self {
        match p {
            PivotArg::Last => PivotKind::Last,
            PivotArg::Random => PivotKind::Random,
            PivotArg::Mom => PivotKind::MedianOfMedians,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProbeArg {
    Binary,
    Interpolation,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Markdown,
}

/// Times lazy selection and search against a sort-then-search baseline.
#[derive(Debug, Parser)]
#[command(version)]
struct Args {
    /// Comma-separated modes: select_sort, sqrt_selections,
    /// quicksort_baseline, search_old, search_new, theorem1.
    #[arg(long, value_delimiter = ',', required = true, value_parser = parse_mode)]
    mode: Vec<Mode>,
    /// Comma-separated input sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// Query count: an integer, `sqrt`, or `n/<d>`.
    #[arg(long, value_parser = parse_q)]
    q: Option<QuerySpec>,
    #[arg(long, value_enum, default_value = "last")]
    pivot: PivotArg,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    #[arg(long, value_enum, default_value = "binary")]
    probe: ProbeArg,
    /// Draw items with repetition instead of permuting 0..n.
    #[arg(long)]
    with_duplicates: bool,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: anyhow::Error| e.to_string())
}

fn parse_q(s: &str) -> Result<QuerySpec, String> {
    s.parse().map_err(|e: anyhow::Error| e.to_string())
}

fn main() -> ExitCode {
    let args = Args::parse();
    let mut rows = Vec::new();
    for &mode in &args.mode {
        for &n in &args.n {
            let config = BenchConfig {
                mode,
                n,
                q: args.q,
                pivot: args.pivot.into(),
                seed: args.seed,
                trials: args.trials,
                probe: match args.probe {
                    ProbeArg::Binary => ProbeRule::Binary,
                    ProbeArg::Interpolation => ProbeRule::Interpolation,
                },
                with_duplicates: args.with_duplicates,
            };
            if n < 2 || args.trials == 0 || args.q.is_some_and(|q| q.resolve(n) > n) {
                eprintln!("error: invalid configuration for {mode} at n = {n}");
                return ExitCode::from(2);
            }
            match run(&config) {
                Ok(r) => rows.extend(r),
                Err(e) => {
                    eprintln!("error: {mode} at n = {n}: {e:#}");
                    return ExitCode::from(1);
                }
            }
        }
    }
    for r in &rows {
        if let (Some(bound), Some(ratio)) = (r.bound, r.ratio()) {
            eprintln!(
                "theorem1 n={} q={} mean={:.1} bound={:.1} ratio={:.4}",
                r.n, r.q, r.mean_comparisons, bound, ratio
            );
        }
    }
    let format = match args.format {
        FormatArg::Csv => Format::Csv,
        FormatArg::Markdown => Format::Markdown,
    };
    print!("{}", emit(&rows, format));
    ExitCode::SUCCESS
}
