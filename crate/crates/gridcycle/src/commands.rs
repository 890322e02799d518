//! Subcommands of the `gridcycle` binary.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use gridcycle_core::construction::{build_t, validate_construction};
use gridcycle_core::expanded::{find_long_edge, lemma_lower_check, lstar, XSpanningTree};
use gridcycle_core::matroid::echelon_representation;
use gridcycle_core::search::{self, SearchBudget, ENUMERATION_LIMIT};
use gridcycle_core::{Error, GridGraph, SpanningTree};

use crate::formats::{self, FormatError};
use crate::report::{
    BuildReport, LowerRun, LowerTreeReport, SearchReport, SweepRow, VerifyRow, WitnessRecord,
};

/// Sizes visited by `verify`.
pub const SWEEP_SCHEDULE: [u32; 14] = [2, 3, 4, 5, 8, 16, 25, 32, 64, 125, 128, 256, 512, 1024];

/// Depth is checked up to this size.
pub const DEPTH_CHECK_LIMIT: u32 = 512;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("output: {0}")]
    Output(#[from] std::io::Error),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Io { .. } | CliError::Format { .. } | CliError::Output(_) => 2,
            CliError::Failed(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSize(_) | Error::TooLarge { .. } | Error::Input(_) => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Failed(other.to_string()),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Output(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.into())
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "gridcycle",
    version,
    about = "Spanning trees of square grids with short fundamental cycles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the recursive tree T_n, report its statistics and write it out.
    Build(BuildArgs),
    /// Check the upper and average bounds on T_n over a geometric sweep of sizes.
    Verify(VerifyArgs),
    /// Check the perimeter lower bound on random (or given) spanning trees.
    Lower(LowerArgs),
    /// Exhaustive minimum (n <= 4) or local search for small total cycle length.
    Search(SearchArgs),
    /// Write the echelon binary representation of the grid's graphic matroid.
    Export(ExportArgs),
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
    /// Tree file to write.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Per-chord CSV: edge_id,length,perimeter.
    #[arg(long)]
    pub stats: Option<PathBuf>,
    /// SVG drawing of the tree.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n_max: i64,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct LowerArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    #[arg(long, default_value_t = 100)]
    pub trees: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Check this tree instead of sampling.
    #[arg(long)]
    pub tree: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n: i64,
    /// Scan every spanning tree (n <= 4).
    #[arg(long)]
    pub exhaustive: bool,
    /// Number of random starting trees for local search.
    #[arg(long, default_value_t = 1)]
    pub trees: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Candidate evaluations allowed per start.
    #[arg(long, default_value_t = 100_000)]
    pub max_evals: u64,
    /// Wall-clock limit per start.
    #[arg(long)]
    pub budget_seconds: Option<f64>,
    /// File for the best tree found.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub n: Option<i64>,
    /// Tree file; defaults to T_n.
    #[arg(long)]
    pub tree: Option<PathBuf>,
    /// Matrix file; defaults to standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult {
    match cli.command {
        Command::Build(a) => build(&a, out),
        Command::Verify(a) => verify(&a, out),
        Command::Lower(a) => lower(&a, out),
        Command::Search(a) => search_cmd(&a, out),
        Command::Export(a) => export(&a, out),
    }
}

fn grid(n: i64) -> CliResult<GridGraph> {
    Ok(GridGraph::from_signed(n)?)
}

fn write_file(path: &Path, contents: &[u8]) -> CliResult {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn create(path: &Path) -> CliResult<fs::File> {
    fs::File::create(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn read_tree(path: &Path) -> CliResult<SpanningTree> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })?;
    formats::parse_tree(&text).map_err(|source| CliError::Format {
        path: path.to_owned(),
        source,
    })
}

fn json(out: &mut dyn Write, value: &impl serde::Serialize) -> CliResult {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_rows<T: serde::Serialize>(out: &mut dyn Write, rows: &[T]) -> CliResult {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

fn build(a: &BuildArgs, out: &mut dyn Write) -> CliResult {
    let g = grid(a.n)?;
    let t = build_t(g.n())?;
    if let Some(p) = &a.out {
        write_file(p, formats::write_tree(&t).as_bytes())?;
    }
    if let Some(p) = &a.svg {
        write_file(p, formats::tree_svg(&t).as_bytes())?;
    }
    if let Some(p) = &a.stats {
        let stats = if g.n() == 1 {
            gridcycle_core::CycleStats {
                n: 1,
                records: Vec::new(),
                l_total: 0,
                p_total: 0,
            }
        } else {
            t.total_length()?
        };
        formats::write_stats_csv(&stats, create(p)?).map_err(|source| CliError::Format {
            path: p.clone(),
            source,
        })?;
    }
    let checked = validate_construction(&t);
    let report = match &checked {
        Ok(r) => BuildReport::new(r, g.chord_count()),
        Err(e) => return Err(CliError::Failed(e.to_string())),
    };
    match a.format {
        Format::Text => out.write_all(report.text().as_bytes())?,
        Format::Json => json(out, &report)?,
        Format::Csv => csv_rows(out, &[report])?,
    }
    Ok(())
}

fn verify_rows(n_max: u32) -> CliResult<Vec<VerifyRow>> {
    let sizes: Vec<u32> = SWEEP_SCHEDULE
        .iter()
        .copied()
        .filter(|&n| n <= n_max)
        .collect();
    sizes
        .par_iter()
        .map(|&n| {
            let t = build_t(n)?;
            let mut row = VerifyRow::new(&validate_construction(&t)?);
            if n > DEPTH_CHECK_LIMIT {
                row.pass = row.total_ok && row.avg_upper_ok && row.avg_lower_ok;
            }
            Ok(row)
        })
        .collect()
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    if a.n_max < 2 {
        return Err(CliError::Usage(format!(
            "--n-max must be at least 2, got {}",
            a.n_max
        )));
    }
    let n_max = u32::try_from(a.n_max).unwrap_or(u32::MAX);
    let rows = verify_rows(n_max)?;
    match a.format {
        Format::Json => json(out, &rows)?,
        _ => csv_rows(out, &rows)?,
    }
    let failed: Vec<u32> = rows.iter().filter(|r| !r.pass).map(|r| r.n).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "COUNTEREXAMPLE: bounds fail for n = {failed:?}"
        )))
    }
}

fn lower_one(t: &SpanningTree, seed: Option<u64>) -> LowerTreeReport {
    let n = t.grid().n();
    let xt = XSpanningTree::from_plain(t);
    let report = match lemma_lower_check(&xt) {
        Ok(r) => r,
        Err(e) => return LowerTreeReport::failed(n, seed, lstar(&xt), e.to_string()),
    };
    let mut witnesses = Vec::new();
    if n.is_multiple_of(5) {
        for i in 1..=n / 5 {
            match find_long_edge(&xt, i) {
                Ok(w) => witnesses.push(WitnessRecord {
                    i,
                    edge_id: w.edge_id,
                }),
                Err(e) => return LowerTreeReport::failed(n, seed, report.lstar, e.to_string()),
            }
        }
    }
    LowerTreeReport::from_report(&report, seed, witnesses)
}

fn lower(a: &LowerArgs, out: &mut dyn Write) -> CliResult {
    let reports = match (&a.tree, a.n) {
        (Some(p), n) => {
            let t = read_tree(p)?;
            if n.is_some_and(|n| n != i64::from(t.grid().n())) {
                return Err(CliError::Usage("--n does not match the tree file".into()));
            }
            if t.grid().n() < 2 {
                return Err(CliError::Usage("the lower bound needs n >= 2".into()));
            }
            vec![lower_one(&t, None)]
        }
        (None, Some(n)) => {
            let g = grid(n)?;
            if g.n() < 2 {
                return Err(CliError::Usage("the lower bound needs n >= 2".into()));
            }
            let seeds: Vec<u64> = (0..a.trees as u64)
                .map(|k| a.seed.wrapping_add(k))
                .collect();
            seeds
                .par_iter()
                .map(|&s| lower_one(&search::random_spanning_tree(g, s), Some(s)))
                .collect()
        }
        (None, None) => return Err(CliError::Usage("give --n or --tree".into())),
    };
    let run = LowerRun::new(reports[0].n, reports);
    json(out, &run)?;
    if run.passed == run.trees {
        Ok(())
    } else {
        Err(CliError::Failed(format!(
            "COUNTEREXAMPLE: {} of {} trees failed the lower-bound check",
            run.trees - run.passed,
            run.trees
        )))
    }
}

fn search_cmd(a: &SearchArgs, out: &mut dyn Write) -> CliResult {
    let g = grid(a.n)?;
    let tree_file = a.out.as_ref().map(|p| p.display().to_string());
    if a.exhaustive {
        if g.n() > ENUMERATION_LIMIT {
            return Err(CliError::Usage(format!(
                "exhaustive search is limited to n <= {ENUMERATION_LIMIT} (got {}); \
                 run without --exhaustive to sample and locally improve trees",
                g.n()
            )));
        }
        let m = search::min_total_length(g)?;
        if let Some(p) = &a.out {
            write_file(p, formats::write_tree(&m.witness).as_bytes())?;
        }
        let report = SearchReport::exhaustive(g.n(), m.l_min, m.trees, m.lstar_min, tree_file);
        match a.format {
            Format::Csv => {
                let rows = [SweepRow {
                    n: g.n(),
                    seed: 0,
                    l_total: m.l_min,
                    avg_num: 0,
                    avg_den: 0,
                }];
                csv_rows(out, &avg_rows(g, &rows))?
            }
            _ => json(out, &report)?,
        }
        return Ok(());
    }
    if a.trees == 0 {
        return Err(CliError::Usage("--trees must be positive".into()));
    }
    let outcomes: Vec<_> = (0..a.trees)
        .into_par_iter()
        .map(|k| {
            let seed = a.seed.wrapping_add(k);
            let t0 = search::random_spanning_tree(g, seed);
            let budget = SearchBudget {
                max_trees: a.max_evals,
                max_seconds: a.budget_seconds,
                seed,
            };
            let start = Instant::now();
            let stop = || {
                a.budget_seconds
                    .is_some_and(|s| start.elapsed().as_secs_f64() >= s)
            };
            (seed, search::local_search(&t0, &budget, stop))
        })
        .collect();
    let best = outcomes
        .iter()
        .min_by_key(|(_, o)| o.l_total)
        .expect("at least one start");
    if let Some(p) = &a.out {
        write_file(p, formats::write_tree(&best.1.tree).as_bytes())?;
    }
    match a.format {
        Format::Csv => {
            let rows: Vec<SweepRow> = outcomes
                .iter()
                .map(|(s, o)| SweepRow {
                    n: g.n(),
                    seed: *s,
                    l_total: o.l_total,
                    avg_num: 0,
                    avg_den: 0,
                })
                .collect();
            csv_rows(out, &avg_rows(g, &rows))?
        }
        _ => {
            let reports: Vec<SearchReport> = outcomes
                .iter()
                .map(|(s, o)| SearchReport {
                    n: g.n(),
                    mode: "local",
                    value: o.l_total,
                    tree_file: (s == &best.0).then(|| tree_file.clone()).flatten(),
                    trees: None,
                    lstar_min: None,
                    seed: Some(*s),
                    initial: Some(o.initial),
                    moves: Some(o.moves),
                    truncated: Some(o.truncated),
                })
                .collect();
            json(out, &reports)?
        }
    }
    Ok(())
}

/// Fills in the reduced average `L / chords`.
fn avg_rows(g: GridGraph, rows: &[SweepRow]) -> Vec<SweepRow> {
    let chords = g.chord_count() as u64;
    rows.iter()
        .map(|r| {
            let (num, den) = if chords == 0 {
                (0, 1)
            } else {
                let d = gcd(r.l_total, chords);
                (r.l_total / d, chords / d)
            };
            SweepRow {
                avg_num: num,
                avg_den: den,
                ..*r
            }
        })
        .collect()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

fn export(a: &ExportArgs, out: &mut dyn Write) -> CliResult {
    let t = match (&a.tree, a.n) {
        (Some(p), n) => {
            let t = read_tree(p)?;
            if n.is_some_and(|n| n != i64::from(t.grid().n())) {
                return Err(CliError::Usage("--n does not match the tree file".into()));
            }
            t
        }
        (None, Some(n)) => build_t(grid(n)?.n())?,
        (None, None) => return Err(CliError::Usage("give --n or --tree".into())),
    };
    let m = echelon_representation(&t).map_err(|e| match e {
        Error::EmptyMatroid => CliError::Usage(e.to_string()),
        other => other.into(),
    })?;
    match &a.out {
        Some(p) => {
            let mut f = std::io::BufWriter::new(create(p)?);
            formats::write_matrix(&m, &mut f)
                .and_then(|()| f.flush())
                .map_err(|source| CliError::Io {
                    path: p.clone(),
                    source,
                })?;
            writeln!(out, "rows={} cols={} nnz={}", m.rows(), m.cols(), m.nnz())?;
        }
        None => formats::write_matrix(&m, out)?,
    }
    Ok(())
}
