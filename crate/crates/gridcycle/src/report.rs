//! Serializable records emitted by the command-line tool.

use serde::Serialize;

use gridcycle_core::bounds::{self, Verdict};
use gridcycle_core::construction::ConstructionReport;
use gridcycle_core::expanded::LowerReport;

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Holds => "holds",
        Verdict::Violated => "violated",
        Verdict::Indeterminate => "indeterminate",
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BuildReport {
    pub n: u32,
    #[serde(rename = "L")]
    pub l_total: u64,
    pub chords: usize,
    pub avg_num: u64,
    pub avg_den: u64,
    pub max_depth: u32,
    pub depth_bound: u32,
    pub depth_ok: bool,
    pub upper_total: &'static str,
    pub upper_average: Option<&'static str>,
}

impl BuildReport {
    pub fn new(r: &ConstructionReport, chords: usize) -> Self {
        let (avg_num, avg_den) = r.average.map_or((0, 1), |a| (*a.numer(), *a.denom()));
        BuildReport {
            n: r.n,
            l_total: r.l_total,
            chords,
            avg_num,
            avg_den,
            max_depth: r.max_depth,
            depth_bound: r.depth_bound,
            depth_ok: r.max_depth <= r.depth_bound,
            upper_total: verdict(r.upper_total),
            upper_average: r.upper_average.map(verdict),
        }
    }

    pub fn text(&self) -> String {
        let avg = if self.chords == 0 {
            "none (no chords)".to_string()
        } else {
            format!(
                "{}/{} = {:.4}",
                self.avg_num,
                self.avg_den,
                self.avg_num as f64 / self.avg_den as f64
            )
        };
        format!(
            "n={}\nL={}\nchords={}\naverage={}\nmax_depth={} (bound {}, {})\nupper_total={}\nupper_average={}\n",
            self.n,
            self.l_total,
            self.chords,
            avg,
            self.max_depth,
            self.depth_bound,
            if self.depth_ok { "ok" } else { "exceeded" },
            self.upper_total,
            self.upper_average.unwrap_or("n/a"),
        )
    }
}

/// One row of the bound sweep over the constructed trees.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerifyRow {
    pub n: u32,
    #[serde(rename = "L")]
    pub l_total: u64,
    pub upper_total: f64,
    pub avg_num: u64,
    pub avg_den: u64,
    pub avg_upper: f64,
    pub avg_lower_num: u64,
    pub avg_lower_den: u64,
    pub max_depth: u32,
    pub total_ok: bool,
    pub avg_upper_ok: bool,
    pub avg_lower_ok: bool,
    pub depth_ok: bool,
    pub pass: bool,
}

impl VerifyRow {
    pub fn new(r: &ConstructionReport) -> Self {
        let n = u64::from(r.n);
        let log2 = (n as f64).log2();
        let avg = r.average.expect("sweep starts at n = 2");
        let lower = bounds::average_lower_bound(n);
        let total_ok = r.upper_total.ok();
        let avg_upper_ok = r.upper_average.is_some_and(Verdict::ok);
        let avg_lower_ok = bounds::ratio_ge(avg, lower);
        let depth_ok = r.max_depth <= r.depth_bound;
        VerifyRow {
            n: r.n,
            l_total: r.l_total,
            upper_total: 10.0 * (n * n) as f64 * log2,
            avg_num: *avg.numer(),
            avg_den: *avg.denom(),
            avg_upper: 40.0 * log2,
            avg_lower_num: *lower.numer(),
            avg_lower_den: *lower.denom(),
            max_depth: r.max_depth,
            total_ok,
            avg_upper_ok,
            avg_lower_ok,
            depth_ok,
            pass: total_ok && avg_upper_ok && avg_lower_ok && depth_ok,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct WitnessRecord {
    pub i: u32,
    pub edge_id: u32,
}

/// Lower-bound outcome for one tree.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct LowerTreeReport {
    pub n: u32,
    /// Sampling seed, absent for a tree read from a file.
    pub seed: Option<u64>,
    pub lstar: u64,
    pub bound_num: u64,
    pub bound_den: u64,
    pub margin: f64,
    pub witnesses: Vec<WitnessRecord>,
    pub pass: bool,
    pub error: Option<String>,
}

impl LowerTreeReport {
    pub fn from_report(r: &LowerReport, seed: Option<u64>, witnesses: Vec<WitnessRecord>) -> Self {
        LowerTreeReport {
            n: r.n,
            seed,
            lstar: r.lstar,
            bound_num: *r.bound.numer(),
            bound_den: *r.bound.denom(),
            margin: r.margin,
            witnesses,
            pass: true,
            error: None,
        }
    }

    pub fn failed(n: u32, seed: Option<u64>, lstar: u64, error: String) -> Self {
        let bound = bounds::lemma_bound(u64::from(n))
            .unwrap_or_else(|| bounds::theorem_bound(u64::from(n)));
        LowerTreeReport {
            n,
            seed,
            lstar,
            bound_num: *bound.numer(),
            bound_den: *bound.denom(),
            margin: bounds::margin(lstar, bound),
            witnesses: Vec::new(),
            pass: false,
            error: Some(error),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct LowerRun {
    pub n: u32,
    pub trees: usize,
    pub passed: usize,
    pub witnesses: usize,
    pub min_lstar: u64,
    pub min_margin: f64,
    pub reports: Vec<LowerTreeReport>,
}

impl LowerRun {
    pub fn new(n: u32, reports: Vec<LowerTreeReport>) -> Self {
        LowerRun {
            n,
            trees: reports.len(),
            passed: reports.iter().filter(|r| r.pass).count(),
            witnesses: reports.iter().map(|r| r.witnesses.len()).sum(),
            min_lstar: reports.iter().map(|r| r.lstar).min().unwrap_or(0),
            min_margin: reports
                .iter()
                .map(|r| r.margin)
                .fold(f64::INFINITY, f64::min),
            reports,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct SearchReport {
    pub n: u32,
    pub mode: &'static str,
    pub value: u64,
    pub tree_file: Option<String>,
    /// Exhaustive mode: number of spanning trees scanned.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trees: Option<u64>,
    /// Exhaustive mode: minimum of the perimeter sum.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lstar_min: Option<u64>,
    /// Local mode: seed, starting value, accepted moves, budget flag.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub initial: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub moves: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncated: Option<bool>,
}

impl SearchReport {
    pub fn exhaustive(
        n: u32,
        value: u64,
        trees: u64,
        lstar_min: u64,
        tree_file: Option<String>,
    ) -> Self {
        SearchReport {
            n,
            mode: "exhaustive",
            value,
            tree_file,
            trees: Some(trees),
            lstar_min: Some(lstar_min),
            seed: None,
            initial: None,
            moves: None,
            truncated: None,
        }
    }
}

/// One line of the search sweep CSV.
#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct SweepRow {
    pub n: u32,
    pub seed: u64,
    #[serde(rename = "L")]
    pub l_total: u64,
    pub avg_num: u64,
    pub avg_den: u64,
}
