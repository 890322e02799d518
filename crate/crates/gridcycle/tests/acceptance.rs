//! Acceptance suite. Each test prints one `criterion N: PASS|FAIL ...` line to
//! stderr (uncaptured) and then asserts.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gridcycle_core::bounds::{self, Verdict};
use gridcycle_core::construction::{build_t, crossing_cap, crossing_chords, validate_construction};
use gridcycle_core::expanded::{
    contract, find_long_edge, lemma_lower_check, reroute_walk, winding_number, EdgeRef,
    XSpanningTree, XVertex,
};
use gridcycle_core::matroid::{echelon_representation, sparsity};
use gridcycle_core::search::{
    count_spanning_trees, enumerate_spanning_trees, min_total_length, random_spanning_tree,
};
use gridcycle_core::{GridCoord, GridGraph, SpanningTree, SubgridRef};

const SCHEDULE: [u32; 14] = [2, 3, 4, 5, 8, 16, 25, 32, 64, 125, 128, 256, 512, 1024];

fn verdict(criterion: u32, ok: bool, elapsed: Duration, limit: Duration, detail: &str) {
    let in_time = elapsed <= limit;
    let status = if ok && in_time { "PASS" } else { "FAIL" };
    let line = format!(
        "criterion {criterion}: {status} ({:.2}s, limit {}s) {detail}\n",
        elapsed.as_secs_f64(),
        limit.as_secs()
    );
    // Direct handle writes bypass the test harness's output capture.
    let _ = std::io::stderr().write_all(line.as_bytes());
    assert!(ok, "criterion {criterion}: {detail}");
    assert!(
        in_time,
        "criterion {criterion}: took {elapsed:?}, limit {limit:?}"
    );
}

fn random_xtree(n: u32, seed: u64) -> XSpanningTree {
    XSpanningTree::from_plain(&random_spanning_tree(GridGraph::new(n).unwrap(), seed))
}

#[test]
fn criterion_1_small_construction_values() {
    let start = Instant::now();
    let expected = [0u64, 4, 16, 33];
    let got: Vec<u64> = (1..=4).map(|n| build_t(n).unwrap().l_total()).collect();
    let detail = format!("L(T_n) for n=1..4: expected {expected:?}, got {got:?}");
    verdict(
        1,
        got == expected,
        start.elapsed(),
        Duration::from_secs(1),
        &detail,
    );
}

#[test]
fn criterion_2_upper_bound_sweep() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in SCHEDULE {
        let t = build_t(n).unwrap();
        let l = t.l_total();
        let n64 = u64::from(n);
        if bounds::upper_total(l, n64) != Verdict::Holds {
            failures.push(format!("n={n}: L={l} above 10n^2 log2 n"));
        }
        if bounds::upper_average(l, n64) != Verdict::Holds {
            failures.push(format!("n={n}: average above 40 log2 n"));
        }
        if n <= 512 && t.max_depth() > 2 * (n - 1) {
            failures.push(format!(
                "n={n}: depth {} above {}",
                t.max_depth(),
                2 * (n - 1)
            ));
        }
    }
    let detail = if failures.is_empty() {
        format!("{} sizes up to 1024 within bounds", SCHEDULE.len())
    } else {
        failures.join("; ")
    };
    verdict(
        2,
        failures.is_empty(),
        start.elapsed(),
        Duration::from_secs(120),
        &detail,
    );
}

#[test]
fn criterion_3_crossing_edge_accounting() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 4..=64u32 {
        let chords = crossing_chords(n).unwrap();
        let expected = if n % 2 == 1 { 4 * n - 8 } else { 3 * n - 6 } as usize;
        if chords.len() != expected {
            failures.push(format!(
                "n={n}: {} crossing chords, expected {expected}",
                chords.len()
            ));
        }
        let cap = crossing_cap(n);
        if let Some(r) = chords.iter().find(|r| r.length > cap) {
            failures.push(format!(
                "n={n}: chord {} has length {} > {cap}",
                r.edge_id, r.length
            ));
        }
    }
    let detail = if failures.is_empty() {
        "counts 4n-8 / 3n-6 and length caps hold for n=4..64".to_string()
    } else {
        failures.join("; ")
    };
    verdict(
        3,
        failures.is_empty(),
        start.elapsed(),
        Duration::from_secs(30),
        &detail,
    );
}

#[test]
fn criterion_4_enumeration_oracle() {
    let start = Instant::now();
    let construction_values = [4u64, 16, 33];
    let mut failures = Vec::new();
    let mut minima = Vec::new();
    for n in 2..=4u32 {
        let g = GridGraph::new(n).unwrap();
        let oracle = count_spanning_trees(g);
        let visited = enumerate_spanning_trees(g, |_| {}).unwrap();
        if oracle != visited.into() {
            failures.push(format!("n={n}: enumerated {visited}, determinant {oracle}"));
        }
        let m = min_total_length(g).unwrap();
        minima.push(m.l_min);
        let avg_min = num_rational::Ratio::new(m.l_min, g.chord_count() as u64);
        if !bounds::ratio_ge(avg_min, bounds::average_lower_bound(u64::from(n))) {
            failures.push(format!(
                "n={n}: minimum average {avg_min} below the lower bound"
            ));
        }
        let cap = construction_values[n as usize - 2];
        if m.l_min > cap {
            failures.push(format!("n={n}: exact minimum L={} exceeds {cap}", m.l_min));
        }
    }
    let detail = format!(
        "tree counts 4/192/100352, exact minima {minima:?}{}",
        if failures.is_empty() {
            String::new()
        } else {
            format!("; {}", failures.join("; "))
        }
    );
    verdict(
        4,
        failures.is_empty(),
        start.elapsed(),
        Duration::from_secs(300),
        &detail,
    );
}

#[test]
fn criterion_5_lower_bound_property_suite() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut witnesses = 0usize;
    for (n, trees) in [(25u32, 100u64), (125, 10)] {
        for seed in 0..trees {
            let t = random_xtree(n, seed);
            if let Err(e) = lemma_lower_check(&t) {
                failures.push(format!("n={n} seed={seed}: {e}"));
            }
            for i in 1..=n / 5 {
                match find_long_edge(&t, i) {
                    Ok(_) => witnesses += 1,
                    Err(e) => failures.push(format!("n={n} seed={seed} i={i}: {e}")),
                }
            }
        }
    }
    let out = Command::new(env!("CARGO_BIN_EXE_gridcycle"))
        .args(["lower", "--n", "25", "--trees", "100"])
        .output()
        .unwrap();
    if out.status.code() != Some(0) {
        failures.push(format!(
            "`gridcycle lower --n 25 --trees 100` exited {:?}",
            out.status.code()
        ));
    }
    let run: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap_or_default();
    if run["witnesses"] != 500 || run["passed"] != 100 {
        failures.push("CLI lower run did not report 100 passes and 500 witnesses".into());
    }
    let detail = format!(
        "{witnesses} long-edge witnesses (expected 750); {}",
        failures.join("; ")
    );
    let ok = failures.is_empty() && witnesses == 100 * 5 + 10 * 25;
    verdict(
        5,
        ok,
        start.elapsed(),
        Duration::from_secs(300),
        detail.trim_end_matches("; "),
    );
}

/// Interior chords never gain perimeter and outputs are valid expanded trees.
fn contraction_failures(t: &XSpanningTree, sub: SubgridRef, out: &mut Vec<String>) {
    let c = match contract(t, sub) {
        Ok(c) => c,
        Err(e) => return out.push(format!("{sub:?}: {e}")),
    };
    let h = c.grid();
    if let Err(e) = h.validate() {
        out.push(format!("{sub:?}: {e}"));
    }
    if c.edge_count() + 1 != h.vertex_count() || !h.is_drawable() {
        out.push(format!(
            "{sub:?}: contraction is not a drawable spanning tree"
        ));
    }
    let host = t.grid().host();
    for id in c.host_chords() {
        let local = h.host().edge(id).unwrap();
        let global = host
            .edge_id(sub.to_global(local.a), sub.to_global(local.b))
            .unwrap();
        let before = t.cycle_perimeter(EdgeRef::Host(global)).unwrap();
        let after = c.cycle_perimeter(EdgeRef::Host(id)).unwrap();
        if after > before {
            out.push(format!(
                "{sub:?}: chord {global} perimeter grew {before} -> {after}"
            ));
        }
    }
}

#[test]
fn criterion_6_contraction_invariants() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for seed in 0..50 {
        let t = random_xtree(25, seed);
        for tile in t.grid().host().tile_5x5().unwrap() {
            contraction_failures(&t, tile, &mut failures);
        }
    }
    // Comb of the 4-grid rooted at (4,1), contracted onto its top-right 2x2 square.
    let g = GridGraph::new(4).unwrap();
    let comb = XSpanningTree::from_plain(&SpanningTree::comb(g, GridCoord::new(4, 1)).unwrap());
    let e = g
        .edge_id(GridCoord::new(3, 3), GridCoord::new(4, 3))
        .unwrap();
    let before = comb.cycle_perimeter(EdgeRef::Host(e)).unwrap();
    let c = contract(&comb, SubgridRef::new(3, 4, 3, 4)).unwrap();
    let local = c
        .grid()
        .host()
        .edge_id(GridCoord::new(1, 1), GridCoord::new(2, 1))
        .unwrap();
    let after = c.cycle_perimeter(EdgeRef::Host(local)).unwrap();
    let x = c.grid().xedges();
    let extra_ok = x.len() == 1
        && [x[0].a, x[0].b].contains(&XVertex::Host(GridCoord::new(1, 1)))
        && [x[0].a, x[0].b].contains(&XVertex::Host(GridCoord::new(2, 1)));
    if (before, after) != (6, 2) || !extra_ok {
        failures.push(format!(
            "comb example: perimeter {before} -> {after}, extra edges {x:?}"
        ));
    }
    let detail = if failures.is_empty() {
        "50 trees x 25 tiles valid and monotone; comb example 6 -> 2".to_string()
    } else {
        failures.join("; ")
    };
    verdict(
        6,
        failures.is_empty(),
        start.elapsed(),
        Duration::from_secs(120),
        &detail,
    );
}

#[test]
fn criterion_7_homotopy_nullity() {
    let start = Instant::now();
    let z0 = (12.5, 13.5);
    let mut failures = Vec::new();
    let mut checked = 0;
    for seed in 0..20 {
        let t = random_xtree(25, seed);
        let h = t.grid();
        for i in 1..=12 {
            let original = winding_number(h, &h.concentric_walk(i).unwrap(), z0);
            let rerouted = reroute_walk(&t, i).and_then(|w| winding_number(h, &w, z0));
            if original != Ok(1) || rerouted != Ok(0) {
                failures.push(format!(
                    "seed={seed} i={i}: C_i {original:?}, rerouted {rerouted:?}"
                ));
            }
            checked += 1;
        }
    }
    let detail = if failures.is_empty() {
        format!("{checked} cycles wind once, their tree reroutings wind zero times")
    } else {
        failures.join("; ")
    };
    verdict(
        7,
        failures.is_empty(),
        start.elapsed(),
        Duration::from_secs(60),
        &detail,
    );
}

#[test]
fn criterion_8_matroid_identity() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut failures = Vec::new();
    for _ in 0..100 {
        let n = rng.gen_range(2..=10u32);
        let seed: u64 = rng.gen();
        let t = random_spanning_tree(GridGraph::new(n).unwrap(), seed);
        let m = echelon_representation(&t).unwrap();
        let formula = sparsity(&t).unwrap();
        if formula != m.nnz() as u64 {
            failures.push(format!(
                "n={n} seed={seed}: formula {formula}, count {}",
                m.nnz()
            ));
        }
        if m.gf2_rank() != (n * n - 1) as usize {
            failures.push(format!("n={n} seed={seed}: rank {}", m.gf2_rank()));
        }
        if !m.chord_columns_are_cycles(t.grid()) {
            failures.push(format!("n={n} seed={seed}: a chord column is not a cycle"));
        }
    }
    let detail = if failures.is_empty() {
        "100 trees: count = formula, full row rank, chord columns are cycles".to_string()
    } else {
        failures.join("; ")
    };
    verdict(
        8,
        failures.is_empty(),
        start.elapsed(),
        Duration::from_secs(60),
        &detail,
    );
}

#[test]
fn construction_contract_holds_through_the_sweep() {
    for n in SCHEDULE.into_iter().filter(|&n| n <= 512) {
        validate_construction(&build_t(n).unwrap()).unwrap();
    }
}
