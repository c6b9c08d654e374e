//! Benchmark grid over generated near-trees.

use std::fmt::Write as _;
use std::time::Instant;

use ats_core::gen::{near_tree_planar, GenSpec, WeightMode};
use ats_core::graph::{verify_separator, Beta};
use ats_core::pipeline::separate;
use rayon::prelude::*;

pub const CSV_HEADER: &str = "n,r,seed,sep_size,max_frac,repairs,wall_ns";

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub n: usize,
    pub r: i64,
    pub seed: u64,
    pub separator_size: usize,
    pub max_component_fraction: f64,
    pub repairs: usize,
    pub wall_time_ns: u64,
    pub stage_times_ns: Vec<(&'static str, u64)>,
    /// Whether the separator passed verification.
    pub balanced: bool,
}

pub struct BenchOutcome {
    pub records: Vec<BenchRecord>,
    /// `(n, r, seed, reason)` for cells that could not be generated.
    pub skipped: Vec<(usize, i64, u64, String)>,
}

pub fn run_grid(
    ns: &[usize],
    rs: &[i64],
    seeds: &[u64],
    weight_mode: WeightMode,
    beta: Beta,
) -> Result<BenchOutcome, String> {
    let cells: Vec<(usize, i64, u64)> = ns
        .iter()
        .flat_map(|&n| {
            rs.iter()
                .flat_map(move |&r| seeds.iter().map(move |&s| (n, r, s)))
        })
        .collect();
    let results: Vec<Result<Result<BenchRecord, String>, String>> = cells
        .par_iter()
        .map(|&(n, r, seed)| {
            let spec = GenSpec {
                n,
                r,
                seed,
                weight_mode,
            };
            let g = match near_tree_planar(&spec) {
                Ok(g) => g,
                Err(e) => return Ok(Err(e.to_string())),
            };
            let start = Instant::now();
            let s = separate(&g, beta).map_err(|e| format!("n={n} r={r} seed={seed}: {e}"))?;
            let wall = start.elapsed().as_nanos() as u64;
            let balanced = verify_separator(&g, &s.vertices, beta).passed;
            Ok(Ok(BenchRecord {
                n,
                r,
                seed,
                separator_size: s.vertices.len(),
                max_component_fraction: s.stats.max_fraction(),
                repairs: s.stats.repairs,
                wall_time_ns: wall,
                stage_times_ns: s.stats.stage_ns,
                balanced,
            }))
        })
        .collect();
    let mut records = Vec::new();
    let mut skipped = Vec::new();
    for (&(n, r, seed), res) in cells.iter().zip(results) {
        match res? {
            Ok(rec) => records.push(rec),
            Err(reason) => skipped.push((n, r, seed, reason)),
        }
    }
    records.sort_by_key(|rec| (rec.n, rec.r, rec.seed));
    Ok(BenchOutcome { records, skipped })
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{:.6},{},{}",
            r.n, r.r, r.seed, r.separator_size, r.max_component_fraction, r.repairs, r.wall_time_ns
        );
    }
    out
}

/// Long format: one row per (cell, stage).
pub fn stage_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("n,r,seed,stage,ns\n");
    for r in records {
        for (stage, ns) in &r.stage_times_ns {
            let _ = writeln!(out, "{},{},{},{},{}", r.n, r.r, r.seed, stage, ns);
        }
    }
    out
}
