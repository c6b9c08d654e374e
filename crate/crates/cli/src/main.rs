//! `ats`: balanced separators for near-tree planar graphs.

mod args;
mod bench;

use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ats_core::gen::{near_tree_planar, GenSpec, WeightMode};
use ats_core::graph::{default_beta, verify_separator, Beta, Graph, VertexId};
use ats_core::io::{
    format_vertex_list, parse_edge_list_with, parse_vertex_list, write_edge_list, ParseOptions,
};
use ats_core::oracle::{min_balanced_separator, DEFAULT_MAX_SIZE};
use ats_core::pipeline::separate_traced;
use ats_core::planar::{lt_separator_with, LtOptions};
use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::args::{parse_list, parse_ratio, parse_weight_mode};

#[derive(Parser)]
#[command(
    name = "ats",
    version,
    about = "Balanced separators for planar graphs that are almost trees"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random connected planar graph with n vertices and n + r edges.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, env = "ATS_SEED", default_value_t = 0)]
        seed: u64,
        /// unit, uniform:LO:HI or heavy:F
        #[arg(long, default_value = "unit", value_parser = parse_weight_mode)]
        weights: WeightMode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute and verify a balanced separator.
    Separate {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "2/3", value_parser = parse_ratio)]
        beta: Beta,
        /// Write the per-stage trace here.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write the separator id list here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print wall time per pipeline stage.
        #[arg(long)]
        stage_times: bool,
    },
    /// Check a separator given as ids or as a file of ids.
    Verify {
        #[command(flatten)]
        input: Input,
        /// 1-based ids, or a single path to a file holding them.
        #[arg(required = true, num_args = 1..)]
        separator: Vec<String>,
        #[arg(long, default_value = "2/3", value_parser = parse_ratio)]
        beta: Beta,
    },
    /// Exhaustive minimum balanced separator (at most 20 vertices).
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "2/3", value_parser = parse_ratio)]
        beta: Beta,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        max_size: usize,
    },
    /// Planar separator of an arbitrary connected planar graph.
    Lt {
        #[command(flatten)]
        input: Input,
        /// Use the exhaustive minimum on graphs of at most 18 vertices.
        #[arg(long)]
        small_exact: bool,
    },
    /// Run the pipeline over a grid of generated instances and write CSV.
    Bench {
        /// Vertex counts, e.g. 10000,100000.
        #[arg(long, value_parser = parse_list::<u64>)]
        n: Vec<Vec<u64>>,
        /// Excess values, e.g. 1,4,16 or 0..8.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list::<i64>)]
        r: Vec<Vec<i64>>,
        /// Number of seeds per (n, r) cell.
        #[arg(long, default_value_t = 1)]
        seeds: u64,
        /// First seed.
        #[arg(long, env = "ATS_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "unit", value_parser = parse_weight_mode)]
        weights: WeightMode,
        #[arg(long, default_value = "2/3", value_parser = parse_ratio)]
        beta: Beta,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write per-stage times (long format CSV) to this path.
        #[arg(long)]
        stage_times: Option<PathBuf>,
        /// Worker threads; defaults to the number of cores.
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Args)]
struct Input {
    /// Edge-list file.
    graph: PathBuf,
    /// Fixed-point scale for decimal weights (`w 3 0.25` with 100 -> 25).
    #[arg(long)]
    weight_scale: Option<u64>,
}

#[derive(Error, Debug)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Verification(_) => 2,
        }
    }
}

/// `Variant: message`, so scripts can match on the error kind.
fn named<E: fmt::Debug + fmt::Display>(e: E) -> CliError {
    let debug = format!("{e:?}");
    let kind: String = debug.chars().take_while(|c| c.is_alphanumeric()).collect();
    CliError::Input(format!("{kind}: {e}"))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load(input: &Input) -> Result<Graph, CliError> {
    let text = read(&input.graph)?;
    let opts = ParseOptions {
        weight_scale: input.weight_scale,
    };
    parse_edge_list_with(&text, opts)
        .map_err(|e| CliError::Input(format!("{}: {e}", input.graph.display())))
}

fn ids(vs: &[VertexId]) -> String {
    format_vertex_list(vs).trim_end().to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut out = std::io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(cmd: Command, out: &mut impl std::io::Write) -> Result<(), CliError> {
    let mut emit = |text: String| -> Result<(), CliError> {
        out.write_all(text.as_bytes())
            .map_err(|e| CliError::Input(format!("stdout: {e}")))
    };
    match cmd {
        Command::Gen {
            n,
            r,
            seed,
            weights,
            out,
        } => {
            let spec = GenSpec {
                n,
                r,
                seed,
                weight_mode: weights,
            };
            let g = near_tree_planar(&spec).map_err(named)?;
            let text = write_edge_list(&g);
            match out {
                Some(path) => write(&path, &text),
                None => emit(text),
            }
        }
        Command::Separate {
            input,
            beta,
            trace,
            out,
            stage_times,
        } => {
            let g = load(&input)?;
            let (s, tr) = separate_traced(&g, beta).map_err(named)?;
            let report = verify_separator(&g, &s.vertices, beta);
            let mut text = format!(
                "{}\nsize={} max_frac={:.4} repairs={}\n",
                ids(&s.vertices),
                s.vertices.len(),
                report.max_fraction(),
                s.stats.repairs
            );
            if stage_times {
                for (stage, ns) in &s.stats.stage_ns {
                    text.push_str(&format!("stage_ns {stage} {ns}\n"));
                }
            }
            if let Some(path) = trace {
                write(&path, &tr.to_text())?;
            }
            if let Some(path) = out {
                write(&path, &format_vertex_list(&s.vertices))?;
            }
            emit(text)?;
            if !report.passed {
                return Err(CliError::Verification(format!(
                    "largest component holds {:.4} of the weight",
                    report.max_fraction()
                )));
            }
            Ok(())
        }
        Command::Verify {
            input,
            separator,
            beta,
        } => {
            let g = load(&input)?;
            let text = match separator.as_slice() {
                [one] if Path::new(one).is_file() => read(Path::new(one))?,
                many => many.join(" "),
            };
            let s = parse_vertex_list(&text, g.n())
                .map_err(|e| CliError::Input(format!("separator: {e}")))?;
            let report = verify_separator(&g, &s, beta);
            let verdict = if report.passed { "PASS" } else { "FAIL" };
            emit(format!("{verdict} max_frac={:.4}\n", report.max_fraction()))?;
            if !report.passed {
                return Err(CliError::Verification(format!("not {beta}-balanced")));
            }
            Ok(())
        }
        Command::Oracle {
            input,
            beta,
            max_size,
        } => {
            let g = load(&input)?;
            let o = min_balanced_separator(&g, beta, max_size).map_err(named)?;
            match o.min_size {
                Some(k) => emit(format!("{k}: {}\n", ids(&o.witness))),
                None => emit(format!("none within size {max_size}\n")),
            }
        }
        Command::Lt { input, small_exact } => {
            let g = load(&input)?;
            let s = lt_separator_with(&g, LtOptions { small_exact }).map_err(named)?;
            let report = verify_separator(&g, &s.vertices, default_beta());
            let mut text = format!(
                "{}\nsize={} max_frac={:.4}\n",
                ids(&s.vertices),
                s.vertices.len(),
                report.max_fraction()
            );
            if let Some(li) = &s.level_info {
                let show = |l: Option<usize>| l.map_or("-".to_string(), |x| x.to_string());
                text.push_str(&format!(
                    "levels root={} l0={} l1={} l2={}\n",
                    li.root + 1,
                    show(li.l0),
                    li.l1,
                    show(li.l2)
                ));
            }
            if let Some(ci) = &s.cycle_info {
                text.push_str(&format!(
                    "cycle length={} inside={} outside={}\n",
                    ci.length, ci.inside_weight, ci.outside_weight
                ));
            }
            emit(text)?;
            if !report.passed {
                return Err(CliError::Verification(
                    "LT separator is not balanced".into(),
                ));
            }
            Ok(())
        }
        Command::Bench {
            n,
            r,
            seeds,
            seed,
            weights,
            beta,
            out,
            stage_times,
            threads,
        } => {
            let ns: Vec<usize> = n.concat().into_iter().map(|x| x as usize).collect();
            let rs: Vec<i64> = r.concat();
            if ns.is_empty() || rs.is_empty() {
                return Err(CliError::Input("bench needs --n and --r".into()));
            }
            let seed_list: Vec<u64> = (seed..seed.saturating_add(seeds)).collect();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.unwrap_or(0))
                .build()
                .map_err(|e| CliError::Input(e.to_string()))?;
            let outcome = pool
                .install(|| bench::run_grid(&ns, &rs, &seed_list, weights, beta))
                .map_err(CliError::Input)?;
            for (n, r, s, reason) in &outcome.skipped {
                eprintln!("skipped n={n} r={r} seed={s}: {reason}");
            }
            let csv = bench::to_csv(&outcome.records);
            match out {
                Some(path) => write(&path, &csv)?,
                None => emit(csv)?,
            }
            if let Some(path) = stage_times {
                write(&path, &bench::stage_csv(&outcome.records))?;
            }
            let unbalanced: Vec<String> = outcome
                .records
                .iter()
                .filter(|rec| !rec.balanced)
                .map(|rec| format!("n={} r={} seed={}", rec.n, rec.r, rec.seed))
                .collect();
            if !unbalanced.is_empty() {
                return Err(CliError::Verification(unbalanced.join(", ")));
            }
            Ok(())
        }
    }
}
