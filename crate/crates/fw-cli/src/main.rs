//! `fwcheck`: run the three loop orders on edge-list instances, search
//! instance families for repeat-count extrema, and fuzz the repeat bounds.
//!
//! Exit codes: 0 success / bound respected, 1 correctness or theorem
//! mismatch, 2 input or budget error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use fw_core::{
    apsp_bellman_ford, default_cap, init_matrix, run_repeated, validate_no_negative_cycle,
    PassOrder,
};
use fw_cli::families::{InstanceFamily, RandomParams};
use fw_cli::format::{parse_edge_list, render_matrix};
use fw_cli::minimize::minimize_witness;
use fw_cli::report::{fuzz_report_text, search_report_text};
use fw_cli::search::{find_min_repeats_extremum, fuzz_theorems};

#[derive(Parser)]
#[command(name = "fwcheck", version, about = "Loop-order experiments for triple-loop shortest path passes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Kij,
    Ijk,
    Ikj,
}

impl From<OrderArg> for PassOrder {
    fn from(o: OrderArg) -> PassOrder {
        match o {
            OrderArg::Kij => PassOrder::Kij,
            OrderArg::Ijk => PassOrder::Ijk,
            OrderArg::Ikj => PassOrder::Ikj,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Unit path with permuted labels, n! instances.
    PermPath,
    /// Every unit-weight digraph on n vertices.
    UnitDigraphs,
    /// Seeded random weighted instances.
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Run repeated passes on an instance and diff against true distances.
    Solve {
        /// Edge-list file ("n m" header, then "tail head weight" lines).
        file: PathBuf,
        #[arg(long, value_enum)]
        order: OrderArg,
        /// Number of passes to run.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        repeats: u32,
        /// Print every per-pass snapshot and changed flag.
        #[arg(long)]
        trace: bool,
    },
    /// Exhaustively search a family for repeat-count extrema.
    Search {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Vertex count of the family members.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        order: OrderArg,
        /// Pass cap; defaults to max(3, n).
        #[arg(long)]
        cap: Option<usize>,
        /// Instances to draw (random family only).
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Edge probability (random family only).
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        #[arg(long, default_value_t = -5)]
        weight_min: i64,
        #[arg(long, default_value_t = 20)]
        weight_max: i64,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Witnesses to include in the report.
        #[arg(long, default_value_t = 25)]
        witnesses: usize,
    },
    /// Check KIJ^1 = IJK^3 = IKJ^2 = true distances on random instances.
    Fuzz {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        #[arg(long, default_value_t = -5)]
        weight_min: i64,
        #[arg(long, default_value_t = 20)]
        weight_max: i64,
        #[arg(long, default_value_t = 1000)]
        count: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 25)]
        witnesses: usize,
    },
}

fn main() -> ExitCode {
    if let Err(msg) = configure_workers() {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Solve { file, order, repeats, trace } => solve(&file, order.into(), repeats as usize, trace),
        Command::Search { family, n, order, cap, count, seed, density, weight_min, weight_max, out, witnesses } => {
            let family = match family {
                FamilyArg::PermPath => InstanceFamily::PermutationPath { n },
                FamilyArg::UnitDigraphs => InstanceFamily::AllUnitDigraphs { n },
                FamilyArg::Random => InstanceFamily::RandomWeighted {
                    params: RandomParams { n, density, weight_min, weight_max },
                    count,
                    seed,
                },
            };
            search(&family, order.into(), cap, out.as_deref(), witnesses)
        }
        Command::Fuzz { n, density, weight_min, weight_max, count, seed, out, witnesses } => {
            let params = RandomParams { n, density, weight_min, weight_max };
            fuzz(&params, count, seed, out.as_deref(), witnesses)
        }
    };
    ExitCode::from(code)
}

/// `FW_WORKERS` bounds parallelism; the default is machine parallelism.
fn configure_workers() -> Result<(), String> {
    match std::env::var("FW_WORKERS") {
        Ok(raw) => {
            let workers: usize = raw
                .parse()
                .ok()
                .filter(|&w| w >= 1)
                .ok_or_else(|| format!("FW_WORKERS must be a positive integer, got {raw:?}"))?;
            rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build_global()
                .map_err(|e| e.to_string())
        }
        Err(_) => Ok(()),
    }
}

fn solve(file: &std::path::Path, order: PassOrder, repeats: usize, trace: bool) -> u8 {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return 2;
        }
    };
    let g = match parse_edge_list(&text) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if let Err(cycle) = validate_no_negative_cycle(&g) {
        eprintln!("error: instance rejected: {cycle}");
        return 2;
    }
    let run = match run_repeated(&init_matrix(&g), order, repeats) {
        Ok(run) => run,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if trace {
        for (pass, (snap, changed)) in run.snapshots.iter().zip(&run.changed).enumerate() {
            println!("pass {} ({}changed):", pass + 1, if *changed { "" } else { "un" });
            print!("{}", render_matrix(snap));
        }
    }
    let finished = run.final_matrix();
    println!("final matrix after {repeats} {order} pass(es):");
    print!("{}", render_matrix(finished));

    let oracle = apsp_bellman_ford(&g).expect("validated instance has an oracle");
    if *finished == oracle {
        println!("matches the true distances");
        0
    } else {
        let diff = finished.diff(&oracle);
        println!("differs from the true distances at {} entr{}:", diff.len(), if diff.len() == 1 { "y" } else { "ies" });
        for (i, j) in diff {
            println!("  d[{i},{j}] = {} but true distance is {}", finished.get(i, j), oracle.get(i, j));
        }
        1
    }
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn search(
    family: &InstanceFamily,
    order: PassOrder,
    cap: Option<usize>,
    out: Option<&std::path::Path>,
    witnesses: usize,
) -> u8 {
    let cap = cap.unwrap_or_else(|| default_cap(family.n()));
    let report = match find_min_repeats_extremum(family, order, cap) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if let Err(msg) = emit(&search_report_text(&report, witnesses), out) {
        eprintln!("error: {msg}");
        return 2;
    }
    if report.bound_respected() {
        0
    } else {
        eprintln!(
            "theorem bound violated: max repeats {} over bound {} ({} cap-exceeded)",
            report.max_repeats_observed,
            order.repeat_bound(),
            report.cap_exceeded.len()
        );
        1
    }
}

fn fuzz(params: &RandomParams, count: u64, seed: u64, out: Option<&std::path::Path>, witnesses: usize) -> u8 {
    let report = match fuzz_theorems(params, count, seed) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if let Err(msg) = emit(&fuzz_report_text(&report, witnesses), out) {
        eprintln!("error: {msg}");
        return 2;
    }
    if report.violations.is_empty() {
        return 0;
    }
    // A violation falsifies the implementation; shrink each witness before
    // reporting it.
    eprintln!("{} violation(s); minimized witnesses:", report.violations.len());
    for v in report.violations.iter().take(witnesses) {
        let bound = v.order.repeat_bound();
        let small = minimize_witness(&v.instance, v.order, bound + 1, bound);
        eprintln!(
            "  order {} n={} edges: {}",
            v.order,
            small.n(),
            fw_cli::format::edge_list_inline(&small)
        );
    }
    1
}
