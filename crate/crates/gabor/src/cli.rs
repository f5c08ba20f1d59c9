//! Command-line front end: loads JSON systems, runs the analyses and emits
//! text reports, JSON verdicts or plot-ready CSV.
//!
//! Exit codes: 0 success, 2 malformed input (I/O, JSON, schema), 3 violated
//! precondition (e.g. a Zak frame check with N != M). Failures print one
//! machine-parsable line `error <kind>: <reason>` on stderr.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::{Path, PathBuf};

use crate::correlation::CorrelationTable;
use crate::error::GaborError;
use crate::io::{KOperatorDto, SystemDto};
use crate::kframe::{self, KOperator};
use crate::signal::GaborSystem;
use crate::{constructor, frame_analysis, zak};

#[derive(Parser)]
#[command(name = "gabor", about = "Frame diagnostics for multi-window Gabor systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct CommonArgs {
    /// Tolerance for equality-type verdicts.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Frame / Parseval / Riesz / orthonormality report for one system.
    Analyze {
        system: PathBuf,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Emit a constructed system as JSON.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Zak-transform diagnostics; CSV columns j, theta, re, im, energy.
    Zak {
        system: PathBuf,
        /// Grid size T; defaults to an exactness-safe size for the system.
        #[arg(long)]
        grid: Option<usize>,
        /// Run the N = M frame characterization instead of dumping samples.
        #[arg(long)]
        check_frame: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Perturbation bound: is the second system a frame near the first?
    Perturb {
        system: PathBuf,
        perturbed: PathBuf,
        /// Lower frame bound of the reference system.
        #[arg(long)]
        a: f64,
        /// Upper frame bound of the reference system.
        #[arg(long)]
        b: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Duality check of a pair; --complete appends windows to force duality.
    Dual {
        system: PathBuf,
        other: PathBuf,
        /// Emit a completed dual pair instead of checking the given one.
        #[arg(long)]
        complete: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Randomized Rayleigh-quotient bounds (independent frame-bound oracle).
    Oracle {
        system: PathBuf,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Half-width of the random support range.
        #[arg(long, default_value_t = 32)]
        radius: i64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// K-frame verdict in the finite periodized model.
    Kframe {
        system: PathBuf,
        operator: PathBuf,
        /// Multiplier on the base period lcm(M, N, set period).
        #[arg(long, default_value_t = 1)]
        periods: i64,
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Parseval frame with L windows for any N <= L*M.
    Parseval {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
    },
    /// Orthonormal basis at critical density N = L*M.
    Onb {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        n: i64,
    },
}

enum Failure {
    Schema(String),
    Precondition(String),
}

impl From<GaborError> for Failure {
    fn from(e: GaborError) -> Self {
        Failure::Precondition(e.to_string())
    }
}

impl Failure {
    fn report(&self) -> i32 {
        match self {
            Failure::Schema(msg) => {
                eprintln!("error schema: {msg}");
                2
            }
            Failure::Precondition(msg) => {
                eprintln!("error precondition: {msg}");
                3
            }
        }
    }
}

fn load_system(path: &Path) -> Result<GaborSystem, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Schema(format!("{}: {e}", path.display())))?;
    let dto: SystemDto = serde_json::from_str(&text)
        .map_err(|e| Failure::Schema(format!("{}: {e}", path.display())))?;
    GaborSystem::try_from(&dto).map_err(|e| Failure::Schema(e.to_string()))
}

fn load_operator(path: &Path) -> Result<KOperator, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Schema(format!("{}: {e}", path.display())))?;
    let dto: KOperatorDto = serde_json::from_str(&text)
        .map_err(|e| Failure::Schema(format!("{}: {e}", path.display())))?;
    KOperator::try_from(&dto).map_err(|e| Failure::Schema(e.to_string()))
}

fn emit_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
}

#[derive(Serialize)]
struct AnalyzeReport {
    #[serde(flatten)]
    report: frame_analysis::FrameReport,
    sufficient_lower: f64,
    sufficient_upper: f64,
}

fn run_analyze(path: &Path, common: &CommonArgs) -> Result<(), Failure> {
    let sys = load_system(path)?;
    let table = CorrelationTable::auto(&sys);
    let (a, b, _, _) = frame_analysis::sufficient_bounds(&table);
    let report = frame_analysis::analyze(&sys, common.tol)?;
    match common.format {
        Format::Json | Format::Csv => emit_json(&AnalyzeReport {
            report,
            sufficient_lower: a,
            sufficient_upper: b,
        }),
        Format::Text => {
            println!("windows L = {}", report.window_modulation_product / sys.modulation_order());
            println!("sufficient bounds: A = {a:.12}, B = {b:.12}");
            println!("bessel            : {}", report.is_bessel);
            println!("frame (sufficient): {}", report.is_frame_sufficient);
            println!("parseval          : {}", report.is_parseval);
            println!(
                "density           : card(S_N) = {} <= LM = {} is {}",
                report.card_set_period, report.window_modulation_product, report.density_ok
            );
            println!("riesz basis       : {}", report.is_riesz);
            println!("orthonormal basis : {}", report.is_orthonormal);
        }
    }
    Ok(())
}

fn run_construct(kind: &ConstructKind) -> Result<(), Failure> {
    let sys = match *kind {
        ConstructKind::Parseval { l, m, n } => constructor::construct_parseval(l, m, n)?,
        ConstructKind::Onb { l, m, n } => constructor::construct_orthonormal(l, m, n)?,
    };
    emit_json(&SystemDto::from(&sys));
    Ok(())
}

fn run_zak(
    path: &Path,
    grid: Option<usize>,
    check_frame: bool,
    common: &CommonArgs,
) -> Result<(), Failure> {
    let sys = load_system(path)?;
    let grid_size = grid.unwrap_or_else(|| zak::default_grid_size(&sys));
    if check_frame {
        let (a, b, is_frame) = zak::frame_check_nm(&sys, grid_size)?;
        match common.format {
            Format::Json | Format::Csv => emit_json(&serde_json::json!({
                "grid": grid_size,
                "lower": a,
                "upper": b,
                "is_frame": is_frame,
            })),
            Format::Text => {
                println!("zak frame check at T = {grid_size}: A = {a:.12}, B = {b:.12}, frame = {is_frame}");
            }
        }
        return Ok(());
    }
    let big_m = sys.modulation_order();
    let grids: Vec<zak::ZakGrid> = sys
        .windows()
        .iter()
        .map(|w| zak::zak_grid(w, big_m, grid_size))
        .collect();
    println!("j,theta,re,im,energy");
    for j in 0..big_m as usize {
        for t in 0..grid_size {
            let theta = t as f64 / grid_size as f64;
            let energy: f64 = grids.iter().map(|g| g.sample(j, t).norm_sqr()).sum();
            let z = grids[0].sample(j, t);
            println!("{j},{theta:.17},{:.17},{:.17},{energy:.17}", z.re, z.im);
        }
    }
    Ok(())
}

fn run_perturb(
    reference: &Path,
    perturbed: &Path,
    a: f64,
    b: f64,
    common: &CommonArgs,
) -> Result<(), Failure> {
    let sys_g = load_system(reference)?;
    let sys_h = load_system(perturbed)?;
    let outcome = frame_analysis::perturbation_bound(&sys_g, &sys_h, a, b)?;
    match common.format {
        Format::Json | Format::Csv => match outcome {
            Some((a_new, b_new, r)) => emit_json(&serde_json::json!({
                "conclusive": true, "r": r, "lower": a_new, "upper": b_new,
            })),
            None => emit_json(&serde_json::json!({ "conclusive": false })),
        },
        Format::Text => match outcome {
            Some((a_new, b_new, r)) => {
                println!("R = {r:.12}; perturbed system is a frame with bounds ({a_new:.12}, {b_new:.12})");
            }
            None => println!("inconclusive: perturbation energy reaches the lower bound"),
        },
    }
    Ok(())
}

fn run_dual(
    path_g: &Path,
    path_h: &Path,
    complete: bool,
    common: &CommonArgs,
) -> Result<(), Failure> {
    let sys_g = load_system(path_g)?;
    let sys_h = load_system(path_h)?;
    if complete {
        let (g_ext, h_ext) = constructor::dual_completion(&sys_g, &sys_h)?;
        emit_json(&serde_json::json!({
            "analysis": SystemDto::from(&h_ext),
            "synthesis": SystemDto::from(&g_ext),
        }));
        return Ok(());
    }
    let table = CorrelationTable::cross(&sys_g, &sys_h)?;
    let dual = frame_analysis::dual_check(&table, common.tol);
    match common.format {
        Format::Json | Format::Csv => emit_json(&serde_json::json!({ "dual": dual })),
        Format::Text => println!("dual pair: {dual}"),
    }
    Ok(())
}

fn run_oracle(
    path: &Path,
    trials: usize,
    seed: u64,
    radius: i64,
    common: &CommonArgs,
) -> Result<(), Failure> {
    if trials == 0 {
        return Err(Failure::Precondition("trials must be >= 1".into()));
    }
    let sys = load_system(path)?;
    let (lo, hi) = frame_analysis::randomized_rayleigh_bounds(&sys, trials, radius, seed);
    match common.format {
        Format::Json | Format::Csv => emit_json(&serde_json::json!({
            "trials": trials, "seed": seed, "radius": radius,
            "rayleigh_min": lo, "rayleigh_max": hi,
        })),
        Format::Text => {
            println!("rayleigh quotients over {trials} trials (seed {seed}): min = {lo:.12}, max = {hi:.12}");
        }
    }
    Ok(())
}

fn run_kframe(
    path: &Path,
    operator: &Path,
    periods: i64,
    common: &CommonArgs,
) -> Result<(), Failure> {
    if periods < 1 {
        return Err(Failure::Precondition("periods must be >= 1".into()));
    }
    let sys = load_system(path)?;
    let op = load_operator(operator)?;
    let model = kframe::build_model(&sys, periods);
    let verdict = kframe::kframe_verdict(&model, &op, common.tol)?;
    let range_ok = verdict.is_kframe;
    let minimal = kframe::k_minimality_check(&model, common.tol);
    let (spec_a, spec_b) = kframe::spectral_frame_bounds(&model);
    emit_json(&serde_json::json!({
        "model_period": model.period(),
        "atom_count": model.atom_count(),
        "range_check": range_ok,
        "is_kframe": verdict.is_kframe,
        "zero_operator": verdict.zero_operator,
        "a_opt": verdict.a_opt,
        "b": verdict.b,
        "spectral_bounds": [spec_a, spec_b],
        "k_minimal": minimal,
        "note": format!("verdicts hold in the finite model P={}", model.period()),
    }));
    Ok(())
}

/// Parses arguments from the process environment and runs; returns the exit
/// code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Analyze { system, common } => run_analyze(system, common),
        Command::Construct { kind } => run_construct(kind),
        Command::Zak { system, grid, check_frame, common } => {
            run_zak(system, *grid, *check_frame, common)
        }
        Command::Perturb { system, perturbed, a, b, common } => {
            run_perturb(system, perturbed, *a, *b, common)
        }
        Command::Dual { system, other, complete, common } => {
            run_dual(system, other, *complete, common)
        }
        Command::Oracle { system, trials, seed, radius, common } => {
            run_oracle(system, *trials, *seed, *radius, common)
        }
        Command::Kframe { system, operator, periods, common } => {
            run_kframe(system, operator, *periods, common)
        }
    };
    match outcome {
        Ok(()) => 0,
        Err(failure) => failure.report(),
    }
}
