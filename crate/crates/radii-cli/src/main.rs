//! `radii`: solve and certify radii of lemniscate and Janowski
//! starlikeness/convexity for Bessel-type, Lommel and odd-degree Legendre
//! functions.
//!
//! Exit codes: 0 success; 2 invalid problem or argument; 3 numerical
//! failure (non-convergence, missing sign change, cap reached, pole);
//! 4 certification failure; 64 usage error; 65 unusable config file.

mod args;
mod jobs;
mod output;

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::json;

use radii_core::solver::solve_radius;
use radii_core::zeros::{zero_ladder, ComboKind, ScanParams, ZeroTarget};
use radii_core::{certify, CertifyOptions, SeriesConfig};

use jobs::{run_table, Format, JobConfig};
use output::JobOutcome;

#[derive(Parser)]
#[command(
    name = "radii",
    version,
    about = "Radii of starlikeness and convexity for special functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one radius problem.
    Compute {
        #[command(flatten)]
        problem: args::ProblemArgs,
        /// Bisection tolerance.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Also certify the solved radius.
        #[arg(long)]
        certify: bool,
        /// Relative offset of the certification test circles.
        #[arg(long, default_value_t = 1e-3)]
        epsilon: f64,
        /// Certification angles per half circle.
        #[arg(long, default_value_t = 256)]
        angles: usize,
        /// Radial step of the brute-force oracle.
        #[arg(long = "oracle-step", default_value_t = 1e-4)]
        oracle_step: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a batch of problems from a config file.
    Table {
        /// Path to the job config (TOML).
        #[arg(long)]
        config: PathBuf,
        /// Worker threads (default: logical CPUs).
        #[arg(long)]
        threads: Option<usize>,
        /// Override the config's output format.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Override the config's output path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the smallest positive zeros of a function combination.
    Zeros {
        #[command(flatten)]
        selection: args::Selection,
        /// Combination to scan: fn | dfn | combo:<c>.
        #[arg(long, value_parser = args::parse_combo)]
        combo: ComboKind,
        /// How many zeros to report.
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Bisection tolerance.
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Solve and certify, emitting the certificate as JSON.
    Certify {
        #[command(flatten)]
        problem: args::ProblemArgs,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = 1e-3)]
        epsilon: f64,
        #[arg(long, default_value_t = 256)]
        angles: usize,
        #[arg(long = "oracle-step", default_value_t = 1e-4)]
        oracle_step: f64,
        /// Certify this radius instead of the solved one (testing hook).
        #[arg(long = "radius-override")]
        radius_override: Option<f64>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn core_failure(e: radii_core::Error) -> Failure {
    use radii_core::Error as E;
    let code = match e {
        E::InvalidSpec(_) | E::InvalidProblem(_) | E::InvalidArgument(_) => 2,
        E::NonConvergence { .. }
        | E::PoleAtZero { .. }
        | E::NoSignChange { .. }
        | E::BracketFailure(_)
        | E::CapReached { .. } => 3,
        E::CertificationFailure { .. } => 4,
    };
    Failure {
        code,
        message: format!("error: {e}"),
    }
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
        }
    };
    let cfg = match series_config_from_env() {
        Ok(cfg) => cfg,
        Err(message) => {
            eprintln!("{message}");
            return 64;
        }
    };
    let result = match cli.command {
        Command::Compute {
            problem,
            tol,
            certify,
            epsilon,
            angles,
            oracle_step,
            format,
        } => cmd_compute(
            problem,
            tol,
            certify,
            epsilon,
            angles,
            oracle_step,
            format,
            &cfg,
        ),
        Command::Table {
            config,
            threads,
            format,
            out,
        } => cmd_table(config, threads, format, out, &cfg),
        Command::Zeros {
            selection,
            combo,
            count,
            tol,
            format,
        } => cmd_zeros(selection, combo, count, tol, format, &cfg),
        Command::Certify {
            problem,
            tol,
            epsilon,
            angles,
            oracle_step,
            radius_override,
        } => cmd_certify(
            problem,
            tol,
            epsilon,
            angles,
            oracle_step,
            radius_override,
            &cfg,
        ),
    };
    match result {
        Ok(()) => 0,
        Err(failure) => {
            eprintln!("{}", failure.message);
            failure.code
        }
    }
}

/// `RADII_MAX_TERMS` overrides the series term cap without flag churn.
fn series_config_from_env() -> Result<SeriesConfig, String> {
    let mut cfg = SeriesConfig::default();
    if let Ok(text) = std::env::var("RADII_MAX_TERMS") {
        cfg.max_terms = text
            .parse()
            .map_err(|_| format!("RADII_MAX_TERMS must be a positive integer, got {text:?}"))?;
        cfg.validate()
            .map_err(|e| format!("RADII_MAX_TERMS rejected: {e}"))?;
    }
    Ok(cfg)
}

#[allow(clippy::too_many_arguments)]
fn cmd_compute(
    problem_args: args::ProblemArgs,
    tol: f64,
    with_certificate: bool,
    epsilon: f64,
    angles: usize,
    oracle_step: f64,
    format: Format,
    cfg: &SeriesConfig,
) -> Result<(), Failure> {
    let problem = problem_args.problem().map_err(core_failure)?;
    let result = solve_radius(&problem, tol, cfg).map_err(core_failure)?;
    let certificate = if with_certificate {
        let opts = CertifyOptions {
            epsilon,
            n_angles: angles,
            oracle_step,
        };
        Some(certify(&problem, result.radius, &opts, cfg).map_err(core_failure)?)
    } else {
        None
    };
    let outcomes = [JobOutcome {
        problem,
        outcome: Ok((result, certificate)),
    }];
    match format {
        Format::Csv => print!("{}", output::csv_table(&outcomes, with_certificate)),
        Format::Json => {
            let serde_json::Value::Array(mut rows) = output::json_rows(&outcomes) else {
                unreachable!("json_rows returns an array");
            };
            let body = output::envelope(rows.remove(0));
            println!(
                "{}",
                serde_json::to_string_pretty(&body).expect("serializable")
            );
        }
    }
    Ok(())
}

fn cmd_table(
    config_path: PathBuf,
    threads: Option<usize>,
    format_flag: Option<Format>,
    out_flag: Option<PathBuf>,
    cfg: &SeriesConfig,
) -> Result<(), Failure> {
    let fail65 = |message: String| Failure { code: 65, message };
    let text = std::fs::read_to_string(&config_path)
        .map_err(|e| fail65(format!("cannot read {}: {e}", config_path.display())))?;
    let config: JobConfig =
        toml::from_str(&text).map_err(|e| fail65(format!("config parse error: {e}")))?;
    if config.jobs.is_empty() {
        return Err(fail65("config contains no jobs".into()));
    }
    let outcomes =
        run_table(&config, threads, cfg).map_err(|message| Failure { code: 2, message })?;

    let format = format_flag.or(config.output).unwrap_or(Format::Csv);
    let rendered = match format {
        Format::Csv => output::csv_table(&outcomes, config.certify),
        Format::Json => {
            let body = output::envelope(json!({ "rows": output::json_rows(&outcomes) }));
            let mut text = serde_json::to_string_pretty(&body).expect("serializable");
            text.push('\n');
            text
        }
    };
    match out_flag.or(config.out_path) {
        Some(path) => std::fs::write(&path, rendered)
            .map_err(|e| fail65(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{rendered}"),
    }

    if outcomes.iter().any(|job| job.outcome.is_ok()) {
        Ok(())
    } else {
        Err(Failure {
            code: 3,
            message: "error: every job failed".into(),
        })
    }
}

fn cmd_zeros(
    selection: args::Selection,
    combo: ComboKind,
    count: usize,
    tol: f64,
    format: Format,
    cfg: &SeriesConfig,
) -> Result<(), Failure> {
    let family = selection.family_spec().map_err(core_failure)?;
    let target = ZeroTarget { family, combo };
    let rungs = zero_ladder(&target, count, &ScanParams::for_family(&family), tol, cfg)
        .map_err(core_failure)?;
    match format {
        Format::Csv => print!("{}", output::csv_zeros(&family, combo, &rungs)),
        Format::Json => {
            let body = output::envelope(output::json_zeros(&family, combo, &rungs));
            println!(
                "{}",
                serde_json::to_string_pretty(&body).expect("serializable")
            );
        }
    }
    Ok(())
}

fn cmd_certify(
    problem_args: args::ProblemArgs,
    tol: f64,
    epsilon: f64,
    angles: usize,
    oracle_step: f64,
    radius_override: Option<f64>,
    cfg: &SeriesConfig,
) -> Result<(), Failure> {
    let problem = problem_args.problem().map_err(core_failure)?;
    let radius = match radius_override {
        Some(r) => r,
        None => {
            solve_radius(&problem, tol, cfg)
                .map_err(core_failure)?
                .radius
        }
    };
    let opts = CertifyOptions {
        epsilon,
        n_angles: angles,
        oracle_step,
    };
    let certificate = certify(&problem, radius, &opts, cfg).map_err(core_failure)?;
    let body = output::envelope(serde_json::to_value(&certificate).expect("serializable"));
    println!(
        "{}",
        serde_json::to_string_pretty(&body).expect("serializable")
    );
    Ok(())
}
