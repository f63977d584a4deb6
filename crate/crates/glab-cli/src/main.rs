//! `glab` — configuration-driven experiment runner.
//!
//! Subcommands:
//!   glab run <config-file> [--workers N] [--out DIR]
//!   glab plot <csv> --spec <name> [--out FILE]
//!   glab verify <suite-name> [--out DIR]
//!
//! `GLAB_MASTER_SEED` overrides the config's master seed. Exit codes:
//! 0 ok, 2 invalid config, 3 capacity guard, 4 invariant violation.

mod config;
mod digest;
mod error;
mod record;
mod runner;
mod svg;
mod verify;

use std::env;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use config::ExperimentConfig;
use error::{CliError, CliResult};
use svg::PlotSpec;

const USAGE: &str = "\
glab — percolation / LCS experiment lab

USAGE:
  glab run <config-file> [--workers N] [--out DIR]
  glab plot <csv> --spec <name> [--out FILE]
  glab verify <suite-name> [--out DIR]

SUITES: oracle-suite, resample-suite, partition-suite
PLOT SPECS: deviation-loglog, convergence, shape-points
ENV: GLAB_MASTER_SEED overrides the config's master_seed.

EXIT CODES: 0 ok, 1 environment, 2 invalid config, 3 capacity, 4 invariant violation.
";

fn main() -> ExitCode {
    let args: Vec<String> = env::args().skip(1).collect();
    match dispatch(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.exit_code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn dispatch(args: &[String]) -> CliResult<()> {
    let mut it = args.iter();
    match it.next().map(String::as_str) {
        Some("run") => cmd_run(&args[1..]),
        Some("plot") => cmd_plot(&args[1..]),
        Some("verify") => cmd_verify(&args[1..]),
        Some("--help") | Some("-h") | None => {
            print!("{USAGE}");
            Ok(())
        }
        Some(other) => Err(CliError::InvalidConfig(format!(
            "unknown subcommand {other:?}\n\n{USAGE}"
        ))),
    }
}

fn seed_override() -> CliResult<Option<u64>> {
    match env::var("GLAB_MASTER_SEED") {
        Ok(v) => v
            .parse()
            .map(Some)
            .map_err(|e| CliError::InvalidConfig(format!("GLAB_MASTER_SEED={v:?}: {e}"))),
        Err(_) => Ok(None),
    }
}

fn cmd_run(args: &[String]) -> CliResult<()> {
    let mut config_path = None;
    let mut workers = None;
    let mut out = None;
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--workers" => {
                let v = it
                    .next()
                    .ok_or_else(|| CliError::InvalidConfig("--workers needs a value".into()))?;
                workers = Some(v.parse::<usize>().map_err(|e| {
                    CliError::InvalidConfig(format!("--workers {v:?}: {e}"))
                })?);
            }
            "--out" => {
                out = Some(PathBuf::from(it.next().ok_or_else(|| {
                    CliError::InvalidConfig("--out needs a value".into())
                })?));
            }
            other if config_path.is_none() => config_path = Some(PathBuf::from(other)),
            other => {
                return Err(CliError::InvalidConfig(format!(
                    "unexpected argument {other:?}"
                )))
            }
        }
    }
    let config_path =
        config_path.ok_or_else(|| CliError::InvalidConfig("run needs a config file".into()))?;
    let text = fs::read_to_string(&config_path)
        .map_err(|e| CliError::Other(format!("read {config_path:?}: {e}")))?;
    let config = ExperimentConfig::parse(&text, seed_override()?)?;

    let out_dir = out
        .or_else(|| config.output_dir.clone().map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("glab-out").join(config.experiment.name()));
    let workers = workers.or(config.workers).unwrap_or(1);
    if workers == 0 {
        return Err(CliError::InvalidConfig("workers must be >= 1".into()));
    }

    let record = runner::run(&config, &out_dir, workers)?;
    println!(
        "{} [{}] -> {} ({} data file(s), {} ms)",
        record.experiment,
        record.config_hash,
        out_dir.display(),
        record.files.len(),
        record.finished_unix_ms - record.started_unix_ms
    );
    for f in &record.files {
        println!("  {}  {} bytes  fnv64 {}", f.name, f.bytes, f.fnv64);
    }
    Ok(())
}

fn cmd_plot(args: &[String]) -> CliResult<()> {
    let mut csv_path = None;
    let mut spec = None;
    let mut out = None;
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--spec" => {
                let v = it
                    .next()
                    .ok_or_else(|| CliError::InvalidConfig("--spec needs a value".into()))?;
                spec = Some(PlotSpec::parse(v)?);
            }
            "--out" => {
                out = Some(PathBuf::from(it.next().ok_or_else(|| {
                    CliError::InvalidConfig("--out needs a value".into())
                })?));
            }
            other if csv_path.is_none() => csv_path = Some(PathBuf::from(other)),
            other => {
                return Err(CliError::InvalidConfig(format!(
                    "unexpected argument {other:?}"
                )))
            }
        }
    }
    let csv_path =
        csv_path.ok_or_else(|| CliError::InvalidConfig("plot needs a CSV file".into()))?;
    let spec = spec.ok_or_else(|| CliError::InvalidConfig("plot needs --spec <name>".into()))?;
    let text = fs::read_to_string(&csv_path)
        .map_err(|e| CliError::Other(format!("read {csv_path:?}: {e}")))?;
    let svg = svg::emit_plot(&text, spec)?;
    let out = out.unwrap_or_else(|| csv_path.with_extension("svg"));
    fs::write(&out, svg)?;
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_verify(args: &[String]) -> CliResult<()> {
    let mut suite = None;
    let mut out: Option<PathBuf> = None;
    let mut it = args.iter();
    while let Some(arg) = it.next() {
        match arg.as_str() {
            "--out" => {
                out = Some(PathBuf::from(it.next().ok_or_else(|| {
                    CliError::InvalidConfig("--out needs a value".into())
                })?));
            }
            other if suite.is_none() => suite = Some(other.to_string()),
            other => {
                return Err(CliError::InvalidConfig(format!(
                    "unexpected argument {other:?}"
                )))
            }
        }
    }
    let suite = suite.ok_or_else(|| CliError::InvalidConfig("verify needs a suite name".into()))?;
    let seed = seed_override()?.unwrap_or(0);
    let outcome = match suite.as_str() {
        "oracle-suite" => verify::oracle_suite(1000, seed)?,
        "resample-suite" => verify::resample_suite(10_000, seed)?,
        "partition-suite" => verify::partition_suite(500, seed)?,
        other => {
            return Err(CliError::InvalidConfig(format!(
                "unknown suite {other:?} (want oracle-suite, resample-suite, partition-suite)"
            )))
        }
    };
    if let Some(dir) = out {
        fs::create_dir_all(&dir)?;
        let mut csv = String::from(outcome.csv_header);
        csv.push('\n');
        for row in &outcome.csv_rows {
            csv.push_str(row);
            csv.push('\n');
        }
        fs::write(dir.join("data.csv"), csv)?;
    }
    println!(
        "{}: {} trials, {} failures",
        outcome.name, outcome.trials, outcome.failures
    );
    Ok(())
}
