//! Experiment dispatch: build the worker pool, run the experiment, write
//! CSV/JSON outputs, digest them into a run record.

use std::fs;
use std::path::Path;

use serde_json::json;

use glab::decomp::{
    estimate_event_a_prob_with_reports, EventAFieldRow, EventAProbRow,
    EVENT_A_FIELD_CSV_HEADER, EVENT_A_PROB_CSV_HEADER,
};
use glab::fluct::{
    cylinder_containment_prob, deviation_profile, fit_transversal_exponent, ContainmentCsvRow,
    LogCorrection, ProfileCsvRow, XiFit, CONTAINMENT_CSV_HEADER, PROFILE_CSV_HEADER,
};
use glab::lcs::lcs_deviation_profile;
use glab::shape::{
    convergence_profile, estimate_point, fit_curvature, Direction, ShapeCsvRow, ShapeEstimate,
    SHAPE_CSV_HEADER,
};
use glab::rng::mix2;

use crate::config::{Experiment, ExperimentConfig};
use crate::digest::fnv1a64;
use crate::error::{CliError, CliResult};
use crate::record::{now_unix_ms, write_data_file, FileDigest, RunRecord};
use crate::verify::{oracle_suite, partition_suite, resample_suite, SuiteOutcome};

/// Tags separating the seed streams of sub-experiments within one run.
mod stream {
    pub const POINT: u64 = 1;
    pub const ZERO_POINT: u64 = 2;
    pub const LADDER: u64 = 3;
}

/// Seed stream for one experiment: the master seed mixed with the
/// experiment's name, so distinct experiments on the same master seed
/// never share replication streams.
fn experiment_seed(config: &ExperimentConfig) -> u64 {
    mix2(config.master_seed, fnv1a64(config.experiment.name().as_bytes()))
}

pub fn run(config: &ExperimentConfig, out_dir: &Path, workers: usize) -> CliResult<RunRecord> {
    fs::create_dir_all(out_dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Other(format!("worker pool: {e}")))?;

    let started = now_unix_ms();
    let (files, summary) = pool.install(|| dispatch(config, out_dir))?;
    let finished = now_unix_ms();

    let record = RunRecord {
        config_hash: config.hash(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        experiment: config.experiment.name().to_string(),
        workers,
        started_unix_ms: started,
        finished_unix_ms: finished,
        files,
        summary,
    };
    let json = serde_json::to_string_pretty(&record)
        .map_err(|e| CliError::Other(format!("serialize run record: {e}")))?;
    fs::write(out_dir.join("run.json"), json)?;
    Ok(record)
}

fn dispatch(
    config: &ExperimentConfig,
    out_dir: &Path,
) -> CliResult<(Vec<FileDigest>, serde_json::Value)> {
    let seed = experiment_seed(config);
    let reps = config.reps;
    match &config.experiment {
        Experiment::ShapePoint { direction, n, s } => {
            let est = estimate_point(*direction, *n, reps, *s, seed, config.mode()?)?;
            let csv = render_csv(SHAPE_CSV_HEADER, [ShapeCsvRow::from(&est).to_csv()]);
            let files = vec![write_data_file(out_dir, "data.csv", &csv)?];
            let summary = json!({
                "mean": est.mean,
                "stderr": est.stderr,
                "endpoint": [est.endpoint.0, est.endpoint.1],
                "normalization": est.normalization.label(),
            });
            Ok((files, summary))
        }

        Experiment::ShapeCurvature {
            q_list,
            n,
            s,
            q_window,
        } => {
            let mode = config.mode()?;
            let zero = estimate_point(
                Direction::Q(0.0),
                *n,
                reps,
                *s,
                mix2(seed, stream::ZERO_POINT),
                mode,
            )?;
            let mut points: Vec<(f64, ShapeEstimate)> = Vec::new();
            for (i, &q) in q_list.iter().enumerate() {
                let d = Direction::q(q).map_err(|e| CliError::InvalidConfig(e.to_string()))?;
                let est = estimate_point(
                    d,
                    *n,
                    reps,
                    *s,
                    mix2(mix2(seed, stream::POINT), i as u64),
                    mode,
                )?;
                points.push((q, est));
            }
            let mut rows: Vec<String> = vec![ShapeCsvRow::from(&zero).to_csv()];
            rows.extend(points.iter().map(|(_, e)| ShapeCsvRow::from(e).to_csv()));
            let csv = render_csv(SHAPE_CSV_HEADER, rows);
            let files = vec![write_data_file(out_dir, "data.csv", &csv)?];
            let summary = match fit_curvature(&points, &zero, *q_window) {
                Ok(fit) => json!({
                    "kappa_hat": fit.kappa_hat,
                    "c_hat": fit.c_hat,
                    "r_squared": fit.r_squared,
                    "points_used": fit.points_used,
                    "excluded_noise": fit.excluded_noise,
                    "excluded_window": fit.excluded_window,
                }),
                // A noise-dominated run is a reportable outcome, not a crash.
                Err(e) => json!({ "fit_error": e.to_string() }),
            };
            Ok((files, summary))
        }

        Experiment::Convergence { n_list, s } => {
            let prof = convergence_profile(*s, n_list, reps, seed, config.mode()?)?;
            let rows: Vec<String> = prof
                .points
                .iter()
                .map(|e| ShapeCsvRow::from(e).to_csv())
                .collect();
            let csv = render_csv(SHAPE_CSV_HEADER, rows);
            let files = vec![write_data_file(out_dir, "data.csv", &csv)?];
            let summary = json!({
                "a": prof.fit.a,
                "b": prof.fit.b,
                "residuals": prof.fit.residuals,
            });
            Ok((files, summary))
        }

        Experiment::EventA {
            n_list,
            k_list,
            s,
            policy,
            dump_fields,
        } => {
            let mode = config.mode()?;
            let mut prob_rows = Vec::new();
            let mut field_rows = Vec::new();
            let mut p_hats = Vec::new();
            for (i, (&n, &k)) in n_list.iter().zip(k_list).enumerate() {
                let rung_seed = mix2(mix2(seed, stream::LADDER), i as u64);
                let ((p_hat, stderr), reports) =
                    estimate_event_a_prob_with_reports(n, k, *s, *policy, mode, reps, rung_seed)?;
                prob_rows.push(
                    EventAProbRow {
                        n,
                        k,
                        policy: *policy,
                        s: *s,
                        seed: rung_seed,
                        reps,
                        p_hat,
                        stderr,
                    }
                    .to_csv(),
                );
                p_hats.push(json!({ "n": n, "k": k, "p_hat": p_hat, "stderr": stderr }));
                if *dump_fields {
                    for (rep, report) in reports.iter().enumerate() {
                        field_rows.push(
                            EventAFieldRow {
                                n,
                                k,
                                policy: *policy,
                                s: *s,
                                field_seed: mix2(rung_seed, rep as u64),
                                report: *report,
                            }
                            .to_csv(),
                        );
                    }
                }
            }
            let mut files =
                vec![write_data_file(out_dir, "data.csv", &render_csv(EVENT_A_PROB_CSV_HEADER, prob_rows))?];
            if *dump_fields {
                files.push(write_data_file(
                    out_dir,
                    "fields.csv",
                    &render_csv(EVENT_A_FIELD_CSV_HEADER, field_rows),
                )?);
            }
            Ok((files, json!({ "ladder": p_hats })))
        }

        Experiment::DeviationProfile { n_list, s } => {
            let prof = deviation_profile(*s, n_list, reps, config.mode()?, seed)?;
            let rows: Vec<String> = ProfileCsvRow::from_profile(&prof)
                .iter()
                .map(ProfileCsvRow::to_csv)
                .collect();
            let files = vec![write_data_file(
                out_dir,
                "data.csv",
                &render_csv(PROFILE_CSV_HEADER, rows),
            )?];
            Ok((files, json!({ "scales": n_list })))
        }

        Experiment::XiFit { n_list, s, quantile } => {
            let prof = deviation_profile(*s, n_list, reps, config.mode()?, seed)?;
            let rows: Vec<String> = ProfileCsvRow::from_profile(&prof)
                .iter()
                .map(ProfileCsvRow::to_csv)
                .collect();
            let files = vec![write_data_file(
                out_dir,
                "data.csv",
                &render_csv(PROFILE_CSV_HEADER, rows),
            )?];
            let series = prof.quantile_series(*quantile);
            if series.is_empty() {
                return Err(CliError::InvalidConfig(format!(
                    "quantile {quantile} is not one of the profile quantiles"
                )));
            }
            let raw = fit_transversal_exponent(&series, *quantile, LogCorrection::None)?;
            let corrected = fit_transversal_exponent(&series, *quantile, LogCorrection::SqrtLog)?;
            Ok((files, json!({ "raw": xi_json(&raw), "sqrt_log": xi_json(&corrected) })))
        }

        Experiment::Containment { n, s, width } => {
            let (p_hat, stderr) =
                cylinder_containment_prob(*n, *s, *width, config.mode()?, reps, seed)?;
            let row = ContainmentCsvRow {
                n: *n,
                s: *s,
                mode: config.mode()?,
                width: *width,
                reps,
                p_hat,
                stderr,
            };
            let files = vec![write_data_file(
                out_dir,
                "data.csv",
                &render_csv(CONTAINMENT_CSV_HEADER, [row.to_csv()]),
            )?];
            Ok((files, json!({ "p_hat": p_hat, "stderr": stderr })))
        }

        Experiment::LcsProfile {
            len_list,
            alphabet_size,
            dist,
        } => {
            let prof = lcs_deviation_profile(len_list, *alphabet_size, dist, reps, seed)?;
            let rows: Vec<String> = ProfileCsvRow::from_profile(&prof)
                .iter()
                .map(ProfileCsvRow::to_csv)
                .collect();
            let files = vec![write_data_file(
                out_dir,
                "data.csv",
                &render_csv(PROFILE_CSV_HEADER, rows),
            )?];
            Ok((files, json!({ "lengths": len_list })))
        }

        Experiment::OracleSuite { seeds } => suite_output(out_dir, oracle_suite(*seeds, seed)?),
        Experiment::ResampleSuite { trials } => {
            suite_output(out_dir, resample_suite(*trials, seed)?)
        }
        Experiment::PartitionSuite { instances } => {
            suite_output(out_dir, partition_suite(*instances, seed)?)
        }
    }
}

fn xi_json(fit: &XiFit) -> serde_json::Value {
    json!({
        "xi_hat": fit.xi_hat,
        "intercept": fit.intercept,
        "quantile": fit.quantile,
        "r_squared": fit.r_squared,
        "n_range": [fit.n_range.0, fit.n_range.1],
        "excluded": fit.excluded,
    })
}

fn suite_output(
    out_dir: &Path,
    outcome: SuiteOutcome,
) -> CliResult<(Vec<FileDigest>, serde_json::Value)> {
    let csv = render_csv(outcome.csv_header, outcome.csv_rows.iter().cloned());
    let files = vec![write_data_file(out_dir, "data.csv", &csv)?];
    Ok((
        files,
        json!({ "suite": outcome.name, "trials": outcome.trials, "failures": outcome.failures }),
    ))
}

fn render_csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}
