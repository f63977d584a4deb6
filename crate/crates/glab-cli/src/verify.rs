//! Invariant suites runnable via `glab verify` or as experiments.
//!
//! Each suite re-derives its checks from scratch (fresh fields, fresh
//! oracles) and reports per-trial rows plus a failure count; any failure
//! is an invariant violation (exit 4).

use rayon::prelude::*;

use glab::decomp::{partition_identity_check, resampling_deviation_trial};
use glab::lattice::{anti_diagonal, brute_force_passage_time, passage_time};
use glab::rng::{mix2, mix3, unit_f64};
use glab::{PathMode, WeightField};

use crate::error::{CliError, CliResult};

pub struct SuiteOutcome {
    pub name: &'static str,
    pub trials: u64,
    pub failures: u64,
    pub csv_header: &'static str,
    pub csv_rows: Vec<String>,
}

impl SuiteOutcome {
    pub fn into_result(self) -> CliResult<SuiteOutcome> {
        if self.failures > 0 {
            return Err(CliError::Invariant(format!(
                "{}: {} of {} trials failed",
                self.name, self.failures, self.trials
            )));
        }
        Ok(self)
    }
}

/// DP vs brute force on every grid shape with `nx + ny <= 12`, both modes,
/// across `seeds` random fields per shape.
pub fn oracle_suite(seeds: u32, master_seed: u64) -> CliResult<SuiteOutcome> {
    let rows: Vec<(String, u64, u64)> = (0..seeds)
        .into_par_iter()
        .map(|i| {
            let seed = mix2(master_seed, i as u64);
            // s varies per seed across (0.1, 0.9).
            let s = 0.1 + 0.8 * unit_f64(mix2(seed, 0x5));
            let mut checks = 0u64;
            let mut failures = 0u64;
            for nx in 1..=11u32 {
                for ny in 1..=(12 - nx) {
                    let field =
                        WeightField::generate(nx, ny, s, mix3(seed, nx as u64, ny as u64))
                            .expect("valid params");
                    for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
                        let dp = passage_time(&field, (0, 0), (nx, ny), mode)
                            .expect("in-grid");
                        let oracle =
                            brute_force_passage_time(&field, (0, 0), (nx, ny), mode)
                                .expect("within oracle scale");
                        checks += 1;
                        if dp != oracle {
                            failures += 1;
                        }
                    }
                }
            }
            (format!("{i},{s},{checks},{failures}"), checks, failures)
        })
        .collect();

    let trials: u64 = rows.iter().map(|r| r.1).sum();
    let failures: u64 = rows.iter().map(|r| r.2).sum();
    SuiteOutcome {
        name: "oracle-suite",
        trials,
        failures,
        csv_header: "seed_index,s,checks,failures",
        csv_rows: rows.into_iter().map(|r| r.0).collect(),
    }
    .into_result()
}

/// Anti-diagonal resampling must never move the passage time by more
/// than 1. Exact, not statistical.
pub fn resample_suite(trials: u32, master_seed: u64) -> CliResult<SuiteOutcome> {
    let rows: Vec<(String, u64)> = (0..trials)
        .into_par_iter()
        .map(|i| {
            let seed = mix2(master_seed, i as u64);
            let nx = 2 + (mix3(seed, 1, 0) % 30) as u32;
            let ny = 2 + (mix3(seed, 2, 0) % 30) as u32;
            let j = (mix3(seed, 3, 0) % (nx + ny + 1) as u64) as u32;
            let mode = if i % 2 == 0 {
                PathMode::LastPassage
            } else {
                PathMode::FirstPassage
            };
            let field = WeightField::generate(nx, ny, 0.5, seed).expect("valid params");
            let set = anti_diagonal(nx, ny, j);
            let dev = resampling_deviation_trial(
                &field,
                (0, 0),
                (nx, ny),
                &set,
                mix2(seed, 0xBEE),
                mode,
            )
            .expect("anti-diagonal validates");
            let fail = (dev > 1) as u64;
            (
                format!("{i},{nx},{ny},{j},{},{dev}", mode.label()),
                fail,
            )
        })
        .collect();

    let failures: u64 = rows.iter().map(|r| r.1).sum();
    SuiteOutcome {
        name: "resample-suite",
        trials: trials as u64,
        failures,
        csv_header: "trial,nx,ny,diagonal,mode,deviation",
        csv_rows: rows.into_iter().map(|r| r.0).collect(),
    }
    .into_result()
}

/// The corner-to-corner partition identity on random oracle-scale grids,
/// alternating (n, k) in {(5, 2), (2, 5)}.
pub fn partition_suite(instances: u32, master_seed: u64) -> CliResult<SuiteOutcome> {
    let rows: Vec<(String, u64)> = (0..instances)
        .into_par_iter()
        .map(|i| {
            let seed = mix2(master_seed, i as u64);
            let (n, k) = if i % 2 == 0 { (5u32, 2u32) } else { (2, 5) };
            let side = n * k;
            let mode = if i % 4 < 2 {
                PathMode::LastPassage
            } else {
                PathMode::FirstPassage
            };
            let field = WeightField::generate(side, side, 0.5, seed).expect("valid params");
            let check = partition_identity_check(&field, n, k, mode).expect("oracle scale");
            (
                format!(
                    "{i},{n},{k},{},{},{},{}",
                    mode.label(),
                    check.lhs,
                    check.rhs,
                    check.equal
                ),
                (!check.equal) as u64,
            )
        })
        .collect();

    let failures: u64 = rows.iter().map(|r| r.1).sum();
    SuiteOutcome {
        name: "partition-suite",
        trials: instances as u64,
        failures,
        csv_header: "instance,n,k,mode,lhs,rhs,equal",
        csv_rows: rows.into_iter().map(|r| r.0).collect(),
    }
    .into_result()
}
