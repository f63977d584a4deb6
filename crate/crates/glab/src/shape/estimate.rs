//! Monte Carlo point estimates of normalized passage times.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{passage_time, PathMode, WeightField};
use crate::rng::mix2;
use crate::shape::direction::Direction;
use crate::stats::mean_stderr;

/// What the raw passage time is divided by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    /// Division by `n` (q and xy directions).
    PerN,
    /// Division by `n(1+p)/2` (slope directions).
    PerHalfPerimeter,
}

impl Normalization {
    pub fn label(self) -> &'static str {
        match self {
            Normalization::PerN => "per-n",
            Normalization::PerHalfPerimeter => "per-half-perimeter",
        }
    }

    pub fn parse_label(s: &str) -> Result<Self> {
        match s {
            "per-n" => Ok(Normalization::PerN),
            "per-half-perimeter" => Ok(Normalization::PerHalfPerimeter),
            other => Err(Error::Format(format!("unknown normalization {other:?}"))),
        }
    }
}

/// A Monte Carlo estimate of a normalized passage time in one direction.
#[derive(Debug, Clone, PartialEq)]
pub struct ShapeEstimate {
    pub direction: Direction,
    pub n: u32,
    pub reps: u32,
    pub seed: u64,
    pub s: f64,
    pub mean: f64,
    pub stderr: f64,
    pub normalization: Normalization,
    /// Rounded lattice endpoint actually used.
    pub endpoint: (u32, u32),
    /// Rounding bias `endpoint - n * direction`, O(1) per coordinate.
    pub rounding_error: (f64, f64),
}

/// Supplies the weight field for each replication. The default source
/// draws Bernoulli fields; fixtures inject deterministic fields.
pub trait FieldSource: Sync {
    fn field(&self, nx: u32, ny: u32, rep: u32) -> WeightField;
}

/// i.i.d. Bernoulli(s) fields, replication `r` seeded with `mix2(seed, r)`.
pub struct BernoulliSource {
    pub s: f64,
    pub seed: u64,
}

impl FieldSource for BernoulliSource {
    fn field(&self, nx: u32, ny: u32, rep: u32) -> WeightField {
        WeightField::generate(nx, ny, self.s, mix2(self.seed, rep as u64))
            .expect("validated parameters")
    }
}

/// Every weight forced to a constant; for tests and worked examples.
pub struct ConstantSource(pub u8);

impl FieldSource for ConstantSource {
    fn field(&self, nx: u32, ny: u32, _rep: u32) -> WeightField {
        WeightField::constant(nx, ny, self.0).expect("valid dims")
    }
}

/// Estimate the normalized passage time in `direction` at scale `n` from
/// `reps` independent Bernoulli(s) fields.
pub fn estimate_point(
    direction: Direction,
    n: u32,
    reps: u32,
    s: f64,
    seed: u64,
    mode: PathMode,
) -> Result<ShapeEstimate> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "Bernoulli parameter must lie in (0,1), got {s}"
        )));
    }
    estimate_point_with(&BernoulliSource { s, seed }, direction, n, reps, s, seed, mode)
}

/// As [`estimate_point`], with an injected field source. `s` and `seed`
/// are recorded in the estimate as labels.
pub fn estimate_point_with(
    source: &impl FieldSource,
    direction: Direction,
    n: u32,
    reps: u32,
    s: f64,
    seed: u64,
    mode: PathMode,
) -> Result<ShapeEstimate> {
    if reps < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 replications, got {reps}"
        )));
    }
    let ((ex, ey), norm) = direction.endpoint(n)?;
    let values: Vec<f64> = (0..reps)
        .into_par_iter()
        .map(|rep| {
            let field = source.field(ex, ey, rep);
            let t = passage_time(&field, (0, 0), (ex, ey), mode).expect("in-grid corners");
            t as f64 / norm
        })
        .collect();
    // Reduction in replication order, independent of worker scheduling.
    let (mean, stderr) = mean_stderr(&values);
    let (dx, dy) = direction.as_xy();
    Ok(ShapeEstimate {
        direction,
        n,
        reps,
        seed,
        s,
        mean,
        stderr,
        normalization: match direction {
            Direction::P(_) => Normalization::PerHalfPerimeter,
            _ => Normalization::PerN,
        },
        endpoint: (ex, ey),
        rounding_error: (ex as f64 - n as f64 * dx, ey as f64 - n as f64 * dy),
    })
}
