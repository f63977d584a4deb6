//! Deviation profiles across a ladder of scales.
//!
//! Per scale: median, 0.9-quantile, and max of the per-field envelope
//! deviation over `reps` independent fields, with percentile-bootstrap
//! confidence intervals. Quantiles are heavy-tail-robust summaries; the
//! median drives the exponent fit, the rest are reported.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fluct::deviation::deviation_record_rep;
use crate::lattice::PathMode;
use crate::rng::mix2;
use crate::stats::{bootstrap_quantile_ci, quantile_nearest_rank};

/// Quantiles reported per scale (1.0 is the sample maximum).
pub const PROFILE_QUANTILES: [f64; 3] = [0.5, 0.9, 1.0];

const BOOTSTRAP_ITERS: u32 = 400;
const BOOTSTRAP_LEVEL: f64 = 0.95;

/// What the profile was measured on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileKind {
    Passage(PathMode),
    Lcs,
}

impl ProfileKind {
    pub fn label(self) -> &'static str {
        match self {
            ProfileKind::Passage(mode) => mode.label(),
            ProfileKind::Lcs => "lcs",
        }
    }
}

/// One (scale, quantile) summary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfilePoint {
    pub n: u32,
    pub quantile: f64,
    pub value: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
}

/// Quantile summaries of max deviation per scale.
#[derive(Debug, Clone, PartialEq)]
pub struct DeviationProfile {
    pub kind: ProfileKind,
    /// Bernoulli parameter for passage profiles, None for LCS.
    pub s: Option<f64>,
    /// Alphabet descriptor for LCS profiles (`size:w0;w1;...`).
    pub alphabet: Option<String>,
    pub reps: u32,
    pub seed: u64,
    pub points: Vec<ProfilePoint>,
}

impl DeviationProfile {
    /// The (n, value) series for one reported quantile.
    pub fn quantile_series(&self, quantile: f64) -> Vec<(u32, f64)> {
        self.points
            .iter()
            .filter(|p| p.quantile == quantile)
            .map(|p| (p.n, p.value))
            .collect()
    }
}

/// Summarize per-replication values into the reported quantile points.
pub(crate) fn summarize_scale(
    n: u32,
    values: &mut [f64],
    bootstrap_seed: u64,
) -> Vec<ProfilePoint> {
    values.sort_by(f64::total_cmp);
    PROFILE_QUANTILES
        .iter()
        .map(|&q| {
            let (ci_lo, ci_hi) =
                bootstrap_quantile_ci(values, q, BOOTSTRAP_ITERS, BOOTSTRAP_LEVEL, bootstrap_seed);
            ProfilePoint {
                n,
                quantile: q,
                value: quantile_nearest_rank(values, q),
                ci_lo,
                ci_hi,
            }
        })
        .collect()
}

/// Envelope-deviation profile over `n_list` square grids.
pub fn deviation_profile(
    s: f64,
    n_list: &[u32],
    reps: u32,
    mode: PathMode,
    seed: u64,
) -> Result<DeviationProfile> {
    if n_list.is_empty() || reps == 0 {
        return Err(Error::InvalidArgument(
            "profile needs at least one scale and one replication".into(),
        ));
    }
    let mut points = Vec::new();
    for (idx, &n) in n_list.iter().enumerate() {
        let scale_seed = mix2(seed, idx as u64);
        let mut devs: Vec<f64> = (0..reps)
            .into_par_iter()
            .map(|rep| {
                deviation_record_rep(n, s, mode, scale_seed, rep).map(|r| r.max_dev as f64)
            })
            .collect::<Result<_>>()?;
        points.extend(summarize_scale(n, &mut devs, mix2(scale_seed, 0xB007)));
    }
    Ok(DeviationProfile {
        kind: ProfileKind::Passage(mode),
        s: Some(s),
        alphabet: None,
        reps,
        seed,
        points,
    })
}
