//! Diagonal convergence profiles: the normalized passage time
//! `T(n,n) / n` as a function of `n`, with a companion fit of the form
//! `mean(n) = a - b * sqrt(ln n / n)`.
//!
//! The fitted intercept `a` estimates the superadditive limit; `b` is a
//! diagnostic only (no constant is asserted).

use crate::error::{Error, Result};
use crate::lattice::PathMode;
use crate::shape::direction::Direction;
use crate::shape::estimate::{estimate_point_with, BernoulliSource, FieldSource, ShapeEstimate};
use crate::stats::least_squares;

/// Fit of `mean(n) = a - b * sqrt(ln n / n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SqrtLogRateFit {
    pub a: f64,
    pub b: f64,
    pub residuals: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceProfile {
    pub points: Vec<ShapeEstimate>,
    pub fit: SqrtLogRateFit,
}

/// Per-scale diagonal estimates over `n_list`, plus the rate-form fit.
/// `n_list` must be strictly increasing with at least two entries.
pub fn convergence_profile(
    s: f64,
    n_list: &[u32],
    reps: u32,
    seed: u64,
    mode: PathMode,
) -> Result<ConvergenceProfile> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "Bernoulli parameter must lie in (0,1), got {s}"
        )));
    }
    convergence_profile_with(&BernoulliSource { s, seed }, n_list, reps, s, seed, mode)
}

/// As [`convergence_profile`], with an injected field source.
pub fn convergence_profile_with(
    source: &impl FieldSource,
    n_list: &[u32],
    reps: u32,
    s: f64,
    seed: u64,
    mode: PathMode,
) -> Result<ConvergenceProfile> {
    if n_list.len() < 2 {
        return Err(Error::InvalidArgument(
            "convergence profile needs at least two scales".into(),
        ));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "n_list must be strictly increasing".into(),
        ));
    }
    let diag = Direction::Q(0.0);
    let points = n_list
        .iter()
        .map(|&n| estimate_point_with(source, diag, n, reps, s, seed, mode))
        .collect::<Result<Vec<_>>>()?;

    let xs: Vec<f64> = n_list
        .iter()
        .map(|&n| ((n as f64).ln() / n as f64).sqrt())
        .collect();
    let ys: Vec<f64> = points.iter().map(|p| p.mean).collect();
    let line = least_squares(&xs, &ys)?;
    Ok(ConvergenceProfile {
        points,
        fit: SqrtLogRateFit {
            a: line.intercept,
            b: -line.slope,
            residuals: line.residuals,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::estimate::ConstantSource;
    use crate::stats::runs_test_z;

    #[test]
    fn constant_fixture_fits_flat() {
        let prof = convergence_profile_with(
            &ConstantSource(1),
            &[8, 16, 32, 64],
            4,
            0.5,
            0,
            PathMode::LastPassage,
        )
        .unwrap();
        for p in &prof.points {
            assert_eq!(p.mean, 2.0);
        }
        assert!((prof.fit.a - 2.0).abs() < 1e-12);
        assert!(prof.fit.b.abs() < 1e-12);
    }

    #[test]
    fn doubling_respects_superadditivity_within_noise() {
        let prof =
            convergence_profile(0.5, &[32, 64, 128], 64, 3, PathMode::LastPassage).unwrap();
        for pair in prof.points.windows(2) {
            let joint = (pair[0].stderr.powi(2) + pair[1].stderr.powi(2)).sqrt();
            assert!(pair[1].mean >= pair[0].mean - 4.0 * joint);
        }
    }

    #[test]
    fn rejects_unordered_scales() {
        assert!(convergence_profile(0.5, &[64, 32], 4, 0, PathMode::LastPassage).is_err());
        assert!(convergence_profile(0.5, &[64], 4, 0, PathMode::LastPassage).is_err());
    }

    #[test]
    fn rate_fit_residuals_have_no_sign_pattern_at_small_scale() {
        // Diagnostic of the rate form on a small ladder; |z| < 1.96 at 5%.
        let prof = convergence_profile(
            0.5,
            &[16, 32, 64, 128, 256],
            200,
            17,
            PathMode::LastPassage,
        )
        .unwrap();
        let z = runs_test_z(&prof.fit.residuals);
        assert!(z.abs() < 1.96, "runs-test z = {z}");
    }
}
