//! Curvature-exponent fitting: the power `kappa` in
//! `gap(q) ~ c * |q|^kappa` near `q = 0`, from log-log least squares.

use crate::error::{Error, Result};
use crate::shape::estimate::ShapeEstimate;
use crate::stats::least_squares;

/// Minimum usable points for a curvature fit.
pub const MIN_FIT_POINTS: usize = 4;

/// Result of a log-log curvature fit.
#[derive(Debug, Clone, PartialEq)]
pub struct KappaFit {
    pub kappa_hat: f64,
    pub c_hat: f64,
    pub r_squared: f64,
    /// |q|-window the fit was restricted to.
    pub q_window: (f64, f64),
    pub points_used: usize,
    /// Points dropped because their gap was statistically indistinguishable
    /// from zero (gap <= 2 joint stderr).
    pub excluded_noise: usize,
    /// Points dropped by the window or because q = 0.
    pub excluded_window: usize,
    /// Log-space residuals, in input order of the used points.
    pub residuals: Vec<f64>,
}

/// Fit `ln gap` against `ln |q|`, where `gap = gperp0.mean - est.mean`.
///
/// Points with `|q|` outside `q_window` are excluded; points whose gap is
/// at most twice its joint standard error are excluded as noise (their
/// logarithm would be meaningless). At least [`MIN_FIT_POINTS`] must
/// survive.
pub fn fit_curvature(
    points: &[(f64, ShapeEstimate)],
    gperp0: &ShapeEstimate,
    q_window: (f64, f64),
) -> Result<KappaFit> {
    let (q_lo, q_hi) = q_window;
    if !(0.0 <= q_lo && q_lo < q_hi && q_hi < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "q window must satisfy 0 <= lo < hi < 1, got ({q_lo},{q_hi})"
        )));
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut excluded_noise = 0;
    let mut excluded_window = 0;
    for (q, est) in points {
        let aq = q.abs();
        if aq == 0.0 || aq < q_lo || aq > q_hi {
            excluded_window += 1;
            continue;
        }
        let gap = gperp0.mean - est.mean;
        let joint = (gperp0.stderr.powi(2) + est.stderr.powi(2)).sqrt();
        if gap <= 2.0 * joint {
            excluded_noise += 1;
            continue;
        }
        xs.push(aq.ln());
        ys.push(gap.ln());
    }
    if xs.len() < MIN_FIT_POINTS {
        return Err(Error::Fit {
            min: MIN_FIT_POINTS,
            usable: xs.len(),
            excluded_noise,
            excluded_window,
        });
    }
    let fit = least_squares(&xs, &ys)?;
    if fit.slope <= 0.0 {
        // The gap must shrink toward q = 0; a nonpositive power means the
        // data carries no curvature signal in this window.
        return Err(Error::DegenerateFit {
            what: "curvature power",
            value: fit.slope,
        });
    }
    Ok(KappaFit {
        kappa_hat: fit.slope,
        c_hat: fit.intercept.exp(),
        r_squared: fit.r_squared,
        q_window,
        points_used: xs.len(),
        excluded_noise,
        excluded_window,
        residuals: fit.residuals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::direction::Direction;
    use crate::shape::estimate::Normalization;

    fn synthetic(q: f64, mean: f64) -> (f64, ShapeEstimate) {
        (
            q,
            ShapeEstimate {
                direction: Direction::Q(q),
                n: 1000,
                reps: 1,
                seed: 0,
                s: 0.5,
                mean,
                stderr: 0.0,
                normalization: Normalization::PerN,
                endpoint: (0, 0),
                rounding_error: (0.0, 0.0),
            },
        )
    }

    fn zero_estimate(mean: f64) -> ShapeEstimate {
        synthetic(0.0, mean).1
    }

    #[test]
    fn exact_square_law_recovered() {
        let base = 2.0;
        let pts: Vec<_> = [0.05, 0.1, 0.15, 0.2, 0.25, 0.3]
            .iter()
            .map(|&q| synthetic(q, base - 0.8 * q * q))
            .collect();
        let fit = fit_curvature(&pts, &zero_estimate(base), (0.01, 0.5)).unwrap();
        assert!((fit.kappa_hat - 2.0).abs() < 1e-9);
        assert!((fit.c_hat - 0.8).abs() < 1e-9);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
        assert_eq!(fit.points_used, 6);
    }

    #[test]
    fn exact_linear_law_recovered() {
        let pts: Vec<_> = [-0.3, -0.2, -0.1, 0.1, 0.2, 0.3]
            .iter()
            .map(|&q: &f64| synthetic(q, 1.5 - 0.5 * q.abs()))
            .collect();
        let fit = fit_curvature(&pts, &zero_estimate(1.5), (0.01, 0.5)).unwrap();
        assert!((fit.kappa_hat - 1.0).abs() < 1e-9);
        assert!((fit.c_hat - 0.5).abs() < 1e-9);
    }

    #[test]
    fn noise_floor_points_are_dropped_and_reported() {
        // Two points with gaps below 2 stderr must be excluded.
        let mut pts: Vec<_> = [0.1, 0.15, 0.2, 0.25, 0.3]
            .iter()
            .map(|&q| synthetic(q, 2.0 - 0.8 * q * q))
            .collect();
        for (_, est) in pts.iter_mut().take(2) {
            est.stderr = 1.0;
        }
        let fit = fit_curvature(&pts, &zero_estimate(2.0), (0.01, 0.5));
        match fit {
            Err(Error::Fit {
                usable,
                excluded_noise,
                ..
            }) => {
                assert_eq!(usable, 3);
                assert_eq!(excluded_noise, 2);
            }
            other => panic!("expected fit error, got {other:?}"),
        }
    }

    #[test]
    fn nonpositive_powers_are_degenerate() {
        // Gaps shrinking as |q| grows: the log-log slope is negative and
        // the fit refuses rather than reporting a meaningless power.
        let pts: Vec<_> = [0.05f64, 0.1, 0.2, 0.3, 0.4]
            .iter()
            .map(|&q| synthetic(q, 2.0 - 0.1 / q.sqrt()))
            .collect();
        assert!(matches!(
            fit_curvature(&pts, &zero_estimate(2.0), (0.01, 0.5)),
            Err(Error::DegenerateFit { .. })
        ));
    }

    #[test]
    fn window_exclusions_counted() {
        let pts: Vec<_> = [0.0, 0.05, 0.1, 0.2, 0.3, 0.4, 0.8]
            .iter()
            .map(|&q| synthetic(q, 2.0 - 0.7 * q * q))
            .collect();
        let fit = fit_curvature(&pts, &zero_estimate(2.0), (0.08, 0.5)).unwrap();
        // q=0, q=0.05 (below lo) and q=0.8 (above hi) are out.
        assert_eq!(fit.excluded_window, 3);
        assert_eq!(fit.points_used, 4);
        assert!((fit.kappa_hat - 2.0).abs() < 1e-9);
    }
}
