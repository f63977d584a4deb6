//! Small statistics toolbox: sample moments, ordinary least squares,
//! nearest-rank quantiles, bootstrap CIs, and a runs test for residual
//! sign patterns.

use crate::error::{Error, Result};
use crate::rng::{mix3, unit_f64};

/// Mean and standard error of the mean, using the unbiased sample
/// variance. A single observation has stderr 0.
pub fn mean_stderr(xs: &[f64]) -> (f64, f64) {
    assert!(!xs.is_empty());
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Ordinary least squares line `y = slope * x + intercept`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub residuals: Vec<f64>,
}

/// Fit a straight line by ordinary least squares.
///
/// Errors if fewer than two points or if the x-values are all equal.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> Result<LineFit> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    if xs.len() < 2 {
        return Err(Error::InvalidArgument(
            "least squares needs at least 2 points".into(),
        ));
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx == 0.0 {
        return Err(Error::InvalidArgument(
            "least squares needs distinct x-values".into(),
        ));
    }
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residuals: Vec<f64> = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| y - (slope * x + intercept))
        .collect();
    let ss_res: f64 = residuals.iter().map(|r| r * r).sum();
    let ss_tot: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let r_squared = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
    Ok(LineFit {
        slope,
        intercept,
        r_squared,
        residuals,
    })
}

/// Nearest-rank quantile of a sorted slice: the smallest element whose
/// rank is at least `q * len`. `q = 1.0` returns the maximum.
pub fn quantile_nearest_rank(sorted: &[f64], q: f64) -> f64 {
    assert!(!sorted.is_empty());
    assert!((0.0..=1.0).contains(&q));
    let rank = (q * sorted.len() as f64).ceil() as usize;
    sorted[rank.max(1) - 1]
}

/// Percentile-bootstrap confidence interval for a nearest-rank quantile.
///
/// Deterministic for a fixed seed: resample indices come from the
/// counter-mode stream `(seed, iteration, draw)`.
pub fn bootstrap_quantile_ci(
    values: &[f64],
    q: f64,
    iters: u32,
    level: f64,
    seed: u64,
) -> (f64, f64) {
    assert!(!values.is_empty());
    let n = values.len();
    let mut stats = Vec::with_capacity(iters as usize);
    let mut resample = vec![0.0f64; n];
    for b in 0..iters {
        for (i, slot) in resample.iter_mut().enumerate() {
            let u = unit_f64(mix3(seed, b as u64, i as u64));
            *slot = values[(u * n as f64) as usize % n];
        }
        resample.sort_by(f64::total_cmp);
        stats.push(quantile_nearest_rank(&resample, q));
    }
    stats.sort_by(f64::total_cmp);
    let alpha = (1.0 - level) / 2.0;
    (
        quantile_nearest_rank(&stats, alpha),
        quantile_nearest_rank(&stats, 1.0 - alpha),
    )
}

/// Wald-Wolfowitz runs-test z-statistic for the signs of `values`
/// (zeros count as positive). Near 0 means no systematic sign pattern.
pub fn runs_test_z(values: &[f64]) -> f64 {
    let signs: Vec<bool> = values.iter().map(|v| *v >= 0.0).collect();
    let n_pos = signs.iter().filter(|s| **s).count() as f64;
    let n_neg = signs.len() as f64 - n_pos;
    if n_pos == 0.0 || n_neg == 0.0 {
        // One-signed sequences carry no run information; treat the single
        // run as exactly its (degenerate) expectation.
        return 0.0;
    }
    let runs = 1 + signs.windows(2).filter(|w| w[0] != w[1]).count();
    let n = n_pos + n_neg;
    let mean = 2.0 * n_pos * n_neg / n + 1.0;
    let var = 2.0 * n_pos * n_neg * (2.0 * n_pos * n_neg - n) / (n * n * (n - 1.0));
    if var <= 0.0 {
        return 0.0;
    }
    (runs as f64 - mean) / var.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mean_stderr_basics() {
        let (m, se) = mean_stderr(&[1.0, 2.0, 3.0, 4.0]);
        assert!((m - 2.5).abs() < 1e-12);
        // Sample variance 5/3, stderr = sqrt(5/12).
        assert!((se - (5.0f64 / 12.0).sqrt()).abs() < 1e-12);
        let (_, se1) = mean_stderr(&[7.0]);
        assert_eq!(se1, 0.0);
    }

    #[test]
    fn least_squares_recovers_exact_line() {
        let xs: Vec<f64> = (0..10).map(|i| i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x - 2.0).collect();
        let fit = least_squares(&xs, &ys).unwrap();
        assert!((fit.slope - 3.0).abs() < 1e-12);
        assert!((fit.intercept + 2.0).abs() < 1e-12);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn quantiles_use_nearest_rank() {
        let v = [1.0, 2.0, 3.0, 4.0, 5.0];
        assert_eq!(quantile_nearest_rank(&v, 0.5), 3.0);
        assert_eq!(quantile_nearest_rank(&v, 0.9), 5.0);
        assert_eq!(quantile_nearest_rank(&v, 1.0), 5.0);
        assert_eq!(quantile_nearest_rank(&v, 0.0), 1.0);
        let w = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(quantile_nearest_rank(&w, 0.5), 2.0);
    }

    #[test]
    fn bootstrap_is_deterministic_and_ordered() {
        let v: Vec<f64> = (0..50).map(|i| (i % 13) as f64).collect();
        let a = bootstrap_quantile_ci(&v, 0.5, 200, 0.95, 7);
        let b = bootstrap_quantile_ci(&v, 0.5, 200, 0.95, 7);
        assert_eq!(a, b);
        assert!(a.0 <= a.1);
    }

    #[test]
    fn runs_test_flags_blocked_signs() {
        // Alternating signs: far more runs than expected, z > 0.
        let alt: Vec<f64> = (0..20).map(|i| if i % 2 == 0 { 1.0 } else { -1.0 }).collect();
        assert!(runs_test_z(&alt) > 2.0);
        // Two blocks: far fewer runs, z < 0.
        let blocks: Vec<f64> = (0..20).map(|i| if i < 10 { 1.0 } else { -1.0 }).collect();
        assert!(runs_test_z(&blocks) < -2.0);
    }
}
