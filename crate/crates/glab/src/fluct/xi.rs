//! Transversal-exponent fitting: the slope of `ln(deviation quantile)`
//! against `ln n`.

use crate::error::{Error, Result};
use crate::stats::least_squares;

/// Minimum scales for an exponent fit.
pub const MIN_XI_POINTS: usize = 4;

/// Optional correction dividing deviations by `sqrt(ln n)` before the
/// log-log fit, reported as an alternative reading of the same data.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LogCorrection {
    None,
    SqrtLog,
}

#[derive(Debug, Clone, PartialEq)]
pub struct XiFit {
    pub xi_hat: f64,
    pub intercept: f64,
    /// Quantile of the profile the fit was taken on.
    pub quantile: f64,
    pub correction: LogCorrection,
    pub n_range: (u32, u32),
    pub r_squared: f64,
    /// Scales excluded for nonpositive quantile values.
    pub excluded: Vec<u32>,
}

/// Least squares on `(ln n, ln value)` over a quantile series.
///
/// Scales whose value is nonpositive are excluded and reported; at least
/// [`MIN_XI_POINTS`] scales must survive.
pub fn fit_transversal_exponent(
    series: &[(u32, f64)],
    quantile: f64,
    correction: LogCorrection,
) -> Result<XiFit> {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut excluded = Vec::new();
    for &(n, value) in series {
        let v = match correction {
            LogCorrection::None => value,
            LogCorrection::SqrtLog => value / (n as f64).ln().sqrt(),
        };
        if v <= 0.0 || !v.is_finite() {
            excluded.push(n);
            continue;
        }
        xs.push((n as f64).ln());
        ys.push(v.ln());
    }
    if xs.len() < MIN_XI_POINTS {
        return Err(Error::Fit {
            min: MIN_XI_POINTS,
            usable: xs.len(),
            excluded_noise: excluded.len(),
            excluded_window: 0,
        });
    }
    let fit = least_squares(&xs, &ys)?;
    let used: Vec<u32> = series
        .iter()
        .map(|&(n, _)| n)
        .filter(|n| !excluded.contains(n))
        .collect();
    Ok(XiFit {
        xi_hat: fit.slope,
        intercept: fit.intercept,
        quantile,
        correction,
        n_range: (
            *used.iter().min().expect("nonempty"),
            *used.iter().max().expect("nonempty"),
        ),
        r_squared: fit.r_squared,
        excluded,
    })
}
