//! Closed-form bounds on the diagonal shape value and the flatness
//! threshold derived from them.

use crate::error::{Error, Result};

fn check_s(s: f64) -> Result<()> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "Bernoulli parameter must lie in (0,1), got {s}"
        )));
    }
    Ok(())
}

/// Upper bound on the transverse shape value at `q`:
/// `2s + 2*sqrt(2 - 2|q|) * sqrt(s(1-s))`.
pub fn gperp_upper_bound(q: f64, s: f64) -> Result<f64> {
    check_s(s)?;
    if !q.is_finite() || q.abs() > 1.0 {
        return Err(Error::InvalidArgument(format!(
            "q must lie in [-1,1], got {q}"
        )));
    }
    Ok(2.0 * s + 2.0 * (2.0 - 2.0 * q.abs()).sqrt() * (s * (1.0 - s)).sqrt())
}

/// Lower bound on the diagonal shape value from the 1x1 diagonal-block
/// construction: `3s - s^2` (that is, `2s + s(1-s)`).
///
/// The construction bounds the expected passage time below by
/// `n(3s - s^2)` at every finite `n`, not just in the limit.
pub fn gperp_lower_bound_at_zero(s: f64) -> Result<f64> {
    check_s(s)?;
    Ok(3.0 * s - s * s)
}

/// Flatness threshold `t = 1 - (g11 - 2s)^2 / (8 s (1-s))`: beyond `|q| > t`
/// the transverse shape value is strictly below its diagonal value.
///
/// With `g11` at least the construction bound `3s - s^2`, the result is at
/// most `1 - s(1-s)/8`.
pub fn threshold_t(g11: f64, s: f64) -> Result<f64> {
    check_s(s)?;
    let gap = g11 - 2.0 * s;
    if gap < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "diagonal shape value {g11} below the trivial floor 2s = {}",
            2.0 * s
        )));
    }
    Ok(1.0 - gap * gap / (8.0 * s * (1.0 - s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_bound_frozen_values() {
        // q -> 1: the radical vanishes, bound = 2s.
        assert!((gperp_upper_bound(1.0, 0.3).unwrap() - 0.6).abs() < 1e-15);
        // q = 0, s = 1/2: 1 + sqrt(2).
        let v = gperp_upper_bound(0.0, 0.5).unwrap();
        assert!((v - (1.0 + 2.0f64.sqrt())).abs() < 1e-12);
        // q = 1/2, s = 1/2: 1 + 2 * 1 * 1/2 = 2, checked independently.
        assert!((gperp_upper_bound(0.5, 0.5).unwrap() - 2.0).abs() < 1e-12);
        // Symmetry in q.
        assert_eq!(
            gperp_upper_bound(-0.3, 0.4).unwrap(),
            gperp_upper_bound(0.3, 0.4).unwrap()
        );
    }

    #[test]
    fn lower_bound_frozen_values() {
        assert!((gperp_lower_bound_at_zero(0.5).unwrap() - 1.25).abs() < 1e-15);
        assert!((gperp_lower_bound_at_zero(0.3).unwrap() - 0.81).abs() < 1e-15);
        // s -> 0 limit.
        assert!(gperp_lower_bound_at_zero(1e-9).unwrap() < 1e-8);
    }

    #[test]
    fn threshold_frozen_values() {
        // At the construction bound the threshold meets 1 - s(1-s)/8.
        let t = threshold_t(1.25, 0.5).unwrap();
        assert!((t - 0.96875).abs() < 1e-15);
        assert!((t - (1.0 - 0.25 / 8.0)).abs() < 1e-15);
        // Slightly better diagonal value tightens it: 1 - 0.09/2.
        assert!((threshold_t(1.3, 0.5).unwrap() - 0.955).abs() < 1e-12);
        // Zero gap: threshold 1.
        assert_eq!(threshold_t(1.0, 0.5).unwrap(), 1.0);
    }

    #[test]
    fn threshold_below_one_for_positive_gap() {
        for g11 in [1.01, 1.1, 1.25, 1.4] {
            let t = threshold_t(g11, 0.5).unwrap();
            assert!(t < 1.0);
        }
        assert!(threshold_t(0.9, 0.5).is_err());
    }

    #[test]
    fn threshold_cap_under_the_construction_bound() {
        for s in [0.1, 0.3, 0.5, 0.7, 0.9] {
            let g11 = gperp_lower_bound_at_zero(s).unwrap();
            let t = threshold_t(g11, s).unwrap();
            assert!(t <= 1.0 - s * (1.0 - s) / 8.0 + 1e-15);
        }
    }
}
