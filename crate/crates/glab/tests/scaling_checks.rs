//! Scaling-form diagnostics at the scales the contracts are stated at:
//! the convergence-rate residual pattern, profile monotonicity within
//! bootstrap confidence, and the containment self-consistency check
//! against the fitted profile constant.

use glab::fluct::{
    cylinder_containment_prob, deviation_profile, fit_transversal_exponent, LogCorrection,
};
use glab::shape::convergence_profile;
use glab::stats::runs_test_z;
use glab::PathMode;

/// Residuals of the `a - b sqrt(ln n / n)` fit over a doubling ladder
/// show no systematic sign pattern (runs test at 5%).
#[test]
fn convergence_rate_residuals_pass_the_runs_test() {
    let prof = convergence_profile(
        0.5,
        &[64, 128, 256, 512, 1024, 2048, 4096],
        200,
        17,
        PathMode::LastPassage,
    )
    .unwrap();
    let z = runs_test_z(&prof.fit.residuals);
    assert!(z.abs() < 1.96, "runs-test z = {z}");
    // The intercept estimates the limit value; it must respect the
    // closed-form bracket.
    assert!(prof.fit.a > 1.25 && prof.fit.a < 1.0 + 2f64.sqrt());
}

/// Median deviations are nondecreasing across the ladder within the 95%
/// bootstrap confidence of the previous scale, in both passage modes.
#[test]
fn profile_medians_grow_within_bootstrap_confidence() {
    for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
        let prof = deviation_profile(0.5, &[32, 64, 128, 256], 60, mode, 23).unwrap();
        let medians: Vec<_> = prof
            .points
            .iter()
            .filter(|p| p.quantile == 0.5)
            .collect();
        for pair in medians.windows(2) {
            assert!(
                pair[1].value >= pair[0].ci_lo,
                "{mode:?}: median dropped from {} (ci_lo {}) to {}",
                pair[0].value,
                pair[0].ci_lo,
                pair[1].value
            );
        }
    }
}

/// Self-consistency: a cylinder sized by the fitted profile constant at
/// the asymptotic-form exponent contains everything at the largest
/// desk-scale n (the form over-covers, so the probability saturates).
#[test]
fn fitted_width_contains_geodesics_at_the_largest_scale() {
    let ladder = [32u32, 64, 128, 256];
    let prof = deviation_profile(0.5, &ladder, 40, PathMode::LastPassage, 31).unwrap();
    let fit = fit_transversal_exponent(&prof.quantile_series(0.5), 0.5, LogCorrection::SqrtLog)
        .unwrap();
    let n = *ladder.last().unwrap();
    let c = fit.intercept.exp();
    let width = (c * (n as f64).powf(6.0 / 7.0) * (n as f64).ln().sqrt()).ceil() as u32;
    let (p_hat, _) =
        cylinder_containment_prob(n, 0.5, width.min(n), PathMode::LastPassage, 100, 37)
            .unwrap();
    assert!(p_hat >= 0.99, "containment at fitted width: {p_hat}");
}
