//! Shape-function estimation: Monte Carlo point estimates in arbitrary
//! directions, closed-form bounds, curvature-exponent fits, and
//! convergence-rate profiles.

mod bounds;
mod convergence;
mod csv;
mod curvature;
mod direction;
mod estimate;

pub use bounds::{gperp_lower_bound_at_zero, gperp_upper_bound, threshold_t};
pub use convergence::{
    convergence_profile, convergence_profile_with, ConvergenceProfile, SqrtLogRateFit,
};
pub use csv::{ShapeCsvRow, SHAPE_CSV_HEADER};
pub use curvature::{fit_curvature, KappaFit, MIN_FIT_POINTS};
pub use direction::Direction;
pub use estimate::{
    estimate_point, estimate_point_with, BernoulliSource, ConstantSource, FieldSource,
    Normalization, ShapeEstimate,
};
