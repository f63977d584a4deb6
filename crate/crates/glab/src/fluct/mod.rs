//! Transversal-fluctuation measurement: envelope deviations, scale
//! profiles, exponent fits, and cylinder-containment probabilities.

mod containment;
mod csv;
mod deviation;
mod profile;
mod xi;

pub use containment::cylinder_containment_prob;
pub use csv::{
    alphabet_label, ContainmentCsvRow, ProfileCsvRow, CONTAINMENT_CSV_HEADER,
    PROFILE_CSV_HEADER,
};
pub use deviation::{deviation_record, deviation_record_rep, max_deviation, DeviationRecord};
pub use profile::{deviation_profile, DeviationProfile, ProfileKind, ProfilePoint, PROFILE_QUANTILES};
pub use xi::{fit_transversal_exponent, LogCorrection, XiFit, MIN_XI_POINTS};

pub(crate) use profile::summarize_scale;
