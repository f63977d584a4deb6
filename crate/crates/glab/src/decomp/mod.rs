//! Block decompositions: decomposition passage times, exact checking of
//! the optimal-decomposition skew event, resampling-sensitivity trials,
//! and the corner-to-corner partition identity.

mod csv;
mod decomposition;
mod event_a;
mod partition;
mod resample_trial;

pub use csv::{
    EventAFieldRow, EventAProbRow, EVENT_A_FIELD_CSV_HEADER, EVENT_A_PROB_CSV_HEADER,
};
pub use decomposition::{decomposition_time, geodesic_decomposition, Decomposition};
pub use event_a::{
    check_event_a, estimate_event_a_prob, estimate_event_a_prob_with_reports,
    exhaustive_event_a, EventAReport, SkewPolicy, EVENT_A_MAX_N, EXHAUSTIVE_MAX_N,
};
pub use partition::{partition_identity_check, PartitionCheck, PARTITION_MAX_SIDE};
pub use resample_trial::{resampling_deviation_trial, validate_strictly_decreasing};
