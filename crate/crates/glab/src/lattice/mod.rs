//! Weight fields, passage-time dynamic programs, geodesics and their
//! envelopes, plus the exhaustive path oracles that pin their semantics.

mod envelope;
mod field;
mod geodesic;
mod oracle;
mod passage;
mod resample;
mod wavefront;

pub use envelope::{
    geodesic_envelope, geodesic_envelope_guarded, on_geodesic_vertices, GeodesicEnvelope,
    DEFAULT_TABLE_SIDE,
};
pub use field::{Vertex, WeightField, MAX_SIDE};
pub use geodesic::{sample_geodesic, DirectedPath, TieRule};
pub use oracle::{
    brute_force_geodesic_union, brute_force_optimal_paths, brute_force_passage_time,
    brute_force_uppermost_geodesic, ORACLE_MAX_L1, ORACLE_MAX_L1_PATHS,
};
pub use passage::{passage_time, PathMode};
pub use resample::{anti_diagonal, resample_vertex_set};
pub use wavefront::passage_time_wavefront;
