//! Longest-common-subsequence lab: random word pairs, the LCS DP with its
//! oracles, alignment envelopes, and deviation profiles.

mod dp;
mod envelope;
mod oracle;
mod profile;
mod word;

pub use dp::{lcs_length, LCS_TABLE_CELL_LIMIT};
pub use envelope::{alignment_envelope, on_alignment_points, AlignmentEnvelope};
pub use oracle::{
    brute_force_alignment_union, brute_force_lcs_length, ORACLE_MAX_ALIGN_LEN,
    ORACLE_MAX_SUBSEQ_LEN,
};
pub use profile::lcs_deviation_profile;
pub use word::{uniform_dist, word_pair_rep, WordPair};
