//! Resampling-sensitivity trials on strictly decreasing vertex sets.
//!
//! A strictly decreasing set is an antichain of the coordinatewise order:
//! sorted by x its y-coordinates strictly decrease (the anti-diagonal
//! `x + y = j` is the canonical example). A directed path meets such a set
//! in at most one vertex, and the weights are 0/1, so resampling the whole
//! set moves the passage time by at most 1 — exactly, not on average.

use crate::error::{Error, Result};
use crate::lattice::{passage_time, resample_vertex_set, PathMode, Vertex, WeightField};

/// Check that `set` is sortable so x strictly increases while y strictly
/// decreases. Rejects duplicated coordinates in either axis.
pub fn validate_strictly_decreasing(set: &[Vertex]) -> Result<()> {
    let mut sorted = set.to_vec();
    sorted.sort_by_key(|v| (v.x, v.y));
    for pair in sorted.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if !(a.x < b.x && a.y > b.y) {
            return Err(Error::InvalidArgument(format!(
                "set is not strictly decreasing: ({},{}) and ({},{}) \
                 do not step right-and-down",
                a.x, a.y, b.x, b.y
            )));
        }
    }
    Ok(())
}

/// Resample the weights on `set` and return `|T - T_resampled|`.
///
/// Guaranteed to be 0 or 1 whenever `set` validates; the validation is a
/// precondition because the bound would not apply otherwise.
pub fn resampling_deviation_trial(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    set: &[Vertex],
    resample_seed: u64,
    mode: PathMode,
) -> Result<u32> {
    let (v1, v2) = (v1.into(), v2.into());
    validate_strictly_decreasing(set)?;
    let before = passage_time(field, v1, v2, mode)?;
    let resampled = resample_vertex_set(field, set, resample_seed)?;
    let after = passage_time(&resampled, v1, v2, mode)?;
    let dev = before.abs_diff(after);
    debug_assert!(dev <= 1, "antichain resampling moved T by {dev}");
    Ok(dev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::anti_diagonal;
    use crate::rng::{mix2, mix3};

    #[test]
    fn empty_set_changes_nothing() {
        let f = WeightField::generate(6, 6, 0.5, 2).unwrap();
        let d =
            resampling_deviation_trial(&f, (0, 0), (6, 6), &[], 77, PathMode::LastPassage)
                .unwrap();
        assert_eq!(d, 0);
    }

    #[test]
    fn square_sets_are_rejected() {
        let f = WeightField::generate(4, 4, 0.5, 2).unwrap();
        let square = vec![
            Vertex::new(1, 1),
            Vertex::new(1, 2),
            Vertex::new(2, 1),
            Vertex::new(2, 2),
        ];
        let err =
            resampling_deviation_trial(&f, (0, 0), (4, 4), &square, 1, PathMode::LastPassage);
        assert!(err.is_err());
    }

    #[test]
    fn anti_diagonals_validate() {
        for j in 0..=8u32 {
            validate_strictly_decreasing(&anti_diagonal(4, 4, j)).unwrap();
        }
        // Chains (both coordinates increasing) must be rejected: a path
        // could contain all of them.
        let chain = vec![Vertex::new(0, 0), Vertex::new(1, 1)];
        assert!(validate_strictly_decreasing(&chain).is_err());
    }

    #[test]
    fn anti_diagonal_batches_move_t_by_at_most_one() {
        for trial in 0..2000u64 {
            let seed = mix2(0x5E7, trial);
            let nx = 2 + (mix3(seed, 1, 0) % 14) as u32;
            let ny = 2 + (mix3(seed, 2, 0) % 14) as u32;
            let f = WeightField::generate(nx, ny, 0.5, seed).unwrap();
            let j = (mix3(seed, 3, 0) % (nx + ny + 1) as u64) as u32;
            let set = anti_diagonal(nx, ny, j);
            let mode = if trial % 2 == 0 {
                PathMode::LastPassage
            } else {
                PathMode::FirstPassage
            };
            let d = resampling_deviation_trial(&f, (0, 0), (nx, ny), &set, mix2(seed, 9), mode)
                .unwrap();
            assert!(d <= 1, "trial {trial}: deviation {d}");
        }
    }
}
