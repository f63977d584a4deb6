//! Cylinder-containment probability: how often all geodesics stay within
//! `|y - x| <= width`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fluct::deviation::deviation_record_rep;
use crate::lattice::PathMode;
use crate::stats::mean_stderr;

/// Frequency of `max_dev <= width` over `reps` independent fields.
pub fn cylinder_containment_prob(
    n: u32,
    s: f64,
    width: u32,
    mode: PathMode,
    reps: u32,
    seed: u64,
) -> Result<(f64, f64)> {
    if width > n {
        return Err(Error::InvalidArgument(format!(
            "width {width} exceeds grid side {n}"
        )));
    }
    if reps == 0 {
        return Err(Error::InvalidArgument("need at least one replication".into()));
    }
    let hits: Vec<f64> = (0..reps)
        .into_par_iter()
        .map(|rep| {
            deviation_record_rep(n, s, mode, seed, rep)
                .map(|r| (r.max_dev <= width) as u32 as f64)
        })
        .collect::<Result<_>>()?;
    Ok(mean_stderr(&hits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_width_always_contains() {
        let (p, se) = cylinder_containment_prob(16, 0.5, 16, PathMode::LastPassage, 20, 1)
            .unwrap();
        assert_eq!(p, 1.0);
        assert_eq!(se, 0.0);
    }

    #[test]
    fn zero_width_rarely_contains() {
        // Confining every geodesic to the diagonal itself is a rare event
        // at moderate n.
        let (p, _) = cylinder_containment_prob(32, 0.5, 0, PathMode::LastPassage, 40, 2)
            .unwrap();
        assert!(p < 0.5);
    }

    #[test]
    fn monotone_in_width_for_the_same_seed_set() {
        // Nested events on identical fields: exact monotonicity.
        let mut prev = -1.0;
        for width in [0u32, 2, 4, 8, 16, 24] {
            let (p, _) =
                cylinder_containment_prob(24, 0.5, width, PathMode::LastPassage, 30, 3)
                    .unwrap();
            assert!(p >= prev);
            prev = p;
        }
    }

    #[test]
    fn width_beyond_grid_rejected() {
        assert!(cylinder_containment_prob(8, 0.5, 9, PathMode::LastPassage, 2, 0).is_err());
    }
}
