//! Transversal deviation of the geodesic envelope from the main diagonal.
//!
//! The deviation metric is `|y - x|` (integer-exact, same scaling exponent
//! as perpendicular distance), and it is measured on the full envelope, so
//! it covers *all* geodesics, not a sampled one.

use crate::error::{Error, Result};
use crate::lattice::{geodesic_envelope, GeodesicEnvelope, PathMode, WeightField};
use crate::rng::mix2;

/// Largest `|y - x|` over all on-geodesic vertices of a square envelope.
///
/// Equals the smallest cylinder half-width containing every geodesic.
pub fn max_deviation(envelope: &GeodesicEnvelope) -> Result<u32> {
    if !envelope.is_square() || envelope.v1() != (0, 0).into() {
        return Err(Error::InvalidArgument(format!(
            "deviation needs a corner-to-corner square envelope, got ({},{}) -> ({},{})",
            envelope.v1().x,
            envelope.v1().y,
            envelope.v2().x,
            envelope.v2().y
        )));
    }
    Ok(envelope
        .columns()
        .map(|(x, lo, hi)| hi.abs_diff(x).max(x.abs_diff(lo)))
        .max()
        .expect("envelope has at least one column"))
}

/// One field's deviation measurement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviationRecord {
    pub n: u32,
    pub s: f64,
    pub mode: PathMode,
    pub seed: u64,
    pub max_dev: u32,
    pub passage_time: u32,
}

/// Generate one Bernoulli field on an `n x n` grid and measure its
/// envelope deviation.
pub fn deviation_record(
    n: u32,
    s: f64,
    mode: PathMode,
    seed: u64,
) -> Result<DeviationRecord> {
    let field = WeightField::generate(n, n, s, seed)?;
    let env = geodesic_envelope(&field, (0, 0), (n, n), mode)?;
    Ok(DeviationRecord {
        n,
        s,
        mode,
        seed,
        max_dev: max_deviation(&env)?,
        passage_time: env.passage_time(),
    })
}

/// Replication `rep` of a deviation experiment under `master_seed`.
pub fn deviation_record_rep(
    n: u32,
    s: f64,
    mode: PathMode,
    master_seed: u64,
    rep: u32,
) -> Result<DeviationRecord> {
    deviation_record(n, s, mode, mix2(master_seed, rep as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{brute_force_optimal_paths, Vertex};

    #[test]
    fn all_zeros_deviates_maximally() {
        let f = WeightField::constant(5, 5, 0).unwrap();
        let env = geodesic_envelope(&f, (0, 0), (5, 5), PathMode::LastPassage).unwrap();
        assert_eq!(max_deviation(&env).unwrap(), 5);
    }

    #[test]
    fn diagonal_staircase_field_stays_within_one() {
        // Weight 1 exactly on the staircase vertices nearest the diagonal,
        // 0 elsewhere: the unique geodesic family hugs the diagonal.
        let n = 6u32;
        let f = WeightField::from_fn(n, n, |x, y| (y == x || y == x + 1) as u8).unwrap();
        let env = geodesic_envelope(&f, (0, 0), (n, n), PathMode::LastPassage).unwrap();
        assert!(max_deviation(&env).unwrap() <= 1);
    }

    #[test]
    fn non_square_envelopes_rejected() {
        let f = WeightField::generate(4, 6, 0.5, 1).unwrap();
        let env = geodesic_envelope(&f, (0, 0), (4, 6), PathMode::LastPassage).unwrap();
        assert!(max_deviation(&env).is_err());
    }

    #[test]
    fn matches_brute_force_over_all_geodesics() {
        for trial in 0..300u64 {
            let f = WeightField::generate(4, 4, 0.5, mix2(0xDE7, trial)).unwrap();
            for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
                let env = geodesic_envelope(&f, (0, 0), (4, 4), mode).unwrap();
                let fast = max_deviation(&env).unwrap();
                let slow = brute_force_optimal_paths(&f, (0, 0), (4, 4), mode)
                    .unwrap()
                    .iter()
                    .map(|p| p.max_diagonal_deviation())
                    .max()
                    .unwrap();
                assert_eq!(fast, slow, "trial {trial}");
            }
        }
    }

    #[test]
    fn deviation_is_transpose_invariant() {
        for trial in 0..100u64 {
            let f = WeightField::generate(5, 5, 0.5, mix2(0xDE8, trial)).unwrap();
            let t = f.transpose();
            for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
                let a = max_deviation(
                    &geodesic_envelope(&f, (0, 0), (5, 5), mode).unwrap(),
                )
                .unwrap();
                let b = max_deviation(
                    &geodesic_envelope(&t, (0, 0), (5, 5), mode).unwrap(),
                )
                .unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn record_is_deterministic() {
        let a = deviation_record(16, 0.5, PathMode::LastPassage, 3).unwrap();
        let b = deviation_record(16, 0.5, PathMode::LastPassage, 3).unwrap();
        assert_eq!(a, b);
        assert!(a.max_dev <= 16);
        let _ = Vertex::new(0, 0);
    }
}
