//! Block decompositions of a square grid.
//!
//! An `n x n` grid with `n = m * k` is cut into `m` rectangular blocks of
//! width `k`; block `i` spans columns `[(i-1)k, ik]` and rows
//! `[r_{i-1}, r_i]` for a nondecreasing cut vector `r_0 = 0 <= ... <= r_m = n`.
//! The decomposition's passage time is the sum of the block passage times
//! (each block left-open at its lower-left corner), which never beats the
//! full-grid passage time and matches it exactly when the cuts ride a
//! geodesic.

use crate::error::{Error, Result};
use crate::lattice::{passage_time, sample_geodesic, PathMode, TieRule, Vertex, WeightField};
use crate::rng::mix3;

/// Cut heights for an `m`-block decomposition of an `n x n` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    k: u32,
    cuts: Vec<u32>,
}

impl Decomposition {
    /// Validate cut heights: `cuts[0] = 0`, `cuts[m] = n`, nondecreasing,
    /// with `k * m = n`.
    pub fn new(k: u32, cuts: Vec<u32>) -> Result<Self> {
        if k == 0 || cuts.len() < 2 {
            return Err(Error::InvalidArgument(
                "decomposition needs k >= 1 and at least one block".into(),
            ));
        }
        let m = (cuts.len() - 1) as u32;
        let n = k
            .checked_mul(m)
            .ok_or_else(|| Error::InvalidArgument("k * m overflows".into()))?;
        if cuts[0] != 0 || *cuts.last().unwrap() != n {
            return Err(Error::InvalidArgument(format!(
                "cuts must run from 0 to n = {n}, got {} .. {}",
                cuts[0],
                cuts.last().unwrap()
            )));
        }
        if cuts.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidArgument("cuts must be nondecreasing".into()));
        }
        Ok(Self { k, cuts })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of blocks.
    pub fn m(&self) -> u32 {
        (self.cuts.len() - 1) as u32
    }

    pub fn n(&self) -> u32 {
        self.k * self.m()
    }

    pub fn cuts(&self) -> &[u32] {
        &self.cuts
    }

    /// Corner pair of block `i` (1-based): `((i-1)k, r_{i-1})` to `(ik, r_i)`.
    pub fn block(&self, i: u32) -> (Vertex, Vertex) {
        let i = i as usize;
        (
            Vertex::new((i as u32 - 1) * self.k, self.cuts[i - 1]),
            Vertex::new(i as u32 * self.k, self.cuts[i]),
        )
    }

    /// Block heights `r_i - r_{i-1}`.
    pub fn heights(&self) -> impl Iterator<Item = u32> + '_ {
        self.cuts.windows(2).map(|w| w[1] - w[0])
    }
}

fn check_field_matches(field: &WeightField, n: u32) -> Result<()> {
    if field.nx() != n || field.ny() != n {
        return Err(Error::InvalidArgument(format!(
            "decomposition is for an {n}x{n} grid, field is {}x{}",
            field.nx(),
            field.ny()
        )));
    }
    Ok(())
}

/// Sum of the block passage times under `mode`.
pub fn decomposition_time(
    field: &WeightField,
    decomp: &Decomposition,
    mode: PathMode,
) -> Result<u32> {
    check_field_matches(field, decomp.n())?;
    let mut total = 0u32;
    for i in 1..=decomp.m() {
        let (lo, hi) = decomp.block(i);
        total += passage_time(field, lo, hi, mode)?;
    }
    Ok(total)
}

/// Decomposition induced by a sampled geodesic: cut `i` is the height at
/// which the geodesic crosses column `x = ik`.
///
/// Vertical runs at a cut column are resolved by the tie rule: `PreferUp`
/// takes the topmost crossing, `PreferRight` the bottom, `Seeded` a
/// deterministic draw within the run. The first and last cuts are pinned
/// to 0 and n by the decomposition contract. The result is always optimal:
/// its decomposition time equals the full passage time.
pub fn geodesic_decomposition(
    field: &WeightField,
    k: u32,
    rule: TieRule,
    mode: PathMode,
) -> Result<Decomposition> {
    let n = field.nx();
    check_field_matches(field, n)?;
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::InvalidArgument(format!(
            "block width {k} must divide n = {n}"
        )));
    }
    let m = n / k;
    let path = sample_geodesic(field, (0, 0), (n, n), mode, rule)?;

    let mut cuts = vec![0u32; m as usize + 1];
    cuts[m as usize] = n;
    for i in 1..m {
        let x = i * k;
        let mut lo = None;
        let mut hi = None;
        for v in path.vertices() {
            if v.x == x {
                if lo.is_none() {
                    lo = Some(v.y);
                }
                hi = Some(v.y);
            }
        }
        let (lo, hi) = (lo.expect("path crosses every column"), hi.unwrap());
        cuts[i as usize] = match rule {
            TieRule::PreferUp => hi,
            TieRule::PreferRight => lo,
            TieRule::Seeded(seed) => {
                let span = (hi - lo) as u64 + 1;
                lo + (mix3(seed, 0x6375_7473, x as u64) % span) as u32
            }
        };
    }
    Decomposition::new(k, cuts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::brute_force_passage_time;
    use crate::rng::mix2;

    #[test]
    fn single_block_is_the_full_grid() {
        let f = WeightField::generate(6, 6, 0.5, 1).unwrap();
        let d = Decomposition::new(6, vec![0, 6]).unwrap();
        assert_eq!(d.m(), 1);
        for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
            assert_eq!(
                decomposition_time(&f, &d, mode).unwrap(),
                passage_time(&f, (0, 0), (6, 6), mode).unwrap()
            );
        }
    }

    #[test]
    fn all_zeros_sums_to_zero() {
        let f = WeightField::constant(6, 6, 0).unwrap();
        let d = Decomposition::new(2, vec![0, 1, 5, 6]).unwrap();
        assert_eq!(decomposition_time(&f, &d, PathMode::LastPassage).unwrap(), 0);
    }

    #[test]
    fn invalid_cut_vectors_rejected() {
        assert!(Decomposition::new(2, vec![0, 3, 2, 6]).is_err());
        assert!(Decomposition::new(2, vec![1, 2, 6]).is_err());
        assert!(Decomposition::new(2, vec![0, 2, 5]).is_err());
        assert!(Decomposition::new(0, vec![0, 0]).is_err());
    }

    #[test]
    fn never_beats_the_full_passage_time() {
        // 1000 random decompositions on random fields, plus equality via
        // the geodesic-induced decomposition, checked against the oracle.
        let n = 6u32;
        for trial in 0..100u64 {
            let f = WeightField::generate(n, n, 0.5, mix2(0xD0, trial)).unwrap();
            let t = brute_force_passage_time(&f, (0, 0), (n, n), PathMode::LastPassage).unwrap();
            for sub in 0..10u64 {
                let k = if trial % 2 == 0 { 2 } else { 3 };
                let m = n / k;
                let mut cuts = vec![0u32; m as usize + 1];
                for i in 1..m {
                    cuts[i as usize] = (mix3(trial, sub, i as u64) % (n as u64 + 1)) as u32;
                }
                cuts[m as usize] = n;
                cuts.sort_unstable();
                let d = Decomposition::new(k, cuts).unwrap();
                assert!(decomposition_time(&f, &d, PathMode::LastPassage).unwrap() <= t);
            }
            for rule in [TieRule::PreferUp, TieRule::PreferRight, TieRule::Seeded(trial)] {
                let d = geodesic_decomposition(&f, 2, rule, PathMode::LastPassage).unwrap();
                assert_eq!(
                    decomposition_time(&f, &d, PathMode::LastPassage).unwrap(),
                    t
                );
            }
        }
    }

    #[test]
    fn first_passage_reverses_the_inequality() {
        for trial in 0..50u64 {
            let f = WeightField::generate(6, 6, 0.5, mix2(0xD1, trial)).unwrap();
            let t = passage_time(&f, (0, 0), (6, 6), PathMode::FirstPassage).unwrap();
            let d = Decomposition::new(2, vec![0, 2, 4, 6]).unwrap();
            assert!(decomposition_time(&f, &d, PathMode::FirstPassage).unwrap() >= t);
            let gd = geodesic_decomposition(&f, 3, TieRule::PreferUp, PathMode::FirstPassage)
                .unwrap();
            assert_eq!(
                decomposition_time(&f, &gd, PathMode::FirstPassage).unwrap(),
                t
            );
        }
    }

    #[test]
    fn all_ones_prefer_right_splits_at_the_bottom() {
        let n = 6;
        let f = WeightField::constant(n, n, 1).unwrap();
        let d = geodesic_decomposition(&f, n / 2, TieRule::PreferRight, PathMode::LastPassage)
            .unwrap();
        // The lowermost geodesic runs along the bottom then the right edge.
        assert_eq!(d.cuts(), &[0, 0, n]);
        assert_eq!(
            decomposition_time(&f, &d, PathMode::LastPassage).unwrap(),
            2 * n
        );
    }
}
