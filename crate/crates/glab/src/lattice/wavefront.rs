//! Anti-diagonal wavefront variant of the passage-time DP.
//!
//! Cells on the anti-diagonal `x + y = d` depend only on diagonal `d - 1`,
//! so each diagonal can be filled in parallel. Integer max/min is
//! order-insensitive, so the result is bit-identical to the row-rolling DP
//! for any worker count.

use rayon::prelude::*;

use crate::error::Result;
use crate::lattice::field::{Vertex, WeightField};
use crate::lattice::passage::{check_span, PathMode};

/// Below this diagonal length the parallel split costs more than it saves.
const PAR_THRESHOLD: usize = 4096;

/// Passage time from `v1` to `v2`, computed by wavefront sweeps.
pub fn passage_time_wavefront(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    mode: PathMode,
) -> Result<u32> {
    let (v1, v2) = (v1.into(), v2.into());
    check_span(field, v1, v2)?;
    let w = (v2.x - v1.x) as usize;
    let h = (v2.y - v1.y) as usize;

    // prev holds F on diagonal d-1, indexed by i - i_min(d-1).
    let mut prev: Vec<u32> = vec![0];
    let mut cur: Vec<u32> = Vec::new();
    for d in 1..=(w + h) {
        let i_min = d.saturating_sub(h);
        let i_max = d.min(w);
        let prev_min = (d - 1).saturating_sub(h);
        cur.clear();
        cur.resize(i_max - i_min + 1, 0);
        let fill = |(idx, cell): (usize, &mut u32)| {
            let i = i_min + idx;
            let j = d - i;
            let wt = field.weight(v1.x + i as u32, v1.y + j as u32);
            let left = if i > 0 { Some(prev[i - 1 - prev_min]) } else { None };
            let below = if j > 0 && i < d && i >= prev_min {
                Some(prev[i - prev_min])
            } else {
                None
            };
            *cell = wt + match (left, below) {
                (Some(a), Some(b)) => mode.better(a, b),
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (None, None) => unreachable!("d >= 1 has a predecessor"),
            };
        };
        if cur.len() >= PAR_THRESHOLD {
            cur.par_iter_mut().enumerate().for_each(|(idx, cell)| fill((idx, cell)));
        } else {
            cur.iter_mut().enumerate().for_each(fill);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    Ok(prev[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::passage::passage_time;
    use crate::rng::mix2;

    #[test]
    fn matches_row_dp_on_random_rectangles() {
        for trial in 0..200u64 {
            let seed = mix2(0x7A7E, trial);
            let nx = 1 + (mix2(seed, 1) % 12) as u32;
            let ny = 1 + (mix2(seed, 2) % 12) as u32;
            let f = WeightField::generate(nx, ny, 0.5, seed).unwrap();
            for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
                assert_eq!(
                    passage_time_wavefront(&f, (0, 0), (nx, ny), mode).unwrap(),
                    passage_time(&f, (0, 0), (nx, ny), mode).unwrap(),
                    "{nx}x{ny} trial {trial}"
                );
            }
        }
    }

    #[test]
    fn matches_row_dp_on_a_large_grid() {
        let f = WeightField::generate(800, 500, 0.5, 4242).unwrap();
        for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
            assert_eq!(
                passage_time_wavefront(&f, (0, 0), (800, 500), mode).unwrap(),
                passage_time(&f, (0, 0), (800, 500), mode).unwrap()
            );
        }
    }

    #[test]
    fn handles_interior_rectangles() {
        let f = WeightField::generate(10, 10, 0.5, 5).unwrap();
        assert_eq!(
            passage_time_wavefront(&f, (2, 3), (9, 7), PathMode::LastPassage).unwrap(),
            passage_time(&f, (2, 3), (9, 7), PathMode::LastPassage).unwrap()
        );
    }
}
