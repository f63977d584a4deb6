//! Independent resampling of vertex subsets.

use crate::error::{Error, Result};
use crate::lattice::field::{Vertex, WeightField};
use crate::rng::{bernoulli, mix2, mix3};

/// Stream tag separating resampling draws from field generation, so a
/// resample with the field's own seed still draws fresh weights.
const RESAMPLE_STREAM: u64 = 0x5245_5341_4d50_4c45; // "RESAMPLE"

/// Return a copy of `field` with the weights on `set` redrawn i.i.d.
/// Bernoulli(s) from `resample_seed`. The input field is unchanged.
pub fn resample_vertex_set(
    field: &WeightField,
    set: &[Vertex],
    resample_seed: u64,
) -> Result<WeightField> {
    for v in set {
        if !field.contains(*v) {
            return Err(Error::InvalidArgument(format!(
                "resample vertex ({},{}) outside {}x{} grid",
                v.x,
                v.y,
                field.nx(),
                field.ny()
            )));
        }
    }
    let stream = mix2(resample_seed, RESAMPLE_STREAM);
    let mut out = field.clone();
    for v in set {
        let w = bernoulli(mix3(stream, v.x as u64, v.y as u64), field.s());
        out.put_weight(v.x, v.y, w);
    }
    Ok(out)
}

/// All grid vertices on the anti-diagonal `x + y = j`.
pub fn anti_diagonal(nx: u32, ny: u32, j: u32) -> Vec<Vertex> {
    let x_lo = j.saturating_sub(ny);
    let x_hi = j.min(nx);
    (x_lo..=x_hi)
        .map(|x| Vertex::new(x, j - x))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_set_is_identity() {
        let f = WeightField::generate(5, 5, 0.5, 3).unwrap();
        let g = resample_vertex_set(&f, &[], 99).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn single_vertex_changes_at_most_one_cell() {
        let f = WeightField::generate(5, 5, 0.5, 3).unwrap();
        let g = resample_vertex_set(&f, &[Vertex::new(2, 4)], 99).unwrap();
        let mut diffs = 0;
        for y in 0..=5 {
            for x in 0..=5 {
                if f.weight(x, y) != g.weight(x, y) {
                    diffs += 1;
                    assert_eq!((x, y), (2, 4));
                }
            }
        }
        assert!(diffs <= 1);
    }

    #[test]
    fn out_of_grid_vertex_rejected() {
        let f = WeightField::generate(3, 3, 0.5, 3).unwrap();
        assert!(resample_vertex_set(&f, &[Vertex::new(4, 0)], 1).is_err());
    }

    #[test]
    fn anti_diagonal_spans_the_grid_slice() {
        assert_eq!(
            anti_diagonal(3, 3, 3),
            vec![
                Vertex::new(0, 3),
                Vertex::new(1, 2),
                Vertex::new(2, 1),
                Vertex::new(3, 0)
            ]
        );
        // Clipped by the grid on a rectangle.
        assert_eq!(
            anti_diagonal(2, 4, 5),
            vec![Vertex::new(1, 4), Vertex::new(2, 3)]
        );
    }
}
