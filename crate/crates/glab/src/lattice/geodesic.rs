//! Geodesic sampling by DP backtracking.

use crate::error::{Error, Result};
use crate::lattice::envelope::check_table_capacity;
use crate::lattice::field::{Vertex, WeightField};
use crate::lattice::passage::{check_span, forward_table, PathMode};
use crate::rng::mix3;

/// How equal-value predecessors are resolved while backtracking.
///
/// Explicit by design: path identity must be reproducible, not an accident
/// of iteration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieRule {
    /// Take up-steps as early as possible; yields the uppermost geodesic.
    PreferUp,
    /// Take right-steps as early as possible; yields the lowermost geodesic.
    PreferRight,
    /// Per-vertex coin flips derived from the carried seed.
    Seeded(u64),
}

/// A unit-step up-right path, stored as its full vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedPath {
    vertices: Vec<Vertex>,
}

impl DirectedPath {
    /// Validate and wrap a vertex sequence. Each consecutive difference
    /// must be exactly (1,0) or (0,1).
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument("empty path".into()));
        }
        for pair in vertices.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let step_right = b.x == a.x + 1 && b.y == a.y;
            let step_up = b.x == a.x && b.y == a.y + 1;
            if !step_right && !step_up {
                return Err(Error::InvalidArgument(format!(
                    "({},{}) -> ({},{}) is not a unit up-right step",
                    a.x, a.y, b.x, b.y
                )));
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    /// Total weight along the path with the start vertex excluded.
    pub fn weight_excluding_start(&self, field: &WeightField) -> u32 {
        self.vertices[1..]
            .iter()
            .map(|v| field.weight(v.x, v.y))
            .sum()
    }

    /// Largest `|y - x|` over the path's vertices.
    pub fn max_diagonal_deviation(&self) -> u32 {
        self.vertices
            .iter()
            .map(|v| v.x.abs_diff(v.y))
            .max()
            .unwrap()
    }
}

/// Sample one geodesic from `v1` to `v2` by backtracking the forward DP.
///
/// The returned path's weight (start excluded) equals the passage time.
/// Needs the full forward table, so the same capacity guard as
/// [`geodesic_envelope`](crate::lattice::geodesic_envelope) applies.
pub fn sample_geodesic(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    mode: PathMode,
    rule: TieRule,
) -> Result<DirectedPath> {
    let (v1, v2) = (v1.into(), v2.into());
    check_span(field, v1, v2)?;
    check_table_capacity(v1, v2, 1)?;
    let f = forward_table(field, v1, v2, mode);

    let mut rev = vec![v2];
    let (mut i, mut j) = ((v2.x - v1.x) as usize, (v2.y - v1.y) as usize);
    while i > 0 || j > 0 {
        let cur = Vertex::new(v1.x + i as u32, v1.y + j as u32);
        let w = field.weight(cur.x, cur.y);
        let from_left = i > 0 && f[j][i - 1] + w == f[j][i];
        let from_below = j > 0 && f[j - 1][i] + w == f[j][i];
        debug_assert!(from_left || from_below);
        let take_left = match (from_left, from_below) {
            (true, false) => true,
            (false, true) => false,
            _ => match rule {
                // Ending with a right-step run pushes up-steps early.
                TieRule::PreferUp => true,
                TieRule::PreferRight => false,
                TieRule::Seeded(seed) => mix3(seed, cur.x as u64, cur.y as u64) & 1 == 0,
            },
        };
        if take_left {
            i -= 1;
        } else {
            j -= 1;
        }
        rev.push(Vertex::new(v1.x + i as u32, v1.y + j as u32));
    }
    rev.reverse();
    let path = DirectedPath { vertices: rev };
    debug_assert_eq!(
        path.weight_excluding_start(field),
        f[(v2.y - v1.y) as usize][(v2.x - v1.x) as usize]
    );
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::oracle::brute_force_uppermost_geodesic;
    use crate::lattice::passage::passage_time;
    use crate::rng::mix2;

    #[test]
    fn all_ones_prefer_up_hugs_left_then_top() {
        let n = 4;
        let f = WeightField::constant(n, n, 1).unwrap();
        let p = sample_geodesic(&f, (0, 0), (n, n), PathMode::LastPassage, TieRule::PreferUp)
            .unwrap();
        let expect: Vec<Vertex> = (0..=n)
            .map(|y| Vertex::new(0, y))
            .chain((1..=n).map(|x| Vertex::new(x, n)))
            .collect();
        assert_eq!(p.vertices(), expect.as_slice());
        assert_eq!(p.weight_excluding_start(&f), 2 * n);
    }

    #[test]
    fn path_weight_always_equals_passage_time() {
        for trial in 0..200u64 {
            let f = WeightField::generate(7, 5, 0.5, mix2(0xBEEF, trial)).unwrap();
            for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
                for rule in [TieRule::PreferUp, TieRule::PreferRight, TieRule::Seeded(trial)] {
                    let p = sample_geodesic(&f, (0, 0), (7, 5), mode, rule).unwrap();
                    assert_eq!(
                        p.weight_excluding_start(&f),
                        passage_time(&f, (0, 0), (7, 5), mode).unwrap()
                    );
                    assert_eq!(p.start(), Vertex::new(0, 0));
                    assert_eq!(p.end(), Vertex::new(7, 5));
                    assert_eq!(p.vertices().len() as u32, 7 + 5 + 1);
                }
            }
        }
    }

    #[test]
    fn prefer_up_matches_brute_force_uppermost() {
        for trial in 0..500u64 {
            let f = WeightField::generate(4, 4, 0.5, mix2(0xF00D, trial)).unwrap();
            for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
                let fast =
                    sample_geodesic(&f, (0, 0), (4, 4), mode, TieRule::PreferUp).unwrap();
                let slow = brute_force_uppermost_geodesic(&f, (0, 0), (4, 4), mode).unwrap();
                assert_eq!(fast, slow, "trial {trial}");
            }
        }
    }

    #[test]
    fn rejects_malformed_vertex_sequences() {
        assert!(DirectedPath::new(vec![]).is_err());
        let diag = vec![Vertex::new(0, 0), Vertex::new(1, 1)];
        assert!(DirectedPath::new(diag).is_err());
    }
}
