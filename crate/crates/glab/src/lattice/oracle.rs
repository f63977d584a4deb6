//! Exhaustive path-enumeration oracles.
//!
//! Reference semantics for the dynamic programs, valid only at scales where
//! enumerating every directed path is tractable. The guards are hard errors.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lattice::field::{Vertex, WeightField};
use crate::lattice::geodesic::DirectedPath;
use crate::lattice::passage::{check_span, PathMode};

/// l1 guard for value-only enumeration (C(24,12) ~ 2.7M paths).
pub const ORACLE_MAX_L1: u32 = 24;

/// l1 guard for enumerations that materialize paths or vertex sets.
pub const ORACLE_MAX_L1_PATHS: u32 = 16;

fn check_scale(v1: Vertex, v2: Vertex, limit: u32, what: &'static str) -> Result<()> {
    let size = v1.l1_to(v2);
    if size > limit {
        return Err(Error::OracleScale {
            what,
            size: size as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

/// Visit every directed path from `v1` to `v2`, reporting the path weight
/// with the start vertex excluded.
fn for_each_path(
    field: &WeightField,
    v1: Vertex,
    v2: Vertex,
    mut visit: impl FnMut(u32, &[Vertex]),
) {
    let mut stack = vec![v1];
    fn recurse(
        field: &WeightField,
        v2: Vertex,
        stack: &mut Vec<Vertex>,
        sum: u32,
        visit: &mut impl FnMut(u32, &[Vertex]),
    ) {
        let cur = *stack.last().unwrap();
        if cur == v2 {
            visit(sum, stack);
            return;
        }
        if cur.x < v2.x {
            let next = Vertex::new(cur.x + 1, cur.y);
            stack.push(next);
            recurse(field, v2, stack, sum + field.weight(next.x, next.y), visit);
            stack.pop();
        }
        if cur.y < v2.y {
            let next = Vertex::new(cur.x, cur.y + 1);
            stack.push(next);
            recurse(field, v2, stack, sum + field.weight(next.x, next.y), visit);
            stack.pop();
        }
    }
    recurse(field, v2, &mut stack, 0, &mut visit);
}

/// Reference passage time by enumerating every directed path.
pub fn brute_force_passage_time(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    mode: PathMode,
) -> Result<u32> {
    let (v1, v2) = (v1.into(), v2.into());
    check_span(field, v1, v2)?;
    check_scale(v1, v2, ORACLE_MAX_L1, "brute-force passage time")?;
    let mut best: Option<u32> = None;
    for_each_path(field, v1, v2, |sum, _| {
        best = Some(match best {
            None => sum,
            Some(b) => mode.better(b, sum),
        });
    });
    Ok(best.expect("at least one path exists"))
}

/// All optimal paths (geodesics), in generation order (right step explored
/// before up step).
pub fn brute_force_optimal_paths(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    mode: PathMode,
) -> Result<Vec<DirectedPath>> {
    let (v1, v2) = (v1.into(), v2.into());
    check_span(field, v1, v2)?;
    check_scale(v1, v2, ORACLE_MAX_L1_PATHS, "brute-force geodesic enumeration")?;
    let best = brute_force_passage_time(field, v1, v2, mode)?;
    let mut paths = Vec::new();
    for_each_path(field, v1, v2, |sum, verts| {
        if sum == best {
            paths.push(DirectedPath::new(verts.to_vec()).expect("enumerated path is valid"));
        }
    });
    Ok(paths)
}

/// Union of the vertex sets of all geodesics.
pub fn brute_force_geodesic_union(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    mode: PathMode,
) -> Result<BTreeSet<Vertex>> {
    let (v1, v2) = (v1.into(), v2.into());
    let mut union = BTreeSet::new();
    for path in brute_force_optimal_paths(field, v1, v2, mode)? {
        union.extend(path.vertices().iter().copied());
    }
    Ok(union)
}

/// The geodesic whose y-coordinate sequence is lexicographically largest
/// (the uppermost geodesic).
pub fn brute_force_uppermost_geodesic(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    mode: PathMode,
) -> Result<DirectedPath> {
    let paths = brute_force_optimal_paths(field, v1, v2, mode)?;
    Ok(paths
        .into_iter()
        .max_by(|a, b| {
            let ya = a.vertices().iter().map(|v| v.y);
            let yb = b.vertices().iter().map(|v| v.y);
            ya.cmp(yb)
        })
        .expect("at least one geodesic"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::passage::passage_time;
    use crate::rng::mix2;

    #[test]
    fn all_ones_3x3_matches_dp() {
        let f = WeightField::constant(3, 3, 1).unwrap();
        let b = brute_force_passage_time(&f, (0, 0), (3, 3), PathMode::LastPassage).unwrap();
        assert_eq!(b, 6);
        assert_eq!(
            b,
            passage_time(&f, (0, 0), (3, 3), PathMode::LastPassage).unwrap()
        );
    }

    #[test]
    fn worked_grid_agrees() {
        let rows = [[0u8, 1, 1], [0, 1, 0], [1, 0, 1]];
        let f = WeightField::from_fn(2, 2, |x, y| rows[y as usize][x as usize]).unwrap();
        assert_eq!(
            brute_force_passage_time(&f, (0, 0), (2, 2), PathMode::LastPassage).unwrap(),
            3
        );
    }

    #[test]
    fn oracle_sweep_on_random_4x3_fields() {
        for trial in 0..1000u64 {
            let f = WeightField::generate(4, 3, 0.5, mix2(0xDEAD, trial)).unwrap();
            for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
                assert_eq!(
                    brute_force_passage_time(&f, (0, 0), (4, 3), mode).unwrap(),
                    passage_time(&f, (0, 0), (4, 3), mode).unwrap(),
                );
            }
        }
    }

    #[test]
    fn refuses_large_instances() {
        let f = WeightField::constant(20, 20, 1).unwrap();
        let err = brute_force_passage_time(&f, (0, 0), (20, 20), PathMode::LastPassage);
        assert!(matches!(err, Err(Error::OracleScale { .. })));
    }
}
