//! The geodesic envelope: per-column extremes of the union of all
//! geodesics, computed from the forward/backward identity
//! `F(x,y) + B(x,y) = T`.

use crate::error::{Error, Result};
use crate::lattice::field::{Vertex, WeightField};
use crate::lattice::passage::{backward_table, check_span, forward_table, PathMode};

/// Default side guard for computations holding full F and B tables
/// (two u32 tables of `(side+1)^2` cells each, ~288 MB at 6000).
pub const DEFAULT_TABLE_SIDE: u32 = 6000;

pub(crate) fn check_table_capacity(v1: Vertex, v2: Vertex, tables: u64) -> Result<()> {
    check_table_capacity_side(v1, v2, tables, DEFAULT_TABLE_SIDE)
}

pub(crate) fn check_table_capacity_side(
    v1: Vertex,
    v2: Vertex,
    tables: u64,
    max_side: u32,
) -> Result<()> {
    let w = (v2.x - v1.x) as u64 + 1;
    let h = (v2.y - v1.y) as u64 + 1;
    let max = max_side as u64 + 1;
    if w > max || h > max {
        return Err(Error::Capacity {
            what: "full DP table",
            needed: tables * w * h,
            limit: tables * max * max,
        });
    }
    Ok(())
}

/// Per-column y-interval of the union of all geodesics from `v1` to `v2`.
///
/// A vertex is on a geodesic iff its forward and backward passage times sum
/// to the total; `ymin`/`ymax` record the extreme such y per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeodesicEnvelope {
    v1: Vertex,
    v2: Vertex,
    mode: PathMode,
    passage_time: u32,
    ymin: Vec<u32>,
    ymax: Vec<u32>,
}

impl GeodesicEnvelope {
    pub fn v1(&self) -> Vertex {
        self.v1
    }

    pub fn v2(&self) -> Vertex {
        self.v2
    }

    pub fn mode(&self) -> PathMode {
        self.mode
    }

    pub fn passage_time(&self) -> u32 {
        self.passage_time
    }

    pub fn is_square(&self) -> bool {
        self.v2.x - self.v1.x == self.v2.y - self.v1.y
    }

    /// Lowest on-geodesic y in the column at absolute coordinate `x`.
    pub fn ymin_at(&self, x: u32) -> u32 {
        self.ymin[(x - self.v1.x) as usize]
    }

    /// Highest on-geodesic y in the column at absolute coordinate `x`.
    pub fn ymax_at(&self, x: u32) -> u32 {
        self.ymax[(x - self.v1.x) as usize]
    }

    /// Iterate `(x, ymin, ymax)` over all columns.
    pub fn columns(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        (self.v1.x..=self.v2.x).map(move |x| (x, self.ymin_at(x), self.ymax_at(x)))
    }

    /// True if `v` lies within the envelope band (necessary, not
    /// sufficient, for being on a geodesic).
    pub fn contains(&self, v: Vertex) -> bool {
        v.x >= self.v1.x
            && v.x <= self.v2.x
            && v.y >= self.ymin_at(v.x)
            && v.y <= self.ymax_at(v.x)
    }
}

/// Compute the geodesic envelope with the default capacity guard.
pub fn geodesic_envelope(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    mode: PathMode,
) -> Result<GeodesicEnvelope> {
    geodesic_envelope_guarded(field, v1, v2, mode, DEFAULT_TABLE_SIDE)
}

/// Compute the geodesic envelope with an explicit side guard.
pub fn geodesic_envelope_guarded(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    mode: PathMode,
    max_side: u32,
) -> Result<GeodesicEnvelope> {
    let (v1, v2) = (v1.into(), v2.into());
    check_span(field, v1, v2)?;
    check_table_capacity_side(v1, v2, 2, max_side)?;
    let f = forward_table(field, v1, v2, mode);
    let b = backward_table(field, v1, v2, mode);
    let w = (v2.x - v1.x) as usize;
    let h = (v2.y - v1.y) as usize;
    let total = f[h][w];
    debug_assert_eq!(b[0][0], total);

    let mut ymin = vec![0u32; w + 1];
    let mut ymax = vec![0u32; w + 1];
    for i in 0..=w {
        let mut lo = None;
        let mut hi = None;
        for j in 0..=h {
            if f[j][i] + b[j][i] == total {
                if lo.is_none() {
                    lo = Some(j);
                }
                hi = Some(j);
            }
        }
        // Every column meets at least one geodesic.
        let lo = lo.expect("column crossed by some geodesic");
        let hi = hi.expect("column crossed by some geodesic");
        ymin[i] = v1.y + lo as u32;
        ymax[i] = v1.y + hi as u32;
    }
    Ok(GeodesicEnvelope {
        v1,
        v2,
        mode,
        passage_time: total,
        ymin,
        ymax,
    })
}

/// Exact on-geodesic vertex set, for oracle-scale grids.
///
/// Materializes every flagged vertex, so it is guarded much tighter than
/// the envelope itself.
pub fn on_geodesic_vertices(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    mode: PathMode,
) -> Result<Vec<Vertex>> {
    let (v1, v2) = (v1.into(), v2.into());
    check_span(field, v1, v2)?;
    let cells = ((v2.x - v1.x) as u64 + 1) * ((v2.y - v1.y) as u64 + 1);
    const LIMIT: u64 = 1 << 22;
    if cells > LIMIT {
        return Err(Error::OracleScale {
            what: "on-geodesic vertex set",
            size: cells,
            limit: LIMIT,
        });
    }
    let f = forward_table(field, v1, v2, mode);
    let b = backward_table(field, v1, v2, mode);
    let w = (v2.x - v1.x) as usize;
    let h = (v2.y - v1.y) as usize;
    let total = f[h][w];
    let mut out = Vec::new();
    for i in 0..=w {
        for j in 0..=h {
            if f[j][i] + b[j][i] == total {
                out.push(Vertex::new(v1.x + i as u32, v1.y + j as u32));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::geodesic::{sample_geodesic, TieRule};
    use crate::lattice::oracle::brute_force_geodesic_union;
    use crate::rng::mix2;
    use std::collections::BTreeSet;

    #[test]
    fn degenerate_fields_fill_the_rectangle() {
        for w in [0u8, 1] {
            let f = WeightField::constant(4, 4, w).unwrap();
            let env = geodesic_envelope(&f, (0, 0), (4, 4), PathMode::LastPassage).unwrap();
            for (x, lo, hi) in env.columns() {
                let _ = x;
                assert_eq!(lo, 0);
                assert_eq!(hi, 4);
            }
        }
    }

    #[test]
    fn envelope_extremes_are_monotone_and_pinned() {
        for trial in 0..200u64 {
            let f = WeightField::generate(6, 6, 0.4, mix2(0xE57, trial)).unwrap();
            for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
                let env = geodesic_envelope(&f, (0, 0), (6, 6), mode).unwrap();
                assert_eq!(env.ymin_at(0), 0);
                assert_eq!(env.ymax_at(6), 6);
                let mut prev = (0u32, 0u32);
                for (_, lo, hi) in env.columns() {
                    assert!(lo <= hi);
                    assert!(lo >= prev.0 && hi >= prev.1);
                    prev = (lo, hi);
                }
            }
        }
    }

    #[test]
    fn on_geodesic_set_matches_brute_force_union() {
        for trial in 0..300u64 {
            let f = WeightField::generate(4, 4, 0.5, mix2(0xCAFE, trial)).unwrap();
            for mode in [PathMode::LastPassage, PathMode::FirstPassage] {
                let fast: BTreeSet<_> = on_geodesic_vertices(&f, (0, 0), (4, 4), mode)
                    .unwrap()
                    .into_iter()
                    .collect();
                let slow = brute_force_geodesic_union(&f, (0, 0), (4, 4), mode).unwrap();
                assert_eq!(fast, slow, "trial {trial}");
            }
        }
    }

    #[test]
    fn sampled_paths_stay_inside_the_envelope() {
        for trial in 0..100u64 {
            let f = WeightField::generate(8, 8, 0.5, mix2(0xAB, trial)).unwrap();
            let env = geodesic_envelope(&f, (0, 0), (8, 8), PathMode::LastPassage).unwrap();
            for rule in [TieRule::PreferUp, TieRule::PreferRight, TieRule::Seeded(trial)] {
                let p =
                    sample_geodesic(&f, (0, 0), (8, 8), PathMode::LastPassage, rule).unwrap();
                for v in p.vertices() {
                    assert!(env.contains(*v));
                }
            }
        }
    }

    #[test]
    fn capacity_guard_trips() {
        let f = WeightField::generate(64, 64, 0.5, 1).unwrap();
        let err = geodesic_envelope_guarded(&f, (0, 0), (64, 64), PathMode::LastPassage, 63);
        assert!(matches!(err, Err(Error::Capacity { .. })));
    }
}
