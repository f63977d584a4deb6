//! The corner-to-corner partition identity.
//!
//! On a `kn x kn` grid, the passage time equals the optimum over all
//! monotone vertex sequences `V_0 = (0,0), ..., V_k = (kn,kn)` with
//! `l1(V_i, V_{i+1}) = 2n` of the summed segment passage times: any
//! geodesic splits into k segments of l1-length 2n, and superadditivity
//! gives the reverse inequality. Checked here by full enumeration, so the
//! grid side is guarded.

use crate::error::{Error, Result};
use crate::lattice::{passage_time, PathMode, Vertex, WeightField};

/// Side guard: partition enumeration is exponential in `k`.
pub const PARTITION_MAX_SIDE: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionCheck {
    /// Full-grid passage time.
    pub lhs: u32,
    /// Optimum over enumerated partitions of the summed segment times.
    pub rhs: u32,
    pub equal: bool,
}

/// Enumerate every partition of the `kn x kn` grid into `k` monotone
/// segments of l1-length `2n` and compare against the full passage time.
pub fn partition_identity_check(
    field: &WeightField,
    n: u32,
    k: u32,
    mode: PathMode,
) -> Result<PartitionCheck> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument("need n >= 1 and k >= 1".into()));
    }
    let side = k
        .checked_mul(n)
        .ok_or_else(|| Error::InvalidArgument("k * n overflows".into()))?;
    if field.nx() != side || field.ny() != side {
        return Err(Error::InvalidArgument(format!(
            "partition check is for a {side}x{side} grid, field is {}x{}",
            field.nx(),
            field.ny()
        )));
    }
    if side > PARTITION_MAX_SIDE {
        return Err(Error::OracleScale {
            what: "partition enumeration",
            size: side as u64,
            limit: PARTITION_MAX_SIDE as u64,
        });
    }

    let end = Vertex::new(side, side);
    let lhs = passage_time(field, (0, 0), end, mode)?;

    let seg = 2 * n;
    let mut best: Option<u32> = None;
    // Depth-first over segment endpoints; each step advances l1 by `seg`.
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        field: &WeightField,
        mode: PathMode,
        end: Vertex,
        seg: u32,
        cur: Vertex,
        left: u32,
        acc: u32,
        best: &mut Option<u32>,
    ) {
        if left == 0 {
            debug_assert_eq!(cur, end);
            *best = Some(match *best {
                None => acc,
                Some(b) => mode.better(b, acc),
            });
            return;
        }
        for dx in 0..=seg {
            let dy = seg - dx;
            let nxt = Vertex::new(cur.x + dx, cur.y + dy);
            if nxt.x > end.x || nxt.y > end.y {
                continue;
            }
            let t = passage_time(field, cur, nxt, mode).expect("in-grid segment");
            recurse(field, mode, end, seg, nxt, left - 1, acc + t, best);
        }
    }
    recurse(
        field,
        mode,
        end,
        seg,
        Vertex::new(0, 0),
        k,
        0,
        &mut best,
    );

    let rhs = best.expect("the straight split is always feasible");
    Ok(PartitionCheck {
        lhs,
        rhs,
        equal: lhs == rhs,
    })
}
