//! Exact skew checking over *all* optimal decompositions.
//!
//! A decomposition is optimal when its block passage times sum to the full
//! passage time. The event of interest holds when every optimal
//! decomposition keeps its count of skewed blocks (height/width ratio
//! outside `[p1, p2]`) within `eta * m`. Sampling geodesics under-counts
//! optimal decompositions; instead an exact column DP carries, per cut
//! height, the best achievable prefix value and — lexicographically — the
//! adversarial maximum skew count among value-optimal prefixes.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{passage_time, PathMode, WeightField};
use crate::rng::mix2;
use crate::stats::mean_stderr;

/// Grid-side guard for the exact check's `O(m k n^2)` strip DPs.
pub const EVENT_A_MAX_N: u32 = 1024;

/// Side guard for the exhaustive oracle (all `C(n+m-1, m-1)` cut vectors).
pub const EXHAUSTIVE_MAX_N: u32 = 10;

/// Skew policy: a block of width `k` and height `h` is close-to-square
/// when `k*p1 <= h <= k*p2`; a decomposition passes when at most
/// `eta * m` of its `m` blocks are skewed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SkewPolicy {
    pub eta: f64,
    pub p1: f64,
    pub p2: f64,
}

impl SkewPolicy {
    pub fn new(eta: f64, p1: f64, p2: f64) -> Result<Self> {
        if !(eta > 0.0 && eta < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "eta must lie in (0,1), got {eta}"
            )));
        }
        if !(p1 > 0.0 && p1 < 1.0 && p2 > 1.0 && p2.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "need 0 < p1 < 1 < p2, got p1={p1}, p2={p2}"
            )));
        }
        Ok(Self { eta, p1, p2 })
    }

    /// Closed-interval test `k*p1 <= h <= k*p2`, negated.
    #[inline]
    pub fn block_is_skewed(&self, k: u32, height: u32) -> bool {
        let h = height as f64;
        let k = k as f64;
        !(k * self.p1 <= h && h <= k * self.p2)
    }

    /// Largest integer count `c` with `c <= eta * m` under f64 comparison.
    /// This is the single place defining the boundary semantics: a
    /// decomposition with `count` skewed blocks passes iff
    /// `count as f64 <= eta * m as f64`.
    pub fn max_allowed_skew(&self, m: u32) -> u32 {
        let lim = self.eta * m as f64;
        let mut c = (lim.floor() as u32).min(m);
        while c > 0 && (c as f64) > lim {
            c -= 1;
        }
        while c < m && ((c + 1) as f64) <= lim {
            c += 1;
        }
        c
    }
}

/// Outcome of the exact check on one field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EventAReport {
    /// True iff every optimal decomposition passes the skew policy.
    pub holds: bool,
    /// Adversarial maximum of the skew count over optimal decompositions.
    pub max_skew_count: u32,
    /// Largest skew count that still passes (`max_allowed_skew`).
    pub threshold: u32,
    /// Full-grid passage time (every optimal decomposition attains it).
    pub passage_time: u32,
}

fn check_event_inputs(field: &WeightField, k: u32) -> Result<(u32, u32)> {
    let n = field.nx();
    if field.ny() != n {
        return Err(Error::InvalidArgument(format!(
            "event check needs a square grid, got {}x{}",
            field.nx(),
            field.ny()
        )));
    }
    if k == 0 || !n.is_multiple_of(k) {
        return Err(Error::InvalidArgument(format!(
            "block width {k} must divide n = {n}"
        )));
    }
    Ok((n, n / k))
}

/// Passage times from `(x0, y0)` to `(x0 + k, y)` for every `y >= y0`,
/// by one strip DP (index `j` holds the block of height `j`).
fn block_times(field: &WeightField, x0: u32, y0: u32, k: u32, mode: PathMode) -> Vec<u32> {
    let ny = field.ny();
    let width = k as usize;
    let mut row = vec![0u32; width + 1];
    for i in 1..=width {
        row[i] = row[i - 1] + field.weight(x0 + i as u32, y0);
    }
    let mut out = Vec::with_capacity((ny - y0) as usize + 1);
    out.push(row[width]);
    for y in (y0 + 1)..=ny {
        row[0] += field.weight(x0, y);
        for i in 1..=width {
            let w = field.weight(x0 + i as u32, y);
            row[i] = w + mode.better(row[i], row[i - 1]);
        }
        out.push(row[width]);
    }
    out
}

/// Exact decision of the skew event by the lexicographic (value,
/// max-skew) column DP.
///
/// State `(i, y)`: over all prefixes `r_0 = 0 <= ... <= r_i = y`, the best
/// achievable sum of block passage times, and among value-best prefixes
/// the maximum skew count. Maximization (not minimization) of the skew is
/// deliberate: the event fails if *any* optimal decomposition is too
/// skewed, so the adversarial maximum is the statistic that decides it.
pub fn check_event_a(
    field: &WeightField,
    k: u32,
    policy: SkewPolicy,
    mode: PathMode,
) -> Result<EventAReport> {
    let (n, m) = check_event_inputs(field, k)?;
    if n > EVENT_A_MAX_N {
        return Err(Error::Capacity {
            what: "event skew DP",
            needed: n as u64,
            limit: EVENT_A_MAX_N as u64,
        });
    }

    let size = n as usize + 1;
    let mut cur: Vec<Option<(u32, u32)>> = vec![None; size];
    cur[0] = Some((0, 0));
    for i in 1..=m {
        let x0 = (i - 1) * k;
        let mut next: Vec<Option<(u32, u32)>> = vec![None; size];
        for yp in 0..=n {
            let Some((pv, ps)) = cur[yp as usize] else {
                continue;
            };
            let bt = block_times(field, x0, yp, k, mode);
            for (j, &b) in bt.iter().enumerate() {
                let y = yp as usize + j;
                let v = pv + b;
                let s = ps + policy.block_is_skewed(k, j as u32) as u32;
                next[y] = Some(match next[y] {
                    None => (v, s),
                    Some((bv, bs)) => {
                        if v == bv {
                            (bv, bs.max(s))
                        } else if mode.better(v, bv) == v {
                            (v, s)
                        } else {
                            (bv, bs)
                        }
                    }
                });
            }
        }
        cur = next;
    }

    let (best, max_skew) = cur[n as usize].expect("cut vector (0..n) always feasible");
    debug_assert_eq!(best, passage_time(field, (0, 0), (n, n), mode)?);
    let threshold = policy.max_allowed_skew(m);
    Ok(EventAReport {
        holds: (max_skew as f64) <= policy.eta * m as f64,
        max_skew_count: max_skew,
        threshold,
        passage_time: best,
    })
}

/// Oracle: enumerate every decomposition, find the optima by definition,
/// and report the same statistics as [`check_event_a`].
pub fn exhaustive_event_a(
    field: &WeightField,
    k: u32,
    policy: SkewPolicy,
    mode: PathMode,
) -> Result<EventAReport> {
    let (n, m) = check_event_inputs(field, k)?;
    if n > EXHAUSTIVE_MAX_N {
        return Err(Error::OracleScale {
            what: "exhaustive decomposition enumeration",
            size: n as u64,
            limit: EXHAUSTIVE_MAX_N as u64,
        });
    }

    // Precompute all block passage times: bt[i][y'][h].
    let bt: Vec<Vec<Vec<u32>>> = (1..=m)
        .map(|i| {
            (0..=n)
                .map(|yp| block_times(field, (i - 1) * k, yp, k, mode))
                .collect()
        })
        .collect();

    let mut best: Option<u32> = None;
    let mut max_skew_at_best = 0u32;
    let mut cuts = vec![0u32; m as usize + 1];
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        bt: &[Vec<Vec<u32>>],
        policy: &SkewPolicy,
        mode: PathMode,
        k: u32,
        n: u32,
        i: usize,
        cuts: &mut Vec<u32>,
        acc_value: u32,
        acc_skew: u32,
        best: &mut Option<u32>,
        max_skew_at_best: &mut u32,
    ) {
        let m = cuts.len() - 1;
        if i == m {
            let h = n - cuts[i - 1];
            let v = acc_value + bt[i - 1][cuts[i - 1] as usize][h as usize];
            let s = acc_skew + policy.block_is_skewed(k, h) as u32;
            match *best {
                None => {
                    *best = Some(v);
                    *max_skew_at_best = s;
                }
                Some(bv) => {
                    if v == bv {
                        *max_skew_at_best = (*max_skew_at_best).max(s);
                    } else if mode.better(v, bv) == v {
                        *best = Some(v);
                        *max_skew_at_best = s;
                    }
                }
            }
            return;
        }
        for y in cuts[i - 1]..=n {
            cuts[i] = y;
            let h = y - cuts[i - 1];
            let v = acc_value + bt[i - 1][cuts[i - 1] as usize][h as usize];
            let s = acc_skew + policy.block_is_skewed(k, h) as u32;
            recurse(
                bt,
                policy,
                mode,
                k,
                n,
                i + 1,
                cuts,
                v,
                s,
                best,
                max_skew_at_best,
            );
        }
    }
    if m == 1 {
        let h = n;
        let v = bt[0][0][h as usize];
        best = Some(v);
        max_skew_at_best = policy.block_is_skewed(k, h) as u32;
    } else {
        recurse(
            &bt,
            &policy,
            mode,
            k,
            n,
            1,
            &mut cuts,
            0,
            0,
            &mut best,
            &mut max_skew_at_best,
        );
    }

    let best = best.expect("at least one decomposition");
    debug_assert_eq!(best, passage_time(field, (0, 0), (n, n), mode)?);
    Ok(EventAReport {
        holds: (max_skew_at_best as f64) <= policy.eta * m as f64,
        max_skew_count: max_skew_at_best,
        threshold: policy.max_allowed_skew(m),
        passage_time: best,
    })
}

/// Monte Carlo estimate of the probability that the skew event holds.
pub fn estimate_event_a_prob(
    n: u32,
    k: u32,
    s: f64,
    policy: SkewPolicy,
    mode: PathMode,
    reps: u32,
    seed: u64,
) -> Result<(f64, f64)> {
    let (est, _) = estimate_event_a_prob_with_reports(n, k, s, policy, mode, reps, seed)?;
    Ok(est)
}

/// As [`estimate_event_a_prob`], also returning the per-field reports in
/// replication order.
pub fn estimate_event_a_prob_with_reports(
    n: u32,
    k: u32,
    s: f64,
    policy: SkewPolicy,
    mode: PathMode,
    reps: u32,
    seed: u64,
) -> Result<((f64, f64), Vec<EventAReport>)> {
    if reps == 0 {
        return Err(Error::InvalidArgument("need at least one replication".into()));
    }
    let reports: Vec<EventAReport> = (0..reps)
        .into_par_iter()
        .map(|rep| {
            let field = WeightField::generate(n, n, s, mix2(seed, rep as u64))?;
            check_event_a(&field, k, policy, mode)
        })
        .collect::<Result<_>>()?;
    let indicators: Vec<f64> = reports.iter().map(|r| r.holds as u32 as f64).collect();
    let (p_hat, stderr) = mean_stderr(&indicators);
    Ok(((p_hat, stderr), reports))
}
