//! Passage-time dynamic programs.
//!
//! The passage time between corners `v1 <= v2` is the optimum over directed
//! (up-right) paths of the total vertex weight along the path, with the
//! weight of `v1` excluded and the weight of `v2` included. Last passage
//! maximizes, first passage minimizes; the two share every code path.

use crate::error::{Error, Result};
use crate::lattice::field::{Vertex, WeightField};

/// Whether the optimum is a maximum (last passage) or minimum (first
/// passage) over directed paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathMode {
    LastPassage,
    FirstPassage,
}

impl PathMode {
    /// The better of two path values under this mode.
    #[inline]
    pub fn better(self, a: u32, b: u32) -> u32 {
        match self {
            PathMode::LastPassage => a.max(b),
            PathMode::FirstPassage => a.min(b),
        }
    }

    /// Column label used in CSV output (`dlpp` / `dfpp`).
    pub fn label(self) -> &'static str {
        match self {
            PathMode::LastPassage => "dlpp",
            PathMode::FirstPassage => "dfpp",
        }
    }

    pub fn parse_label(s: &str) -> Result<Self> {
        match s {
            "dlpp" => Ok(PathMode::LastPassage),
            "dfpp" => Ok(PathMode::FirstPassage),
            other => Err(Error::Format(format!("unknown mode label {other:?}"))),
        }
    }
}

pub(crate) fn check_span(field: &WeightField, v1: Vertex, v2: Vertex) -> Result<()> {
    if !field.contains(v1) || !field.contains(v2) {
        return Err(Error::InvalidArgument(format!(
            "corners ({},{}) -> ({},{}) not inside {}x{} grid",
            v1.x,
            v1.y,
            v2.x,
            v2.y,
            field.nx(),
            field.ny()
        )));
    }
    if !v1.dominated_by(v2) {
        return Err(Error::InvalidArgument(format!(
            "start ({},{}) must be coordinatewise <= end ({},{})",
            v1.x, v1.y, v2.x, v2.y
        )));
    }
    Ok(())
}

/// Passage time from `v1` to `v2` by a row-rolling dynamic program.
///
/// O(area) time, O(row) memory. The returned value lies in
/// `[0, l1(v1, v2)]`.
pub fn passage_time(
    field: &WeightField,
    v1: impl Into<Vertex>,
    v2: impl Into<Vertex>,
    mode: PathMode,
) -> Result<u32> {
    let (v1, v2) = (v1.into(), v2.into());
    check_span(field, v1, v2)?;
    let width = (v2.x - v1.x) as usize;
    let mut row = vec![0u32; width + 1];

    // Bottom edge: only rightward steps reach it.
    for i in 1..=width {
        row[i] = row[i - 1] + field.weight(v1.x + i as u32, v1.y);
    }
    for y in (v1.y + 1)..=v2.y {
        row[0] += field.weight(v1.x, y);
        for i in 1..=width {
            let w = field.weight(v1.x + i as u32, y);
            row[i] = w + mode.better(row[i], row[i - 1]);
        }
    }
    Ok(row[width])
}

/// Full forward table: `F[j][i]` is the passage time from `v1` to
/// `(v1.x + i, v1.y + j)` (weight of `v1` excluded, endpoint included).
pub(crate) fn forward_table(
    field: &WeightField,
    v1: Vertex,
    v2: Vertex,
    mode: PathMode,
) -> Vec<Vec<u32>> {
    let w = (v2.x - v1.x) as usize;
    let h = (v2.y - v1.y) as usize;
    let mut f = vec![vec![0u32; w + 1]; h + 1];
    for i in 1..=w {
        f[0][i] = f[0][i - 1] + field.weight(v1.x + i as u32, v1.y);
    }
    for j in 1..=h {
        let y = v1.y + j as u32;
        f[j][0] = f[j - 1][0] + field.weight(v1.x, y);
        for i in 1..=w {
            let wt = field.weight(v1.x + i as u32, y);
            f[j][i] = wt + mode.better(f[j - 1][i], f[j][i - 1]);
        }
    }
    f
}

/// Full backward table: `B[j][i]` is the passage time from
/// `(v1.x + i, v1.y + j)` to `v2` (start weight excluded, `v2` included).
pub(crate) fn backward_table(
    field: &WeightField,
    v1: Vertex,
    v2: Vertex,
    mode: PathMode,
) -> Vec<Vec<u32>> {
    let w = (v2.x - v1.x) as usize;
    let h = (v2.y - v1.y) as usize;
    let mut b = vec![vec![0u32; w + 1]; h + 1];
    for i in (0..w).rev() {
        b[h][i] = b[h][i + 1] + field.weight(v1.x + i as u32 + 1, v2.y);
    }
    for j in (0..h).rev() {
        let y = v1.y + j as u32;
        b[j][w] = b[j + 1][w] + field.weight(v2.x, y + 1);
        for i in (0..w).rev() {
            let right = field.weight(v1.x + i as u32 + 1, y) + b[j][i + 1];
            let up = field.weight(v1.x + i as u32, y + 1) + b[j + 1][i];
            b[j][i] = mode.better(right, up);
        }
    }
    b
}
