//! Directions for normalized passage-time estimation.
//!
//! Three equivalent parametrizations are supported: the transverse
//! coordinate `q` in (-1,1), the diagonal slope `p > 0`, and a raw
//! positive direction `(x, y)`. Where both are defined they convert
//! exactly: the q-form of slope `p` is `(p-1)/(p+1)`, and the `(x, y)`
//! form of `q` is `(1-q, 1+q)`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Direction {
    /// Transverse coordinate: endpoint `(n(1-q), n(1+q))`, normalizer `n`.
    Q(f64),
    /// Diagonal slope: endpoint `(n, np)`, normalizer `n(1+p)/2`.
    P(f64),
    /// Raw direction: endpoint `(nx, ny)`, normalizer `n`.
    Xy(f64, f64),
}

impl Direction {
    pub fn q(q: f64) -> Result<Self> {
        if !q.is_finite() || q.abs() >= 1.0 {
            return Err(Error::InvalidArgument(format!(
                "q must lie in (-1,1), got {q}"
            )));
        }
        Ok(Direction::Q(q))
    }

    pub fn p(p: f64) -> Result<Self> {
        if !p.is_finite() || p <= 0.0 {
            return Err(Error::InvalidArgument(format!("p must be > 0, got {p}")));
        }
        Ok(Direction::P(p))
    }

    pub fn xy(x: f64, y: f64) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && x > 0.0 && y > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "direction components must be positive, got ({x},{y})"
            )));
        }
        Ok(Direction::Xy(x, y))
    }

    /// The equivalent `(x, y)` direction.
    pub fn as_xy(self) -> (f64, f64) {
        match self {
            Direction::Q(q) => (1.0 - q, 1.0 + q),
            Direction::P(p) => (1.0, p),
            Direction::Xy(x, y) => (x, y),
        }
    }

    /// The transverse coordinate of the slope form, `(p-1)/(p+1)`.
    pub fn as_q(self) -> f64 {
        match self {
            Direction::Q(q) => q,
            Direction::P(p) => (p - 1.0) / (p + 1.0),
            Direction::Xy(x, y) => (y - x) / (y + x),
        }
    }

    /// Lattice endpoint at scale `n` (nearest-integer rounding) and the
    /// normalizer dividing the passage time.
    pub fn endpoint(self, n: u32) -> Result<((u32, u32), f64)> {
        let (dx, dy) = self.as_xy();
        let ex = (n as f64 * dx).round();
        let ey = (n as f64 * dy).round();
        if ex < 1.0 || ey < 1.0 {
            return Err(Error::InvalidArgument(format!(
                "scale n={n} too small for direction ({dx},{dy}): rounded endpoint ({ex},{ey})"
            )));
        }
        let norm = match self {
            Direction::P(p) => n as f64 * (1.0 + p) / 2.0,
            _ => n as f64,
        };
        Ok(((ex as u32, ey as u32), norm))
    }

    /// Short CSV tag: `q`, `p`, or `xy`.
    pub fn kind(&self) -> &'static str {
        match self {
            Direction::Q(_) => "q",
            Direction::P(_) => "p",
            Direction::Xy(..) => "xy",
        }
    }

    /// CSV value field (xy packs both components with `:`).
    pub fn value_label(&self) -> String {
        match self {
            Direction::Q(q) => format!("{q}"),
            Direction::P(p) => format!("{p}"),
            Direction::Xy(x, y) => format!("{x}:{y}"),
        }
    }

    pub fn parse(kind: &str, value: &str) -> Result<Self> {
        let num = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| Error::Format(format!("bad direction value {s:?}: {e}")))
        };
        match kind {
            "q" => Direction::q(num(value)?),
            "p" => Direction::p(num(value)?),
            "xy" => {
                let (x, y) = value
                    .split_once(':')
                    .ok_or_else(|| Error::Format(format!("xy direction needs x:y, got {value:?}")))?;
                Direction::xy(num(x)?, num(y)?)
            }
            other => Err(Error::Format(format!("unknown direction kind {other:?}"))),
        }
    }
}
