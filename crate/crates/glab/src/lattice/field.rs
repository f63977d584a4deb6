//! Bernoulli weight fields on a rectangular vertex grid.
//!
//! An `nx x ny` grid has `(nx+1) x (ny+1)` vertices `(x, y)` with
//! `0 <= x <= nx`, `0 <= y <= ny`. Each vertex carries a 0/1 weight drawn
//! Bernoulli(`s`), derived in counter mode from `(seed, x, y)`.

use std::io::{Read, Write};

use crate::error::{Error, Result};
use crate::rng::{bernoulli, mix3};

/// Largest supported grid side (exclusive of the +1 vertex row).
pub const MAX_SIDE: u32 = 1 << 16;

/// A lattice point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub x: u32,
    pub y: u32,
}

impl Vertex {
    pub const fn new(x: u32, y: u32) -> Self {
        Self { x, y }
    }

    /// Coordinatewise `<=`.
    pub fn dominated_by(self, other: Vertex) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// l1 distance to another vertex (must be comparable).
    pub fn l1_to(self, other: Vertex) -> u32 {
        other.x.abs_diff(self.x) + other.y.abs_diff(self.y)
    }

    pub fn transpose(self) -> Vertex {
        Vertex::new(self.y, self.x)
    }
}

impl From<(u32, u32)> for Vertex {
    fn from((x, y): (u32, u32)) -> Self {
        Vertex::new(x, y)
    }
}

/// Random 0/1 vertex weights on an `(nx+1) x (ny+1)` grid, plus the seed
/// that generated them.
///
/// Fields built by [`WeightField::generate`] regenerate bit-for-bit from
/// `(nx, ny, s, seed)`. Fields built by fixtures or by
/// [`resample`](crate::lattice::resample_vertex_set) keep the original seed
/// as provenance only; the packed weight array is always authoritative.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightField {
    nx: u32,
    ny: u32,
    s: f64,
    seed: u64,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl WeightField {
    /// Draw i.i.d. Bernoulli(`s`) weights for every vertex.
    pub fn generate(nx: u32, ny: u32, s: f64, seed: u64) -> Result<Self> {
        check_dims(nx, ny)?;
        check_s(s)?;
        let mut field = Self::zeroed(nx, ny, s, seed);
        for y in 0..=ny {
            for x in 0..=nx {
                if bernoulli(mix3(seed, x as u64, y as u64), s) {
                    field.set_bit(x, y);
                }
            }
        }
        Ok(field)
    }

    /// Fixture constructor: every weight set to `weight` (0 or 1).
    ///
    /// The recorded `s` is a label only (0.5); constant fields are for tests
    /// and worked examples, not statistics.
    pub fn constant(nx: u32, ny: u32, weight: u8) -> Result<Self> {
        Self::from_fn(nx, ny, |_, _| weight)
    }

    /// Fixture constructor from an explicit weight function.
    pub fn from_fn(nx: u32, ny: u32, mut f: impl FnMut(u32, u32) -> u8) -> Result<Self> {
        check_dims(nx, ny)?;
        let mut field = Self::zeroed(nx, ny, 0.5, 0);
        for y in 0..=ny {
            for x in 0..=nx {
                match f(x, y) {
                    0 => {}
                    1 => field.set_bit(x, y),
                    w => {
                        return Err(Error::InvalidArgument(format!(
                            "weight at ({x},{y}) must be 0 or 1, got {w}"
                        )))
                    }
                }
            }
        }
        Ok(field)
    }

    fn zeroed(nx: u32, ny: u32, s: f64, seed: u64) -> Self {
        let words_per_row = (nx as usize + 1).div_ceil(64);
        Self {
            nx,
            ny,
            s,
            seed,
            words_per_row,
            bits: vec![0u64; words_per_row * (ny as usize + 1)],
        }
    }

    pub fn nx(&self) -> u32 {
        self.nx
    }

    pub fn ny(&self) -> u32 {
        self.ny
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of vertices, `(nx+1) * (ny+1)`.
    pub fn vertex_count(&self) -> u64 {
        (self.nx as u64 + 1) * (self.ny as u64 + 1)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.x <= self.nx && v.y <= self.ny
    }

    /// Weight at `(x, y)`. Panics if out of grid.
    #[inline]
    pub fn weight(&self, x: u32, y: u32) -> u32 {
        assert!(
            x <= self.nx && y <= self.ny,
            "vertex ({x},{y}) outside {}x{} grid",
            self.nx,
            self.ny
        );
        let word = y as usize * self.words_per_row + (x as usize >> 6);
        ((self.bits[word] >> (x & 63)) & 1) as u32
    }

    #[inline]
    fn set_bit(&mut self, x: u32, y: u32) {
        let word = y as usize * self.words_per_row + (x as usize >> 6);
        self.bits[word] |= 1u64 << (x & 63);
    }

    #[inline]
    fn clear_bit(&mut self, x: u32, y: u32) {
        let word = y as usize * self.words_per_row + (x as usize >> 6);
        self.bits[word] &= !(1u64 << (x & 63));
    }

    /// Overwrite one weight (fixture/resampling support).
    pub(crate) fn put_weight(&mut self, x: u32, y: u32, w: bool) {
        assert!(x <= self.nx && y <= self.ny);
        if w {
            self.set_bit(x, y)
        } else {
            self.clear_bit(x, y)
        }
    }

    /// Sample mean of all weights.
    pub fn mean_weight(&self) -> f64 {
        let mut ones = 0u64;
        for y in 0..=self.ny {
            let row = y as usize * self.words_per_row;
            for w in 0..self.words_per_row {
                let mut word = self.bits[row + w];
                // Mask padding bits past nx in the last word of the row.
                if w == self.words_per_row - 1 {
                    let used = (self.nx as usize + 1) - 64 * w;
                    if used < 64 {
                        word &= (1u64 << used) - 1;
                    }
                }
                ones += word.count_ones() as u64;
            }
        }
        ones as f64 / self.vertex_count() as f64
    }

    /// Transposed field: `w'(x, y) = w(y, x)` with swapped dimensions.
    pub fn transpose(&self) -> WeightField {
        let mut out = Self::zeroed(self.ny, self.nx, self.s, self.seed);
        for y in 0..=self.ny {
            for x in 0..=self.nx {
                if self.weight(x, y) == 1 {
                    out.set_bit(y, x);
                }
            }
        }
        out
    }

    /// Write the flat binary layout: magic `GLAB1`, then little-endian
    /// `nx: u32`, `ny: u32`, `s: f64`, `seed: u64`, then row-major packed
    /// bits (rows `y = 0..=ny`, each padded to whole bytes, LSB first).
    pub fn write_binary(&self, mut w: impl Write) -> Result<()> {
        w.write_all(b"GLAB1")?;
        w.write_all(&self.nx.to_le_bytes())?;
        w.write_all(&self.ny.to_le_bytes())?;
        w.write_all(&self.s.to_le_bytes())?;
        w.write_all(&self.seed.to_le_bytes())?;
        let row_bytes = (self.nx as usize + 1).div_ceil(8);
        let mut buf = vec![0u8; row_bytes];
        for y in 0..=self.ny {
            buf.fill(0);
            for x in 0..=self.nx {
                if self.weight(x, y) == 1 {
                    buf[x as usize >> 3] |= 1 << (x & 7);
                }
            }
            w.write_all(&buf)?;
        }
        Ok(())
    }

    /// Read the layout written by [`write_binary`](Self::write_binary).
    pub fn read_binary(mut r: impl Read) -> Result<Self> {
        let mut magic = [0u8; 5];
        r.read_exact(&mut magic)?;
        if &magic != b"GLAB1" {
            return Err(Error::Format(format!("bad magic {magic:?}, want GLAB1")));
        }
        let mut b4 = [0u8; 4];
        let mut b8 = [0u8; 8];
        r.read_exact(&mut b4)?;
        let nx = u32::from_le_bytes(b4);
        r.read_exact(&mut b4)?;
        let ny = u32::from_le_bytes(b4);
        r.read_exact(&mut b8)?;
        let s = f64::from_le_bytes(b8);
        r.read_exact(&mut b8)?;
        let seed = u64::from_le_bytes(b8);
        check_dims(nx, ny).map_err(|e| Error::Format(e.to_string()))?;
        if !(s > 0.0 && s < 1.0) {
            return Err(Error::Format(format!("s out of (0,1): {s}")));
        }
        let row_bytes = (nx as usize + 1).div_ceil(8);
        let mut field = Self::zeroed(nx, ny, s, seed);
        let mut buf = vec![0u8; row_bytes];
        for y in 0..=ny {
            r.read_exact(&mut buf)?;
            for x in 0..=nx {
                if (buf[x as usize >> 3] >> (x & 7)) & 1 == 1 {
                    field.set_bit(x, y);
                }
            }
        }
        Ok(field)
    }
}

fn check_dims(nx: u32, ny: u32) -> Result<()> {
    if nx == 0 || ny == 0 {
        return Err(Error::InvalidArgument(format!(
            "grid must have positive area, got {nx}x{ny}"
        )));
    }
    if nx > MAX_SIDE || ny > MAX_SIDE {
        return Err(Error::InvalidArgument(format!(
            "grid side exceeds {MAX_SIDE}: {nx}x{ny}"
        )));
    }
    Ok(())
}

fn check_s(s: f64) -> Result<()> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::InvalidArgument(format!(
            "Bernoulli parameter must lie in (0,1), got {s}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(WeightField::generate(2, 2, 1.0, 0).is_err());
        assert!(WeightField::generate(2, 2, 0.0, 0).is_err());
        assert!(WeightField::generate(0, 4, 0.5, 0).is_err());
    }

    #[test]
    fn regeneration_is_bit_identical() {
        let a = WeightField::generate(4, 4, 0.5, 42).unwrap();
        let b = WeightField::generate(4, 4, 0.5, 42).unwrap();
        assert_eq!(a, b);
        let c = WeightField::generate(4, 4, 0.5, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn sample_mean_tracks_s() {
        // Tolerance from the contract: 0.3 +/- 0.01 on a 1000x1000 grid.
        let f = WeightField::generate(1000, 1000, 0.3, 7).unwrap();
        assert!((f.mean_weight() - 0.3).abs() < 0.01);
    }

    #[test]
    fn fill_order_does_not_matter() {
        // The same (seed, x, y) hash regardless of generation order.
        let f = WeightField::generate(5, 3, 0.4, 9).unwrap();
        let g = WeightField::from_fn(5, 3, |x, y| {
            bernoulli(mix3(9, x as u64, y as u64), 0.4) as u8
        })
        .unwrap();
        for y in 0..=3 {
            for x in 0..=5 {
                assert_eq!(f.weight(x, y), g.weight(x, y));
            }
        }
    }

    #[test]
    fn transpose_swaps_coordinates() {
        let f = WeightField::generate(5, 3, 0.4, 1).unwrap();
        let t = f.transpose();
        assert_eq!(t.nx(), 3);
        assert_eq!(t.ny(), 5);
        for y in 0..=3 {
            for x in 0..=5 {
                assert_eq!(f.weight(x, y), t.weight(y, x));
            }
        }
    }

    #[test]
    fn binary_round_trip() {
        let f = WeightField::generate(13, 7, 0.3, 99).unwrap();
        let mut buf = Vec::new();
        f.write_binary(&mut buf).unwrap();
        let g = WeightField::read_binary(buf.as_slice()).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn binary_rejects_bad_magic() {
        let err = WeightField::read_binary(&b"NOPE! more bytes"[..]).unwrap_err();
        assert!(matches!(err, Error::Format(_)));
    }
}
