//! CSV emission for shape estimates.
//!
//! Schema: `direction_kind,q_or_p_or_xy,n,reps,seed,mean,stderr,normalization`.
//! Floats print with Rust's shortest round-trip formatting, so rows parse
//! back losslessly.

use crate::error::{Error, Result};
use crate::shape::direction::Direction;
use crate::shape::estimate::{Normalization, ShapeEstimate};

pub const SHAPE_CSV_HEADER: &str =
    "direction_kind,q_or_p_or_xy,n,reps,seed,mean,stderr,normalization";

/// One row of the shape-estimate schema.
#[derive(Debug, Clone, PartialEq)]
pub struct ShapeCsvRow {
    pub direction: Direction,
    pub n: u32,
    pub reps: u32,
    pub seed: u64,
    pub mean: f64,
    pub stderr: f64,
    pub normalization: Normalization,
}

impl From<&ShapeEstimate> for ShapeCsvRow {
    fn from(e: &ShapeEstimate) -> Self {
        ShapeCsvRow {
            direction: e.direction,
            n: e.n,
            reps: e.reps,
            seed: e.seed,
            mean: e.mean,
            stderr: e.stderr,
            normalization: e.normalization,
        }
    }
}

impl ShapeCsvRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.direction.kind(),
            self.direction.value_label(),
            self.n,
            self.reps,
            self.seed,
            self.mean,
            self.stderr,
            self.normalization.label()
        )
    }

    pub fn parse_csv(line: &str) -> Result<Self> {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 8 {
            return Err(Error::Format(format!(
                "shape row needs 8 fields, got {}: {line:?}",
                fields.len()
            )));
        }
        let num = |i: usize| -> Result<f64> {
            fields[i]
                .parse()
                .map_err(|e| Error::Format(format!("field {i} ({:?}): {e}", fields[i])))
        };
        Ok(ShapeCsvRow {
            direction: Direction::parse(fields[0], fields[1])?,
            n: num(2)? as u32,
            reps: num(3)? as u32,
            seed: fields[4]
                .parse()
                .map_err(|e| Error::Format(format!("seed {:?}: {e}", fields[4])))?,
            mean: num(5)?,
            stderr: num(6)?,
            normalization: Normalization::parse_label(fields[7])?,
        })
    }
}
