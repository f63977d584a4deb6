//! CSV emission for the decomposition lab.

use crate::decomp::event_a::{EventAReport, SkewPolicy};
use crate::error::{Error, Result};

pub const EVENT_A_PROB_CSV_HEADER: &str = "n,k,eta,p1,p2,s,seed,reps,p_hat,stderr";

/// One probability-estimate row.
#[derive(Debug, Clone, PartialEq)]
pub struct EventAProbRow {
    pub n: u32,
    pub k: u32,
    pub policy: SkewPolicy,
    pub s: f64,
    pub seed: u64,
    pub reps: u32,
    pub p_hat: f64,
    pub stderr: f64,
}

impl EventAProbRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.policy.eta,
            self.policy.p1,
            self.policy.p2,
            self.s,
            self.seed,
            self.reps,
            self.p_hat,
            self.stderr
        )
    }

    pub fn parse_csv(line: &str) -> Result<Self> {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 10 {
            return Err(Error::Format(format!(
                "event probability row needs 10 fields, got {}",
                f.len()
            )));
        }
        let num = |i: usize| -> Result<f64> {
            f[i].parse()
                .map_err(|e| Error::Format(format!("field {i} ({:?}): {e}", f[i])))
        };
        Ok(EventAProbRow {
            n: num(0)? as u32,
            k: num(1)? as u32,
            policy: SkewPolicy::new(num(2)?, num(3)?, num(4)?)?,
            s: num(5)?,
            seed: f[6]
                .parse()
                .map_err(|e| Error::Format(format!("seed {:?}: {e}", f[6])))?,
            reps: num(7)? as u32,
            p_hat: num(8)?,
            stderr: num(9)?,
        })
    }
}

pub const EVENT_A_FIELD_CSV_HEADER: &str =
    "n,k,eta,p1,p2,s,field_seed,holds,max_skew_count,threshold,passage_time";

/// One per-field report row (behind the dump-fields flag).
#[derive(Debug, Clone, PartialEq)]
pub struct EventAFieldRow {
    pub n: u32,
    pub k: u32,
    pub policy: SkewPolicy,
    pub s: f64,
    pub field_seed: u64,
    pub report: EventAReport,
}

impl EventAFieldRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.k,
            self.policy.eta,
            self.policy.p1,
            self.policy.p2,
            self.s,
            self.field_seed,
            self.report.holds,
            self.report.max_skew_count,
            self.report.threshold,
            self.report.passage_time
        )
    }

    pub fn parse_csv(line: &str) -> Result<Self> {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 11 {
            return Err(Error::Format(format!(
                "event field row needs 11 fields, got {}",
                f.len()
            )));
        }
        let num = |i: usize| -> Result<f64> {
            f[i].parse()
                .map_err(|e| Error::Format(format!("field {i} ({:?}): {e}", f[i])))
        };
        Ok(EventAFieldRow {
            n: num(0)? as u32,
            k: num(1)? as u32,
            policy: SkewPolicy::new(num(2)?, num(3)?, num(4)?)?,
            s: num(5)?,
            field_seed: f[6]
                .parse()
                .map_err(|e| Error::Format(format!("seed {:?}: {e}", f[6])))?,
            report: EventAReport {
                holds: f[7]
                    .parse()
                    .map_err(|e| Error::Format(format!("holds {:?}: {e}", f[7])))?,
                max_skew_count: num(8)? as u32,
                threshold: num(9)? as u32,
                passage_time: num(10)? as u32,
            },
        })
    }
}
