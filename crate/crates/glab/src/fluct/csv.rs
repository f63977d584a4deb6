//! CSV emission for deviation profiles (shared by the passage and LCS
//! labs) and containment estimates.
//!
//! Profile schema: `n,s,mode,reps,quantile,value,ci_lo,ci_hi,alphabet`.
//! `s` is empty for LCS rows; `alphabet` is empty for passage rows.

use crate::error::{Error, Result};
use crate::fluct::profile::{DeviationProfile, ProfilePoint};
use crate::lattice::PathMode;

pub const PROFILE_CSV_HEADER: &str = "n,s,mode,reps,quantile,value,ci_lo,ci_hi,alphabet";

/// One deviation-profile row.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileCsvRow {
    pub n: u32,
    pub s: Option<f64>,
    pub mode: String,
    pub reps: u32,
    pub quantile: f64,
    pub value: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
    pub alphabet: Option<String>,
}

impl ProfileCsvRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.n,
            self.s.map(|s| s.to_string()).unwrap_or_default(),
            self.mode,
            self.reps,
            self.quantile,
            self.value,
            self.ci_lo,
            self.ci_hi,
            self.alphabet.clone().unwrap_or_default()
        )
    }

    pub fn parse_csv(line: &str) -> Result<Self> {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 9 {
            return Err(Error::Format(format!(
                "profile row needs 9 fields, got {}: {line:?}",
                f.len()
            )));
        }
        let num = |i: usize| -> Result<f64> {
            f[i].parse()
                .map_err(|e| Error::Format(format!("field {i} ({:?}): {e}", f[i])))
        };
        let mode = f[2].to_string();
        match mode.as_str() {
            "lcs" => {}
            other => {
                PathMode::parse_label(other)?;
            }
        }
        Ok(ProfileCsvRow {
            n: num(0)? as u32,
            s: if f[1].is_empty() { None } else { Some(num(1)?) },
            mode,
            reps: num(3)? as u32,
            quantile: num(4)?,
            value: num(5)?,
            ci_lo: num(6)?,
            ci_hi: num(7)?,
            alphabet: if f[8].is_empty() {
                None
            } else {
                Some(f[8].to_string())
            },
        })
    }

    pub fn from_profile(profile: &DeviationProfile) -> Vec<ProfileCsvRow> {
        profile
            .points
            .iter()
            .map(|p: &ProfilePoint| ProfileCsvRow {
                n: p.n,
                s: profile.s,
                mode: profile.kind.label().to_string(),
                reps: profile.reps,
                quantile: p.quantile,
                value: p.value,
                ci_lo: p.ci_lo,
                ci_hi: p.ci_hi,
                alphabet: profile.alphabet.clone(),
            })
            .collect()
    }
}

/// Containment schema: `n,s,mode,width,reps,p_hat,stderr`.
pub const CONTAINMENT_CSV_HEADER: &str = "n,s,mode,width,reps,p_hat,stderr";

#[derive(Debug, Clone, PartialEq)]
pub struct ContainmentCsvRow {
    pub n: u32,
    pub s: f64,
    pub mode: PathMode,
    pub width: u32,
    pub reps: u32,
    pub p_hat: f64,
    pub stderr: f64,
}

impl ContainmentCsvRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.s,
            self.mode.label(),
            self.width,
            self.reps,
            self.p_hat,
            self.stderr
        )
    }

    pub fn parse_csv(line: &str) -> Result<Self> {
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 7 {
            return Err(Error::Format(format!(
                "containment row needs 7 fields, got {}",
                f.len()
            )));
        }
        let num = |i: usize| -> Result<f64> {
            f[i].parse()
                .map_err(|e| Error::Format(format!("field {i} ({:?}): {e}", f[i])))
        };
        Ok(ContainmentCsvRow {
            n: num(0)? as u32,
            s: num(1)?,
            mode: PathMode::parse_label(f[2])?,
            width: num(3)? as u32,
            reps: num(4)? as u32,
            p_hat: num(5)?,
            stderr: num(6)?,
        })
    }
}

/// Label helper for LCS alphabet descriptors: `size:w0;w1;...`.
pub fn alphabet_label(alphabet_size: u32, dist: &[f64]) -> String {
    let weights: Vec<String> = dist.iter().map(|w| w.to_string()).collect();
    format!("{alphabet_size}:{}", weights.join(";"))
}
