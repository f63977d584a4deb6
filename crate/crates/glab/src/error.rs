//! Error taxonomy shared by all modules.
//!
//! Capacity and oracle-scale guards are hard errors, never silent
//! truncation: an experiment that would not fit its stated memory or
//! enumeration budget refuses to run.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A full-table computation would exceed its memory guard.
    #[error("capacity exceeded: {what} needs {needed} cells, guard allows {limit}")]
    Capacity {
        what: &'static str,
        needed: u64,
        limit: u64,
    },

    /// An exhaustive oracle was asked to enumerate past its scale guard.
    #[error("oracle scale exceeded: {what} ({size} > {limit})")]
    OracleScale {
        what: &'static str,
        size: u64,
        limit: u64,
    },

    /// Too few usable points to fit a line.
    #[error(
        "fit needs at least {min} usable points, got {usable} \
         ({excluded_noise} dropped as noise, {excluded_window} outside window)"
    )]
    Fit {
        min: usize,
        usable: usize,
        excluded_noise: usize,
        excluded_window: usize,
    },

    /// A fit converged outside its meaningful domain.
    #[error("degenerate fit: {what} = {value}")]
    DegenerateFit { what: &'static str, value: f64 },

    /// Malformed serialized data (binary fields, CSV rows).
    #[error("format error: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
