//! CLI error taxonomy and exit codes.
//!
//! 0 ok, 2 invalid config, 3 capacity guard, 4 invariant violation;
//! 1 is reserved for environment failures (I/O and the like).

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Bad config file, bad flags, bad CSV schema. Exit 2.
    InvalidConfig(String),
    /// A capacity or oracle-scale guard refused the run. Exit 3.
    Capacity(String),
    /// A verified invariant failed. Exit 4.
    Invariant(String),
    /// Environment failure (I/O etc.). Exit 1.
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Other(_) => 1,
            CliError::InvalidConfig(_) => 2,
            CliError::Capacity(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }

    /// Machine-readable code for structured output.
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Other(_) => "io",
            CliError::InvalidConfig(_) => "invalid-config",
            CliError::Capacity(_) => "capacity",
            CliError::Invariant(_) => "invariant-violation",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::InvalidConfig(m)
            | CliError::Capacity(m)
            | CliError::Invariant(m)
            | CliError::Other(m) => write!(f, "{}: {m}", self.code()),
        }
    }
}

impl From<glab::Error> for CliError {
    fn from(e: glab::Error) -> Self {
        match e {
            glab::Error::Capacity { .. } | glab::Error::OracleScale { .. } => {
                CliError::Capacity(e.to_string())
            }
            glab::Error::Io(io) => CliError::Other(io.to_string()),
            other => CliError::InvalidConfig(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
