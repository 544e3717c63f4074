//! Error classification onto the exit-code contract.

use std::fmt;

/// 2 = invalid input, 3 = singular symbol / not a frame, 4 = numerical guard.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Singular(String),
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Singular(_) => 3,
            CliError::Guard(_) => 4,
        }
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::Singular(m) => write!(f, "singular symbol: {m}"),
            CliError::Guard(m) => write!(f, "numerical guard: {m}"),
        }
    }
}

impl From<nsgkit::Error> for CliError {
    fn from(err: nsgkit::Error) -> Self {
        use nsgkit::Error as E;
        match err {
            E::SymbolSingular { .. } => CliError::Singular(err.to_string()),
            E::SingularNode { .. }
            | E::EndpointSingularity { .. }
            | E::GuardTripped { .. }
            | E::UndefinedPoint(_)
            | E::DomainViolation(_) => CliError::Guard(err.to_string()),
            _ => CliError::Invalid(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Invalid(err.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Invalid(err.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
