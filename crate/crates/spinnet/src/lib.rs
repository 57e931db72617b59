//! Std companion to `spinnet-core`: file formats, experiment drivers,
//! reference tables, and the cross-validation suite behind the
//! `spinnet` binary.
//!
//! The core crate holds all of the mathematics; this crate adds what
//! needs an operating system: reading and writing network files,
//! rendering CSV/JSON, and turning computations into process exit
//! codes.

pub mod csvout;
pub mod lattice_table;
pub mod netfile;
pub mod sweep;
pub mod verify;

use std::fmt;

use spinnet_core::grouptheory::GroupTheoryError;
use spinnet_core::manybody::ManyBodyError;
use spinnet_core::network::NetworkError;
use spinnet_core::spectral::SpectralError;

/// Tool-level error classes. Each class maps to one process exit code
/// so scripts can tell bad input from exceeded capacity from a failed
/// verification.
#[derive(Debug)]
pub enum AppError {
    /// Malformed input: flags, shape strings, file contents.
    Parse(String),
    /// The requested computation exceeds a dimension cap.
    Capacity(String),
    /// An internal contract was violated; indicates a bug, not bad input.
    Contract(String),
    /// A verification or self-test check failed.
    Verification(String),
    Io(std::io::Error),
}

impl AppError {
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Parse(_) => 2,
            AppError::Capacity(_) => 3,
            AppError::Contract(_) => 4,
            AppError::Verification(_) => 5,
            AppError::Io(_) => 6,
        }
    }
}

impl fmt::Display for AppError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AppError::Parse(msg) => write!(f, "{msg}"),
            AppError::Capacity(msg) => write!(f, "{msg}"),
            AppError::Contract(msg) => write!(f, "internal contract violated: {msg}"),
            AppError::Verification(msg) => write!(f, "{msg}"),
            AppError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for AppError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            AppError::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Io(e)
    }
}

impl From<NetworkError> for AppError {
    fn from(e: NetworkError) -> Self {
        // network errors always trace back to user-supplied shapes
        AppError::Parse(e.to_string())
    }
}

impl From<ManyBodyError> for AppError {
    fn from(e: ManyBodyError) -> Self {
        match e {
            ManyBodyError::DimensionCap { .. } => AppError::Capacity(e.to_string()),
            _ => AppError::Parse(e.to_string()),
        }
    }
}

impl From<SpectralError> for AppError {
    fn from(e: SpectralError) -> Self {
        match e {
            SpectralError::DenseLimitExceeded { .. } => AppError::Capacity(e.to_string()),
            _ => AppError::Contract(e.to_string()),
        }
    }
}

impl From<GroupTheoryError> for AppError {
    fn from(e: GroupTheoryError) -> Self {
        match e {
            GroupTheoryError::InexactDivision => AppError::Contract(e.to_string()),
            _ => AppError::Parse(e.to_string()),
        }
    }
}
