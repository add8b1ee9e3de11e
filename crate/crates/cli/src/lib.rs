//! Reports, census tables and input handling behind the `kappa2` binary.

pub mod census;
pub mod input;
pub mod report;

use thiserror::Error;

use srg_core::connectivity::{ConnectivityError, InvalidCut};
use srg_core::{ConstructionError, GeometryError, Graph6Error};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Connectivity(#[from] ConnectivityError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("invalid cut: {0}")]
    InvalidCut(#[from] InvalidCut),
    #[error("{0}")]
    Usage(String),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn io(path: impl AsRef<std::path::Path>, source: std::io::Error) -> CliError {
        CliError::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }
}

/// Search tuning shared by every command that runs the solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tuning {
    pub threads: usize,
    pub node_budget: u64,
}

impl Default for Tuning {
    fn default() -> Self {
        Tuning {
            threads: 1,
            node_budget: 1_000_000_000,
        }
    }
}

pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
