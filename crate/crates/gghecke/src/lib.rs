//! Command-line front end, file formats and verification sweeps for
//! `gghecke-core`.

pub mod cli;
pub mod config;
pub mod format;
pub mod verify;

use gghecke_core::intersect::IntersectError;
use gghecke_core::oracle::OracleError;
use gghecke_core::{ChevalleyError, GfError, HeckeError};

pub use cli::run;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Group(#[from] ChevalleyError),
    #[error(transparent)]
    Intersect(#[from] IntersectError),
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
