//! IO, text formats, certificate JSON, fuzzing and batch runs on top of
//! [`strathom_core`]. The `strathom` binary is a thin clap layer over
//! this crate.

pub mod batch;
pub mod config;
pub mod error;
pub mod formats;
pub mod fuzz;
pub mod json;

pub use config::RunConfig;
pub use error::{Error, Result};
pub use formats::Format;
pub use strathom_core as core;

/// The bundled knot table: prime knots through 8 crossings, the unknot,
/// and the square and granny knots.
pub const BUNDLED_TABLE: &str = include_str!("../data/knot_table.txt");
