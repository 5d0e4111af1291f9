//! Command-line front end: fits model trees on CSV files, serializes them
//! to a versioned JSON document, scores new rows, and drives the benchmark
//! designs. All behaviour lives here; `main` only parses and dispatches.

pub mod args;
pub mod cfgfile;
pub mod commands;
pub mod document;
pub mod error;
pub mod render;

pub use args::{Cli, Command};
pub use document::{
    document_from_palm, document_from_tree, document_to_model, read_document, write_document,
    LoadedModel, TreeDocument, FORMAT_VERSION,
};
pub use error::{CliError, Result};
