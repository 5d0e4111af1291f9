//! Flat key=value config files sharing their key names with the fit
//! flags. Values from explicit flags win over file values.

use std::collections::HashMap;
use std::path::Path;

use crate::error::{input_io, CliError, Result};

pub const KNOWN_KEYS: [&str; 13] = [
    "data",
    "response",
    "varying",
    "fixed",
    "split",
    "family",
    "treatment",
    "alpha",
    "min-size",
    "trim",
    "max-iter",
    "out",
    "dot",
];

/// Parses `key = value` lines; `#` starts a comment, blank lines are
/// skipped, keys must be known and unique.
pub fn parse_config(text: &str) -> Result<HashMap<String, String>> {
    let mut out = HashMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            CliError::Input(format!("config line {}: expected key=value", lineno + 1))
        })?;
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return Err(CliError::Input(format!(
                "config line {}: unknown key '{key}'",
                lineno + 1
            )));
        }
        if out.insert(key.clone(), value).is_some() {
            return Err(CliError::Input(format!(
                "config line {}: duplicate key '{key}'",
                lineno + 1
            )));
        }
    }
    Ok(out)
}

pub fn load_config(path: &Path) -> Result<HashMap<String, String>> {
    let text = std::fs::read_to_string(path).map_err(|e| input_io(path, e))?;
    parse_config(&text)
}

/// Splits a comma list, trimming entries and dropping empties.
pub fn comma_list(value: &str) -> Vec<String> {
    value
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}
