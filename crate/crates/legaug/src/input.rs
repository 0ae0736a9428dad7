//! Loading fronts and DGAs from text or JSON files.

use std::path::Path;

use legaug_core::dga::{build_ce_dga, BasePoints, CeDga};
use legaug_core::diagram::FrontDiagram;

use crate::error::CliError;
use crate::formats;

/// What an input file contained.
#[derive(Debug, Clone)]
pub enum Input {
    Front(FrontDiagram),
    Dga(CeDga),
}

impl Input {
    /// Detects the format: JSON objects with `word` are fronts and with
    /// `generators` are DGAs; text containing a `plat` line is a front and
    /// anything else is read as a DGA dump.
    pub fn parse(text: &str) -> Result<Input, CliError> {
        let trimmed = text.trim_start();
        if trimmed.starts_with('{') {
            let value: serde_json::Value = serde_json::from_str(text)?;
            if value.get("word").is_some() {
                return Ok(Input::Front(formats::front_from_json(&value)?));
            }
            if value.get("generators").is_some() {
                return Ok(Input::Dga(formats::dga_from_json(&value)?));
            }
            return Err(CliError::format("input", "JSON needs a `word` or `generators` field"));
        }
        if text.lines().any(|l| l.trim_start().starts_with("plat")) {
            Ok(Input::Front(FrontDiagram::parse(text)?))
        } else {
            Ok(Input::Dga(CeDga::parse(text)?))
        }
    }

    pub fn load(path: &Path) -> Result<Input, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        Input::parse(&text)
    }

    /// The single-base-point DGA (built for fronts, as loaded otherwise).
    pub fn dga(&self) -> CeDga {
        match self {
            Input::Front(d) => build_ce_dga(d, BasePoints::Single),
            Input::Dga(dga) => dga.clone(),
        }
    }

    /// The front, for commands that need one.
    pub fn front(&self, command: &str) -> Result<&FrontDiagram, CliError> {
        match self {
            Input::Front(d) => Ok(d),
            Input::Dga(_) => Err(CliError::Unsupported(format!("`{command}` needs a plat front, not a DGA"))),
        }
    }
}
