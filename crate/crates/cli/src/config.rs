//! `key=value` defaults file. Flags override the file, the file overrides
//! the built-in defaults.

use std::fs;
use std::path::Path;

use mnsd_core::{F2Mode, Mode};

use crate::render::Format;
use crate::CliError;

pub const CONFIG_ENV: &str = "MNSD_CONFIG";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FileConfig {
    pub filters: Option<Mode>,
    pub f2_mode: Option<F2Mode>,
    pub format: Option<Format>,
    pub max: Option<u64>,
    pub timing: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))
    }

    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = FileConfig::default();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", no + 1))?;
            let value = value.trim();
            let bad = |e: String| format!("line {}: {e}", no + 1);
            match key.trim().replace('_', "-").as_str() {
                "filters" => {
                    cfg.filters = Some(
                        value
                            .parse()
                            .map_err(|e: mnsd_core::Error| bad(e.to_string()))?,
                    )
                }
                "f2-mode" => {
                    cfg.f2_mode = Some(
                        value
                            .parse()
                            .map_err(|e: mnsd_core::Error| bad(e.to_string()))?,
                    )
                }
                "format" => cfg.format = Some(value.parse().map_err(bad)?),
                "max" => {
                    let max: u64 = value
                        .parse()
                        .map_err(|_| bad(format!("`{value}` is not a count")))?;
                    if max == 0 {
                        return Err(bad("max must be at least 1".into()));
                    }
                    cfg.max = Some(max);
                }
                "timing" => {
                    cfg.timing = Some(
                        value
                            .parse()
                            .map_err(|_| bad(format!("`{value}` is not true or false")))?,
                    )
                }
                other => return Err(bad(format!("unknown key `{other}`"))),
            }
        }
        Ok(cfg)
    }
}
