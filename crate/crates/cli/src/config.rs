//! Optional `key=value` settings file.
//!
//! Recognised keys are `cap` and `workers`. The file is found through
//! `--config`, then the `FAIRDOM_CONFIG` environment variable, then
//! `fairdom.conf` in the working directory if it exists.

use std::path::{Path, PathBuf};

use crate::CliError;

pub const ENV_VAR: &str = "FAIRDOM_CONFIG";
pub const DEFAULT_FILE: &str = "fairdom.conf";

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Config {
    pub cap: Option<usize>,
    pub workers: Option<usize>,
}

impl Config {
    pub fn parse(text: &str, origin: &Path) -> Result<Config, CliError> {
        let mut cfg = Config::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: String| CliError::Usage(format!("{}:{}: {msg}", origin.display(), idx + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let num: usize = value
                .parse()
                .map_err(|_| bad(format!("`{key}` needs a non-negative integer, got `{value}`")))?;
            match key {
                "cap" => cfg.cap = Some(num),
                "workers" => cfg.workers = Some(num),
                _ => return Err(bad(format!("unknown key `{key}`"))),
            }
        }
        Ok(cfg)
    }

    /// Loads the file chosen by the lookup order above; no file is not an
    /// error unless one was named explicitly.
    pub fn load(flag: Option<&Path>) -> Result<Config, CliError> {
        let explicit = flag
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(ENV_VAR).filter(|v| !v.is_empty()).map(PathBuf::from));
        let path = match explicit {
            Some(p) => p,
            None => {
                let p = PathBuf::from(DEFAULT_FILE);
                if !p.is_file() {
                    return Ok(Config::default());
                }
                p
            }
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        Config::parse(&text, &path)
    }
}
