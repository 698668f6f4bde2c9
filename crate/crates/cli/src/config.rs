//! Run configuration: file < flags < environment (cache directory only).

use serde::Deserialize;
use std::path::PathBuf;

#[derive(Clone, Debug)]
pub struct Config {
    pub cache_dir: Option<PathBuf>,
    pub element_guard: u64,
    pub seed: u64,
    pub format: OutputFormat,
    pub precision: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Deserialize, Default)]
struct ConfigFile {
    cache_dir: Option<String>,
    element_guard: Option<u64>,
    seed: Option<u64>,
    format: Option<String>,
    precision: Option<u32>,
}

impl Config {
    /// Assemble from an optional JSON config file and the command-line
    /// overrides; `CHARLEVEL_CACHE` wins over both for the cache directory.
    pub fn assemble(
        config_path: Option<&PathBuf>,
        format: Option<OutputFormat>,
        seed: Option<u64>,
        no_cache: bool,
    ) -> Result<Config, String> {
        let file: ConfigFile = match config_path {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| format!("cannot read config {}: {}", p.display(), e))?;
                serde_json::from_str(&text).map_err(|e| format!("bad config file: {}", e))?
            }
            None => ConfigFile::default(),
        };
        let mut cache_dir = file.cache_dir.map(PathBuf::from);
        if let Some(env) = std::env::var_os("CHARLEVEL_CACHE") {
            cache_dir = Some(PathBuf::from(env));
        }
        if no_cache {
            cache_dir = None;
        }
        let format = format.or_else(|| match file.format.as_deref() {
            Some("json") => Some(OutputFormat::Json),
            Some("csv") => Some(OutputFormat::Csv),
            _ => None,
        });
        Ok(Config {
            cache_dir,
            element_guard: file.element_guard.unwrap_or(300_000),
            seed: seed.or(file.seed).unwrap_or(20260808),
            format: format.unwrap_or(OutputFormat::Json),
            precision: file.precision.unwrap_or(15),
        })
    }

    pub fn cache(&self, no_cache: bool) -> charlevel_core::cache::Cache {
        if no_cache {
            charlevel_core::cache::Cache::disabled()
        } else {
            charlevel_core::cache::Cache::resolve(self.cache_dir.clone())
        }
    }
}
