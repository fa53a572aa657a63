//! Run configuration: defaults, then a `key=value` file, then flags.

use std::path::{Path, PathBuf};

use clap::ValueEnum;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

/// Which Euler pairing `euler` reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ChiNormalization {
    Raw,
    Normalized,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: i64,
    pub w_trunc: usize,
    pub x_trunc: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub chi: ChiNormalization,
    pub verbose: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { n: 5, w_trunc: 50, x_trunc: 10, format: Format::Tsv, out: None, chi: ChiNormalization::Raw, verbose: false }
    }
}

/// Values given on the command line; `None` falls through to the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub n: Option<i64>,
    pub w_trunc: Option<usize>,
    pub x_trunc: Option<usize>,
    pub format: Option<Format>,
    pub out: Option<PathBuf>,
    pub chi: Option<ChiNormalization>,
    pub verbose: bool,
}

fn bad(msg: String) -> CliError {
    CliError::Config(msg)
}

fn parse_num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, CliError> {
    v.parse().map_err(|_| bad(format!("{key}: cannot parse {v:?}")))
}

fn parse_enum<T: ValueEnum>(key: &str, v: &str) -> Result<T, CliError> {
    T::from_str(v, true).map_err(|_| bad(format!("{key}: unknown value {v:?}")))
}

impl RunConfig {
    /// Applies `key=value` lines; blank lines and `#` comments are skipped.
    pub fn apply_file_text(&mut self, text: &str) -> Result<(), CliError> {
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| bad(format!("line {}: expected key=value", i + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "n" => self.n = parse_num(key, value)?,
                "wN" => self.w_trunc = parse_num(key, value)?,
                "xN" => self.x_trunc = parse_num(key, value)?,
                "format" => self.format = parse_enum(key, value)?,
                "out" => self.out = Some(PathBuf::from(value)),
                "chi" => self.chi = parse_enum(key, value)?,
                "verbose" => self.verbose = parse_num(key, value)?,
                _ => return Err(bad(format!("line {}: unknown key {key:?}", i + 1))),
            }
        }
        Ok(())
    }

    pub fn load(file: Option<&Path>, flags: Overrides) -> Result<Self, CliError> {
        let mut cfg = RunConfig::default();
        if let Some(path) = file {
            let text = std::fs::read_to_string(path).map_err(|e| bad(format!("{}: {e}", path.display())))?;
            cfg.apply_file_text(&text)?;
        }
        if let Some(v) = flags.n {
            cfg.n = v;
        }
        if let Some(v) = flags.w_trunc {
            cfg.w_trunc = v;
        }
        if let Some(v) = flags.x_trunc {
            cfg.x_trunc = v;
        }
        if let Some(v) = flags.format {
            cfg.format = v;
        }
        if flags.out.is_some() {
            cfg.out = flags.out;
        }
        if let Some(v) = flags.chi {
            cfg.chi = v;
        }
        cfg.verbose |= flags.verbose;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.n < 2 {
            return Err(bad(format!("n must be at least 2, got {}", self.n)));
        }
        if self.w_trunc == 0 || self.x_trunc == 0 {
            return Err(bad("truncations must be positive".into()));
        }
        Ok(())
    }
}
