//! Runtime configuration: tolerances, enumeration budget, RNG seed.
//!
//! Precedence is flags > config file > environment (`TORUSCHAR_*`) >
//! built-in defaults. The file format is plain `key=value` lines; `#`
//! starts a comment.

use std::collections::BTreeMap;
use std::path::Path;

use anyhow::{bail, Context, Result};

use crate::repnum::NumericConfig;

#[derive(Debug, Clone)]
pub struct Config {
    /// Enumeration work budget for the root-of-unity oracles.
    pub budget: u128,
    pub seed: u64,
    pub samples: u32,
    pub fd_step: f64,
    pub rank_rel_tol: f64,
    /// Tolerance for the zero-minor irreducibility test.
    pub zero_tol: f64,
    /// Relative residual bound for curve sampling.
    pub residual_tol: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            budget: toruschar_core::oracle::DEFAULT_BUDGET,
            seed: crate::repnum::DEFAULT_SEED,
            samples: 5,
            fd_step: 1e-5,
            rank_rel_tol: 1e-6,
            zero_tol: 1e-6,
            residual_tol: 1e-9,
        }
    }
}

const KEYS: [&str; 7] =
    ["budget", "seed", "samples", "fd_step", "rank_rel_tol", "zero_tol", "residual_tol"];

impl Config {
    /// Defaults overlaid by environment, then by the optional file.
    /// Flag overrides are applied afterwards by the CLI.
    pub fn load(file: Option<&Path>) -> Result<Config> {
        let mut cfg = Config::default();
        for key in KEYS {
            let env_key = format!("TORUSCHAR_{}", key.to_uppercase());
            if let Ok(value) = std::env::var(&env_key) {
                cfg.apply(key, value.trim())
                    .with_context(|| format!("invalid {env_key}"))?;
            }
        }
        if let Some(path) = file {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read config file {}", path.display()))?;
            for (key, value) in parse_kv(&text)? {
                cfg.apply(&key, &value)
                    .with_context(|| format!("invalid config key {key}"))?;
            }
        }
        Ok(cfg)
    }

    pub fn apply(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "budget" => self.budget = value.parse()?,
            "seed" => self.seed = parse_u64(value)?,
            "samples" => self.samples = value.parse()?,
            "fd_step" => self.fd_step = value.parse()?,
            "rank_rel_tol" => self.rank_rel_tol = value.parse()?,
            "zero_tol" => self.zero_tol = value.parse()?,
            "residual_tol" => self.residual_tol = value.parse()?,
            other => bail!("unknown config key {other}"),
        }
        Ok(())
    }

    pub fn numeric(&self) -> NumericConfig {
        NumericConfig {
            samples: self.samples,
            seed: self.seed,
            fd_step: self.fd_step,
            rank_rel_tol: self.rank_rel_tol,
        }
    }
}

/// Accepts both decimal and 0x-prefixed seeds.
fn parse_u64(value: &str) -> Result<u64> {
    if let Some(hex) = value.strip_prefix("0x").or_else(|| value.strip_prefix("0X")) {
        Ok(u64::from_str_radix(hex, 16)?)
    } else {
        Ok(value.parse()?)
    }
}

fn parse_kv(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {} is not key=value: {raw:?}", lineno + 1);
        };
        out.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn file_overrides_defaults() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "budget = 5000  # small\nseed = 0x2A").unwrap();
        let cfg = Config::load(Some(f.path())).unwrap();
        assert_eq!(cfg.budget, 5000);
        assert_eq!(cfg.seed, 42);
        assert_eq!(cfg.samples, Config::default().samples);
    }

    #[test]
    fn unknown_key_rejected() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "bogus = 1").unwrap();
        assert!(Config::load(Some(f.path())).is_err());
    }
}
