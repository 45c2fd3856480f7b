use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// Everything a run depends on. Two runs with equal configs write
/// byte-identical reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct RunConfig {
    pub seed: u64,
    /// Tolerance overrides by name; unnamed tolerances keep their defaults.
    pub tolerances: BTreeMap<String, f64>,
    /// Sample-count overrides by suite name.
    pub sample_counts: BTreeMap<String, usize>,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(seed: u64) -> Self {
        RunConfig {
            seed,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in &self.tolerances {
            if !(*v > 0.0 && v.is_finite()) {
                return Err(CliError::Input(format!("tolerance {name} must be positive, got {v}")));
            }
        }
        Ok(())
    }

    pub fn tol(&self, name: &str, default: f64) -> f64 {
        self.tolerances.get(name).copied().unwrap_or(default)
    }

    pub fn samples(&self, suite: &str, default: usize) -> usize {
        self.sample_counts.get(suite).copied().unwrap_or(default)
    }

    /// Parses `NAME=VALUE` into the tolerance map.
    pub fn set_tol(&mut self, spec: &str) -> Result<()> {
        let (name, value) = split_assignment(spec)?;
        let v: f64 = value
            .parse()
            .map_err(|_| CliError::Input(format!("`{spec}`: `{value}` is not a number")))?;
        self.tolerances.insert(name.to_string(), v);
        self.validate()
    }

    /// Parses `SUITE=COUNT` into the sample-count map.
    pub fn set_samples(&mut self, spec: &str) -> Result<()> {
        let (name, value) = split_assignment(spec)?;
        let v: usize = value
            .parse()
            .map_err(|_| CliError::Input(format!("`{spec}`: `{value}` is not a count")))?;
        self.sample_counts.insert(name.to_string(), v);
        Ok(())
    }
}

fn split_assignment(spec: &str) -> Result<(&str, &str)> {
    match spec.split_once('=') {
        Some((n, v)) if !n.is_empty() => Ok((n.trim(), v.trim())),
        _ => Err(CliError::Input(format!("expected NAME=VALUE, got `{spec}`"))),
    }
}
