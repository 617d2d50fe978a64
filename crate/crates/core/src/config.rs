//! Solver configuration.
//!
//! A flat key-value text format (`key = value`, one per line, `#` comments)
//! covers every tunable: enumeration caps, attempt caps, the optional undo
//! budget for deletion search, oracle node budget, worker count, and the
//! corpus seed. Defaults match the greedy, no-undo deletion discipline.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config line {line}: expected `key = value`, got {text:?}")]
    Malformed { line: usize, text: String },
    #[error("config line {line}: unknown key {key:?}")]
    UnknownKey { line: usize, key: String },
    #[error("config line {line}: bad value for {key}: {value:?}")]
    BadValue { line: usize, key: String, value: String },
}

/// Tunables for one solve run and for corpus execution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Cap on enumerated count vectors for the cycle-count equation.
    pub solution_cap: usize,
    /// Cap on count vectors actually attempted by the deletion loop.
    pub attempt_cap: usize,
    /// Deletion-search undo budget. 0 keeps the loop strictly greedy:
    /// a deletion is never revisited, only the candidate choice after it.
    pub undo_depth: usize,
    /// Node-expansion budget for the exhaustive oracle.
    pub oracle_budget: u64,
    /// Worker threads for corpus runs (1 = sequential).
    pub workers: usize,
    /// Seed for corpus generation.
    pub seed: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            solution_cap: 10_000,
            attempt_cap: 64,
            undo_depth: 0,
            oracle_budget: 10_000_000,
            workers: 1,
            seed: 0,
        }
    }
}

impl SolverConfig {
    /// Parses the flat key-value format. Unset keys keep their defaults.
    pub fn parse(text: &str) -> Result<SolverConfig, ConfigError> {
        let mut cfg = SolverConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let Some((key, value)) = trimmed.split_once('=') else {
                return Err(ConfigError::Malformed {
                    line,
                    text: trimmed.to_string(),
                });
            };
            let key = key.trim();
            let value = value.trim();
            let bad = |k: &str, v: &str| ConfigError::BadValue {
                line,
                key: k.to_string(),
                value: v.to_string(),
            };
            match key {
                "solution_cap" => {
                    cfg.solution_cap = value.parse().map_err(|_| bad(key, value))?
                }
                "attempt_cap" => cfg.attempt_cap = value.parse().map_err(|_| bad(key, value))?,
                "undo_depth" => cfg.undo_depth = value.parse().map_err(|_| bad(key, value))?,
                "oracle_budget" => {
                    cfg.oracle_budget = value.parse().map_err(|_| bad(key, value))?
                }
                "workers" => cfg.workers = value.parse().map_err(|_| bad(key, value))?,
                "seed" => cfg.seed = value.parse().map_err(|_| bad(key, value))?,
                _ => {
                    return Err(ConfigError::UnknownKey {
                        line,
                        key: key.to_string(),
                    })
                }
            }
        }
        Ok(cfg)
    }

    /// Renders the config in the same key-value format `parse` accepts.
    pub fn render(&self) -> String {
        format!(
            "solution_cap = {}\nattempt_cap = {}\nundo_depth = {}\noracle_budget = {}\nworkers = {}\nseed = {}\n",
            self.solution_cap,
            self.attempt_cap,
            self.undo_depth,
            self.oracle_budget,
            self.workers,
            self.seed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_round_trip() {
        let cfg = SolverConfig::default();
        let parsed = SolverConfig::parse(&cfg.render()).unwrap();
        assert_eq!(parsed, cfg);
    }

    #[test]
    fn partial_file_keeps_defaults() {
        let cfg = SolverConfig::parse("# tuning\nseed = 9\n\nattempt_cap = 3\n").unwrap();
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.attempt_cap, 3);
        assert_eq!(cfg.solution_cap, SolverConfig::default().solution_cap);
    }

    #[test]
    fn unknown_key_is_rejected_with_line() {
        let err = SolverConfig::parse("seed = 1\nbudget = 7\n").unwrap_err();
        match err {
            ConfigError::UnknownKey { line, key } => {
                assert_eq!(line, 2);
                assert_eq!(key, "budget");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn bad_value_is_rejected() {
        let err = SolverConfig::parse("workers = many").unwrap_err();
        assert!(matches!(err, ConfigError::BadValue { .. }));
    }

    #[test]
    fn missing_equals_is_malformed() {
        let err = SolverConfig::parse("workers 4").unwrap_err();
        assert!(matches!(err, ConfigError::Malformed { line: 1, .. }));
    }
}
