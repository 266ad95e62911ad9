use std::path::Path;

use serde::Deserialize;

use crate::error::{CliError, CliResult};

/// Flat key-value configuration. Every key is optional; command-line flags
/// override file values, which override the defaults below.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub prime: Option<u64>,
    pub primes: Option<Vec<u64>>,
    pub k: Option<u64>,
    #[serde(alias = "n-max")]
    pub n_max: Option<usize>,
    pub truncation: Option<usize>,
    pub deg: Option<u64>,
    pub degs: Option<Vec<u64>>,
    pub pages: Option<u32>,
    #[serde(alias = "max-deg")]
    pub max_deg: Option<u64>,
    pub json: Option<bool>,
    pub timings: Option<bool>,
}

pub const DEFAULT_PRIME: u64 = 3;
pub const DEFAULT_PRIMES: [u64; 4] = [2, 3, 5, 7];
pub const DEFAULT_N_MAX: usize = 6;
pub const DEFAULT_TRUNCATION: usize = 8;
pub const DEFAULT_DEG: u64 = 2;
pub const DEFAULT_DEGS: [u64; 2] = [2, 4];
pub const DEFAULT_PAGES: u32 = 3;

/// `2 deg p^3`
pub fn default_max_deg(p: u64, deg: u64) -> u64 {
    2 * deg * p * p * p
}

impl Config {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("cannot parse {}: {e}", path.display())))
    }

    /// Values from `over` win where present.
    pub fn overlay(self, over: Config) -> Config {
        Config {
            prime: over.prime.or(self.prime),
            primes: over.primes.or(self.primes),
            k: over.k.or(self.k),
            n_max: over.n_max.or(self.n_max),
            truncation: over.truncation.or(self.truncation),
            deg: over.deg.or(self.deg),
            degs: over.degs.or(self.degs),
            pages: over.pages.or(self.pages),
            max_deg: over.max_deg.or(self.max_deg),
            json: over.json.or(self.json),
            timings: over.timings.or(self.timings),
        }
    }

    pub fn prime(&self) -> u64 {
        self.prime.unwrap_or(DEFAULT_PRIME)
    }

    /// The prime list for `all`: `primes`, else `prime` alone, else the
    /// default list.
    pub fn primes(&self) -> Vec<u64> {
        match (&self.primes, self.prime) {
            (Some(v), _) => v.clone(),
            (None, Some(p)) => vec![p],
            (None, None) => DEFAULT_PRIMES.to_vec(),
        }
    }

    pub fn degs(&self) -> Vec<u64> {
        match (&self.degs, self.deg) {
            (Some(v), _) => v.clone(),
            (None, Some(d)) => vec![d],
            (None, None) => DEFAULT_DEGS.to_vec(),
        }
    }

    pub fn n_max(&self) -> usize {
        self.n_max.unwrap_or(DEFAULT_N_MAX)
    }

    pub fn truncation(&self) -> usize {
        self.truncation.unwrap_or(DEFAULT_TRUNCATION)
    }

    pub fn deg(&self) -> u64 {
        self.deg.unwrap_or(DEFAULT_DEG)
    }

    pub fn pages(&self) -> u32 {
        self.pages.unwrap_or(DEFAULT_PAGES)
    }

    pub fn max_deg(&self, p: u64, deg: u64) -> u64 {
        self.max_deg.unwrap_or_else(|| default_max_deg(p, deg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_object() {
        let c: Config = serde_json::from_str(r#"{"prime": 5, "n_max": 3, "max-deg": 40}"#).unwrap();
        assert_eq!(c.prime(), 5);
        assert_eq!(c.n_max(), 3);
        assert_eq!(c.max_deg(5, 2), 40);
        assert!(serde_json::from_str::<Config>(r#"{"bogus": 1}"#).is_err());
    }

    #[test]
    fn defaults_and_overlay() {
        let c = Config::default();
        assert_eq!(c.primes(), vec![2, 3, 5, 7]);
        assert_eq!(c.max_deg(3, 2), 108);
        let file = Config { n_max: Some(2), prime: Some(5), ..Config::default() };
        let flags = Config { prime: Some(7), ..Config::default() };
        let merged = file.overlay(flags);
        assert_eq!((merged.prime(), merged.n_max()), (7, 2));
    }
}
