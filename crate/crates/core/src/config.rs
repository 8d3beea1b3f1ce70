//! Size caps and execution knobs.
//!
//! All caps are desk-scale guards with conservative defaults. Exceeding one
//! is a distinct, recoverable [`Error::CapExceeded`](crate::Error::CapExceeded),
//! never a silent truncation.

use std::env;

use crate::error::{Error, Result};

/// Environment variable that overrides every vertex-count cap at once.
pub const CAP_ENV_VAR: &str = "RAMSEY_FORGE_CAP";

#[derive(Clone, Debug)]
pub struct Config {
    /// Largest graph the exact solvers will accept, in vertices.
    pub solver_vertex_cap: usize,
    /// Largest graph power output, in vertices.
    pub graph_power_cap: usize,
    /// Largest constructed coloring, in vertices.
    pub coloring_size_cap: usize,
    /// Largest number of colorings the exhaustive Ramsey oracle will enumerate.
    pub ramsey_enum_cap: u128,
    /// Worker threads for per-color verification. Results are independent of
    /// the thread count; 1 keeps timing-sensitive logs reproducible.
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            solver_vertex_cap: 10_000,
            graph_power_cap: 1_000_000,
            coloring_size_cap: 2_000_000,
            ramsey_enum_cap: 100_000_000,
            threads: 1,
        }
    }
}

impl Config {
    /// Default configuration with the `RAMSEY_FORGE_CAP` override applied,
    /// if set. The override replaces the solver, graph-power and coloring
    /// vertex caps with one value; the enumeration cap is unaffected.
    pub fn from_env() -> Result<Config> {
        let mut cfg = Config::default();
        if let Ok(raw) = env::var(CAP_ENV_VAR) {
            let cap: usize = raw
                .trim()
                .parse()
                .ok()
                .filter(|&c| c > 0)
                .ok_or(Error::InvalidCapOverride { value: raw.clone() })?;
            cfg.solver_vertex_cap = cap;
            cfg.graph_power_cap = cap;
            cfg.coloring_size_cap = cap;
        }
        Ok(cfg)
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_conservative() {
        let cfg = Config::default();
        assert_eq!(cfg.solver_vertex_cap, 10_000);
        assert_eq!(cfg.graph_power_cap, 1_000_000);
        assert_eq!(cfg.coloring_size_cap, 2_000_000);
        assert_eq!(cfg.ramsey_enum_cap, 100_000_000);
        assert_eq!(cfg.threads, 1);
    }

    #[test]
    fn with_threads_clamps_to_one() {
        assert_eq!(Config::default().with_threads(0).threads, 1);
        assert_eq!(Config::default().with_threads(4).threads, 4);
    }
}
