//! Resource ceiling for counting sweeps.
//!
//! Sweeps over `[0, N)` refuse to run past a configurable ceiling so that a
//! typo in `N` fails fast instead of grinding for hours. The ceiling is read
//! from the `GRS_MAX_N` environment variable and defaults to `10^8`.

use crate::error::{Error, Result};

/// Default maximum number of indices a single sweep may visit.
pub const DEFAULT_SWEEP_CEILING: u64 = 100_000_000;

/// Environment variable overriding [`DEFAULT_SWEEP_CEILING`].
pub const SWEEP_ENV_VAR: &str = "GRS_MAX_N";

/// Current sweep ceiling.
pub fn sweep_ceiling() -> u64 {
    std::env::var(SWEEP_ENV_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SWEEP_CEILING)
}

/// Checks a requested sweep size against the ceiling.
pub fn check_sweep(requested: u64) -> Result<()> {
    let ceiling = sweep_ceiling();
    if requested > ceiling {
        return Err(Error::SweepCeiling { requested, ceiling });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_ceiling_accepts_small_sweeps() {
        assert!(check_sweep(1_000_000).is_ok());
        assert!(check_sweep(DEFAULT_SWEEP_CEILING).is_ok());
    }
}
