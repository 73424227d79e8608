//! Enumeration limits.
//!
//! Defaults keep exhaustive loops at desk scale. The `HEISLAB_LIMIT`
//! environment variable overrides them, either as a bare integer (the
//! pair-visit limit) or as a comma-separated list of `field=`, `space=` and
//! `pairs=` assignments, e.g. `HEISLAB_LIMIT=pairs=4000000000,space=8388608`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const ENV_VAR: &str = "HEISLAB_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible field order `q`.
    pub max_field: u64,
    /// Largest admissible `q^n` for enumerations of `F_q^n`.
    pub max_space: u64,
    /// Largest admissible number of pair (or tuple) visits in one operation.
    pub max_pairs: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_field: 1 << 20,
            max_space: 1 << 22,
            max_pairs: 1_000_000_000,
        }
    }
}

impl Limits {
    pub fn parse(spec: &str) -> Result<Limits> {
        let mut limits = Limits::default();
        let spec = spec.trim();
        if let Ok(v) = spec.parse::<u64>() {
            limits.max_pairs = v;
            return Ok(limits);
        }
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad limit assignment '{part}'")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad limit value in '{part}'")))?;
            match key.trim() {
                "field" => limits.max_field = value,
                "space" => limits.max_space = value,
                "pairs" => limits.max_pairs = value,
                other => return Err(Error::Parse(format!("unknown limit '{other}'"))),
            }
        }
        Ok(limits)
    }

    /// Defaults overridden by `HEISLAB_LIMIT`, if set and valid.
    pub fn from_env() -> Limits {
        std::env::var(ENV_VAR)
            .ok()
            .and_then(|s| Limits::parse(&s).ok())
            .unwrap_or_default()
    }

    /// Process-wide limits, read from the environment once.
    pub fn current() -> &'static Limits {
        static CURRENT: OnceLock<Limits> = OnceLock::new();
        CURRENT.get_or_init(Limits::from_env)
    }

    pub fn check_pairs(&self, what: &'static str, visits: u128) -> Result<()> {
        if visits > self.max_pairs as u128 {
            return Err(Error::limit(what, visits, self.max_pairs as u128));
        }
        Ok(())
    }

    pub fn check_space(&self, what: &'static str, size: u128) -> Result<()> {
        if size > self.max_space as u128 {
            return Err(Error::limit(what, size, self.max_space as u128));
        }
        Ok(())
    }
}
