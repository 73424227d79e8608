//! Sweep configuration files. Keys mirror the `growth` command line flags
//! and flags given on the command line win over the file.
//!
//! ```toml
//! suite = "thm3"
//! p = "5..31"          # or [5, 7, 11]
//! family = "random:size=8"
//! sizes = "4,8,12"     # or [4, 8, 12]
//! trials = 3
//! seed = 42
//! out = "thm3.csv"
//! format = "csv"
//! workers = 4
//! ```

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::lab::rows::Format;
use crate::lab::sweep::{parse_field_list, parse_size_list, Suite, SweepConfig};

/// A list given either as text (`"5..31"`, `"4,8"`) or as an array.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum ListValue {
    Text(String),
    Items(Vec<u64>),
}

/// Every `growth` option, each optional so that sources can be layered.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthOptions {
    pub suite: Option<String>,
    pub p: Option<ListValue>,
    pub family: Option<String>,
    pub sizes: Option<ListValue>,
    pub trials: Option<u32>,
    pub seed: Option<u64>,
    pub n: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub workers: Option<usize>,
    pub timing: Option<bool>,
}

impl GrowthOptions {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_toml(&text)
    }

    /// `self` with every option set in `over` replaced.
    pub fn overridden_by(self, over: GrowthOptions) -> Self {
        GrowthOptions {
            suite: over.suite.or(self.suite),
            p: over.p.or(self.p),
            family: over.family.or(self.family),
            sizes: over.sizes.or(self.sizes),
            trials: over.trials.or(self.trials),
            seed: over.seed.or(self.seed),
            n: over.n.or(self.n),
            out: over.out.or(self.out),
            format: over.format.or(self.format),
            workers: over.workers.or(self.workers),
            timing: over.timing.or(self.timing),
        }
    }

    pub fn output_format(&self) -> Result<Format> {
        self.format.as_deref().map_or(Ok(Format::Csv), str::parse)
    }

    pub fn sweep_config(&self) -> Result<SweepConfig> {
        let suite: Suite = self
            .suite
            .as_deref()
            .ok_or_else(|| Error::InvalidSpec("no suite given".into()))?
            .parse()?;
        let mut c = SweepConfig::new(suite);
        c.fields = match &self.p {
            None => Vec::new(),
            Some(ListValue::Items(v)) => v.clone(),
            Some(ListValue::Text(s)) => parse_field_list(s, suite.prime_only())?,
        };
        if !suite.is_complex() && c.fields.is_empty() {
            return Err(Error::InvalidSpec(format!("{suite} needs field orders (--p)")));
        }
        if let Some(f) = &self.family {
            c.family = f.parse()?;
        }
        c.sizes = match &self.sizes {
            None => Vec::new(),
            Some(ListValue::Items(v)) => v.clone(),
            Some(ListValue::Text(s)) => parse_size_list(s)?,
        };
        c.trials = self.trials.unwrap_or(1);
        c.seed = self.seed.unwrap_or(0);
        c.dimension = self.n;
        c.workers = self.workers;
        c.timing = self.timing.unwrap_or(false);
        Ok(c)
    }
}
