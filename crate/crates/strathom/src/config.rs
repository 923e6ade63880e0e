use std::path::PathBuf;

use strathom_core::CertificateConfig;

use crate::{Error, Format, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub moves: usize,
    pub seed: u64,
}

/// Everything a subcommand needs besides its positional inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub format: Format,
    /// Largest `n` with an `S_n` signature, in `1..=5`.
    pub quotient_depth: usize,
    pub fuzz: Option<FuzzConfig>,
    pub out: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { format: Format::Pd, quotient_depth: 5, fuzz: None, out: None }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(1..=5).contains(&self.quotient_depth) {
            return Err(Error::Config(format!("--quotients must be in 1..=5, got {}", self.quotient_depth)));
        }
        Ok(())
    }

    pub fn certificate_config(&self) -> Result<CertificateConfig> {
        self.validate()?;
        Ok(CertificateConfig { quotient_depth: self.quotient_depth, base_arc: 1 })
    }
}
