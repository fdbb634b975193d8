use clap::ValueEnum;
use encone_core::fqoracle::{is_prime, Budget, MAX_PRIME};

use crate::error::CliError;

/// Largest `n` solved without `--large`.
pub const DEFAULT_MAX_N: usize = 5;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Dot,
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: usize,
    pub qs: Vec<u32>,
    pub format: Format,
    /// Permits `n > 5` and the heavier exact cross-checks.
    pub large: bool,
    /// Raises the brute-force budget to [`Budget::EXTENDED`].
    pub enumerate: bool,
}

impl RunConfig {
    pub fn new(n: usize) -> Self {
        RunConfig { n, qs: vec![2], format: Format::Json, large: false, enumerate: false }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.n > DEFAULT_MAX_N && !self.large {
            return Err(CliError::Usage(format!("n = {} needs --large (default limit {DEFAULT_MAX_N})", self.n)));
        }
        if let Some(q) = self.qs.iter().find(|&&q| !is_prime(q) || q > MAX_PRIME) {
            return Err(CliError::Usage(format!("q = {q} is not a supported prime")));
        }
        Ok(())
    }

    pub fn budget(&self) -> Budget {
        if self.enumerate {
            Budget::EXTENDED
        } else {
            Budget::DEFAULT
        }
    }
}
