use kerov_core::jack::DEFAULT_JACK_CAP;
use kerov_core::kerov::DEFAULT_KEROV_CAP;
use kerov_core::plancherel::EnumerationCaps;

use crate::alpha::Alpha;

pub const DEFAULT_GRID_STEP: f64 = 1e-3;
pub const MAX_GRID_STEP: f64 = 0.1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

/// Run-wide settings. Caps are positive and `0 < grid_step ≤ 0.1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub jack_cap: usize,
    pub kerov_cap: usize,
    pub enumeration: EnumerationCaps,
    pub grid_step: f64,
    pub format: OutputFormat,
    pub seed: u64,
    pub alpha: Alpha,
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            jack_cap: DEFAULT_JACK_CAP,
            kerov_cap: DEFAULT_KEROV_CAP,
            enumeration: EnumerationCaps::default(),
            grid_step: DEFAULT_GRID_STEP,
            format: OutputFormat::Text,
            seed: 0,
            alpha: Alpha::Symbolic,
            threads: default_threads(),
        }
    }
}

pub fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

impl Config {
    pub fn validate(&self) -> Result<(), String> {
        let caps = [
            ("jack cap", self.jack_cap),
            ("kerov cap", self.kerov_cap),
            ("exact enumeration cap", self.enumeration.exact),
            ("floating enumeration cap", self.enumeration.float),
            ("thread count", self.threads),
        ];
        for (name, v) in caps {
            if v == 0 {
                return Err(format!("{name} must be positive"));
            }
        }
        if !(self.grid_step > 0.0 && self.grid_step <= MAX_GRID_STEP) {
            return Err(format!("grid step must lie in (0, {MAX_GRID_STEP}], got {}", self.grid_step));
        }
        Ok(())
    }
}
