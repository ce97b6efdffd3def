//! Std companion of `kerov-core`: the `kerov` command-line tool, the Jack
//! table cache, JSON and CSV output, and rayon-parallel drivers.

pub mod alpha;
pub mod cache;
pub mod cli;
pub mod config;
pub mod parallel;
pub mod render;

pub use alpha::{Alpha, Value};
pub use cli::{run_args, Cli, Outcome};
pub use config::{Config, OutputFormat};
