//! Batch front end for `fq-incidence`: seeded point-set generation, the
//! plain-text point/sphere file format, and the theorem-check commands with
//! their JSON/CSV/text reports.

pub mod commands;
pub mod error;
pub mod format;
pub mod generate;
pub mod report;

pub use commands::{run, Cli, Command, Outcome, RunConfig};
pub use error::CliError;
pub use generate::{generate, random_spheres, seeded_rng, GeneratorShape};
