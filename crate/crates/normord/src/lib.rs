//! File formats, parallel experiment driver and command-line front end for
//! [`normord_core`].

pub mod cli;
pub mod format;
pub mod parallel;
pub mod render;

pub use parallel::run_experiment_parallel;
