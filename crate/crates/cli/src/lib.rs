//! Library side of the `oddcut` command: instance I/O, commands, experiments
//! and JSON reports.

pub mod commands;
pub mod experiments;
pub mod report;

pub use report::{RunReport, Status, Verdicts};
