//! Experiment runner behind the `affwhit` binary: configs, presets and the
//! subcommands, usable from tests without spawning a process.

pub mod commands;
pub mod config;
pub mod report;
