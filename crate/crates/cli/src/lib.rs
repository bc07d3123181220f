//! Report types and command implementations behind the `hopftrace` binary.

pub mod commands;
pub mod report;
