//! Text formats, reports and parameter sweeps for the `pathideal` command.

pub mod format;
pub mod report;
pub mod sweep;
