//! Library half of the `fthresh` CLI: problem-file parsing, report
//! documents, and command dispatch. The binary in `main.rs` is a thin
//! argument-parsing shell over this.

pub mod commands;
pub mod problem;
pub mod report;
