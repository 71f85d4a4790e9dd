//! Group expression language, JSON reports, result cache and the `grouprings` command line.

pub mod analysis;
pub mod batch;
pub mod cache;
pub mod cli;
pub mod expr;
pub mod report;
pub mod sl2cmd;
