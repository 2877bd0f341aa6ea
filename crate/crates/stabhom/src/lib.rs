//! File formats, the verification harness and catalog searches for `stabhom-core`.

pub mod commands;
pub mod format;
pub mod laws;
pub mod oracle;
pub mod report;
