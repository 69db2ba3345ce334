//! Library surface of the command-line tool: input parsing, analysis
//! orchestration, report documents, and the oracle verification harness.

pub mod analysis;
pub mod error;
pub mod io;
pub mod oracle;
pub mod report;
