//! Command-line front end: JSON report formats, file readers, parallel
//! search and the full reproduction pipeline.

pub mod cli;
pub mod io;
pub mod json;
pub mod report;
pub mod reproduce;
pub mod search;

pub use cli::{run, Execution};
pub use report::{RunReport, Status};
pub use reproduce::{reproduce_all, ReproduceOptions};
