//! File formats, the builtin corpus, reports and the command line.

pub mod cli;
pub mod corpus;
pub mod format;
pub mod report;

pub use report::{Check, Item, Report};
