//! Command-line tooling around `linarr-core`: arrangement files, JSON
//! reports, the reference corpus and the seeded random search.

pub mod cli;
pub mod expectations;
pub mod json;
pub mod search;
