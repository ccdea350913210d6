//! Series documents, identity suites, the numeric multiple L-value
//! evaluator, and the command implementations behind the binary.

pub mod commands;
pub mod document;
pub mod mlv;
pub mod suites;

pub use document::{emit_series, parse_series, Alphabet, SeriesDocument, TypedSeries};
pub use mlv::{mlv_eval, MlvEstimate, MlvQuery};
pub use suites::{all_suites, run_suites, select_suites, SuiteConfig, VerifyReport};
