//! File formats, the evaluation harness and the `owa-rank` command line,
//! built on [`owa_rank_core`].

pub mod error;
pub mod formats;
pub mod method;
pub mod pipeline;
pub mod render;

pub use error::{AppError, Result};
pub use method::MethodSpec;
pub use pipeline::{aggregate_dataset, compare, evaluate_ranking, ComparisonReport};
