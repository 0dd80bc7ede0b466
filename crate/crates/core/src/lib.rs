//! Consensus ranking with ordered weighted averaging (OWA).
//!
//! Several rankers each emit an ordered list of items. Every list position is
//! turned into a positional score, the per-item score rows are fused with an
//! OWA operator, and the fused scores are sorted into a consensus ranking.
//! Two families of OWA weights are provided:
//!
//! | Weights | Source |
//! |---------|--------|
//! | [`weighting::quantifier_weights`] | fuzzy linguistic quantifier `Q(r)` ("most", "at least half", ...) |
//! | [`weighting::most_preferred_first_weights`] | rank-proportional `(u + 1 - k) / N`, best ranker heaviest |
//!
//! An unweighted positional sum ([`aggregation::pas_aggregate`]) serves as the
//! baseline. The [`metrics`] module scores a produced ranking against a
//! ground-truth ranking (P@k, FPR@k, FNR@k, MAP, MAE, MRR, RMSE and a
//! modified Spearman coefficient for partial lists).
//!
//! ```
//! use owa_rank_core::aggregation::{build_score_matrix, rank_items, AggregationMethod, PasConfig};
//! use owa_rank_core::fixtures;
//!
//! let dataset = fixtures::data_structures();
//! let matrix = build_score_matrix(&dataset.courses[0], &dataset.roster, &PasConfig::default());
//! let ranking = rank_items(&matrix, &AggregationMethod::MostPreferredFirst).unwrap();
//! assert_eq!(ranking.entries[0].item.as_str(), "DS9");
//! ```
//!
//! The crate is `no_std` and only needs `alloc`; file formats and the command
//! line live in the `owa-rank` crate.

#![no_std]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

pub mod aggregation;
pub mod dataset;
mod error;
pub mod fixtures;
pub mod metrics;
mod natural;
pub mod weighting;

pub use error::{Error, Result};
pub use natural::natural_cmp;
