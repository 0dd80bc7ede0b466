//! Ranking quality against a ground-truth ranking.
//!
//! Veracity measures (higher is better): P@k, MAP, MRR, MSRCC.
//! Fallacy measures (lower is better): FPR@k, FNR@k, MAE, RMSE.
//!
//! "Relevant" means "in the top-k of the truth ranking"; the set metrics
//! always divide by `k`, even when a list is shorter than `k`. Position-error
//! metrics (MAE, RMSE) use 1-based positions of the items both lists share.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::dataset::ItemId;
use crate::error::{Error, Result};

/// A predicted ranking paired with the truth ranking it is judged against.
/// Neither list may repeat an item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedPair<T = ItemId> {
    predicted: Vec<T>,
    truth: Vec<T>,
}

impl<T: Ord> RankedPair<T> {
    pub fn new(predicted: Vec<T>, truth: Vec<T>) -> Result<Self> {
        check_unique(&predicted)?;
        check_unique(&truth)?;
        Ok(Self { predicted, truth })
    }

    pub fn predicted(&self) -> &[T] {
        &self.predicted
    }

    pub fn truth(&self) -> &[T] {
        &self.truth
    }

    fn predicted_positions(&self) -> BTreeMap<&T, usize> {
        self.predicted
            .iter()
            .enumerate()
            .map(|(i, x)| (x, i + 1))
            .collect()
    }

    /// `(predicted position, truth position)` for every shared item, in
    /// truth order.
    fn shared_positions(&self) -> Vec<(usize, usize)> {
        let pred = self.predicted_positions();
        self.truth
            .iter()
            .enumerate()
            .filter_map(|(i, x)| pred.get(x).map(|&p| (p, i + 1)))
            .collect()
    }

    /// Sizes of `top-k(predicted)`, `top-k(truth)` and their intersection.
    fn top_k_counts(&self, k: usize) -> Result<(usize, usize, usize)> {
        if k == 0 {
            return Err(Error::ZeroCutoff);
        }
        let p: BTreeSet<&T> = self.predicted.iter().take(k).collect();
        let t: BTreeSet<&T> = self.truth.iter().take(k).collect();
        Ok((p.len(), t.len(), p.intersection(&t).count()))
    }
}

fn check_unique<T: Ord>(list: &[T]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for (i, x) in list.iter().enumerate() {
        if !seen.insert(x) {
            return Err(Error::DuplicateItem { position: i + 1 });
        }
    }
    Ok(())
}

/// `|top-k(predicted) ∩ top-k(truth)| / k`.
pub fn precision_at_k<T: Ord>(pair: &RankedPair<T>, k: usize) -> Result<f64> {
    let (_, _, hits) = pair.top_k_counts(k)?;
    Ok(hits as f64 / k as f64)
}

/// `|top-k(predicted) \ top-k(truth)| / k`.
pub fn fpr_at_k<T: Ord>(pair: &RankedPair<T>, k: usize) -> Result<f64> {
    let (p, _, hits) = pair.top_k_counts(k)?;
    Ok((p - hits) as f64 / k as f64)
}

/// `|top-k(truth) \ top-k(predicted)| / k`.
pub fn fnr_at_k<T: Ord>(pair: &RankedPair<T>, k: usize) -> Result<f64> {
    let (_, t, hits) = pair.top_k_counts(k)?;
    Ok((t - hits) as f64 / k as f64)
}

fn mean(values: &[f64], what: &'static str) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::EmptyInput(what));
    }
    Ok(values.iter().sum::<f64>() / values.len() as f64)
}

/// Mean of per-course precision values.
pub fn mean_average_precision(precisions: &[f64]) -> Result<f64> {
    mean(precisions, "mean average precision")
}

/// Mean of `|predicted position - truth position|` over shared items.
pub fn mean_absolute_error<T: Ord>(pair: &RankedPair<T>) -> Result<f64> {
    let shared = pair.shared_positions();
    if shared.is_empty() {
        return Err(Error::NoSharedItems);
    }
    let total: f64 = shared.iter().map(|&(o, a)| o.abs_diff(a) as f64).sum();
    Ok(total / shared.len() as f64)
}

/// Root of the mean squared position error over shared items.
pub fn root_mean_square_error<T: Ord>(pair: &RankedPair<T>) -> Result<f64> {
    let shared = pair.shared_positions();
    if shared.is_empty() {
        return Err(Error::NoSharedItems);
    }
    let total: f64 = shared
        .iter()
        .map(|&(y, t)| {
            let d = y.abs_diff(t) as f64;
            d * d
        })
        .sum();
    Ok(libm::sqrt(total / shared.len() as f64))
}

/// `1 / r` where `r` is the predicted position of the truth's first item;
/// 0 when that item was not predicted at all.
pub fn reciprocal_rank<T: Ord>(pair: &RankedPair<T>) -> Result<f64> {
    let first = pair.truth.first().ok_or(Error::EmptyTruth)?;
    Ok(pair
        .predicted
        .iter()
        .position(|x| x == first)
        .map_or(0.0, |i| 1.0 / (i + 1) as f64))
}

pub fn mean_reciprocal_rank(reciprocal_ranks: &[f64]) -> Result<f64> {
    mean(reciprocal_ranks, "mean reciprocal rank")
}

/// Modified Spearman coefficient of a partial list against the full list
/// `1..=m`:
///
/// ```text
/// rs' = 1 - sum_i (i - v_i)^2 / (m * (max_j v_j)^2 - m)
/// ```
pub fn modified_spearman(full_length: usize, partial: &[usize]) -> Result<f64> {
    if partial.len() != full_length {
        return Err(Error::LengthMismatch {
            expected: full_length,
            found: partial.len(),
        });
    }
    if let Some(index) = partial.iter().position(|&v| v == 0) {
        return Err(Error::ZeroSpearmanPosition { index });
    }
    let max = partial.iter().copied().max().unwrap_or(0);
    if full_length < 2 || max < 2 {
        return Err(Error::DegenerateSpearman {
            m: full_length,
            max,
        });
    }
    let numerator: f64 = partial
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let d = (i + 1).abs_diff(v) as f64;
            d * d
        })
        .sum();
    let max = max as f64;
    Ok(1.0 - numerator / (full_length as f64 * (max * max - 1.0)))
}

/// Predicted position of each truth item, in truth order. Items the
/// prediction misses are placed just past its end (`|predicted| + 1`).
pub fn spearman_positions<T: Ord>(pair: &RankedPair<T>) -> Vec<usize> {
    let pred = pair.predicted_positions();
    let missing = pair.predicted.len() + 1;
    pair.truth
        .iter()
        .map(|x| pred.get(x).copied().unwrap_or(missing))
        .collect()
}

/// The eight measures, in reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Metric {
    PrecisionAtK,
    FprAtK,
    FnrAtK,
    Map,
    Mae,
    Mrr,
    Rmse,
    Msrcc,
}

impl Metric {
    pub const ALL: [Metric; 8] = [
        Metric::PrecisionAtK,
        Metric::FprAtK,
        Metric::FnrAtK,
        Metric::Map,
        Metric::Mae,
        Metric::Mrr,
        Metric::Rmse,
        Metric::Msrcc,
    ];

    /// Short machine name, also used as a JSON key.
    pub fn key(self) -> &'static str {
        match self {
            Metric::PrecisionAtK => "p_at_k",
            Metric::FprAtK => "fpr_at_k",
            Metric::FnrAtK => "fnr_at_k",
            Metric::Map => "map",
            Metric::Mae => "mae",
            Metric::Mrr => "mrr",
            Metric::Rmse => "rmse",
            Metric::Msrcc => "msrcc",
        }
    }

    /// Higher-is-better measures.
    pub fn is_veracity(self) -> bool {
        matches!(
            self,
            Metric::PrecisionAtK | Metric::Map | Metric::Mrr | Metric::Msrcc
        )
    }

    /// Percent improvement of `proposed` over `baseline`, oriented so that a
    /// positive value always means `proposed` is better. Equal values give 0;
    /// a zero baseline with a different proposed value has no defined ratio.
    pub fn improvement(self, proposed: f64, baseline: f64) -> Option<f64> {
        if proposed == baseline {
            return Some(0.0);
        }
        if baseline == 0.0 {
            return None;
        }
        let gain = if self.is_veracity() {
            proposed - baseline
        } else {
            baseline - proposed
        };
        Some(gain / baseline * 100.0)
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Metric::PrecisionAtK => "P@k",
            Metric::FprAtK => "FPR@k",
            Metric::FnrAtK => "FNR@k",
            Metric::Map => "MAP",
            Metric::Mae => "MAE",
            Metric::Mrr => "MRR",
            Metric::Rmse => "RMSE",
            Metric::Msrcc => "MSRCC",
        })
    }
}

/// Every measure for one (course, method) pair. For a single course MAP
/// equals P@k and MRR equals the reciprocal rank.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationReport {
    pub course: String,
    pub method: String,
    pub k: usize,
    pub p_at_k: f64,
    pub fpr_at_k: f64,
    pub fnr_at_k: f64,
    pub mae: f64,
    pub rmse: f64,
    pub rr: f64,
    pub msrcc: f64,
}

impl EvaluationReport {
    pub fn labelled(mut self, course: impl Into<String>, method: impl Into<String>) -> Self {
        self.course = course.into();
        self.method = method.into();
        self
    }

    pub fn get(&self, metric: Metric) -> f64 {
        match metric {
            Metric::PrecisionAtK | Metric::Map => self.p_at_k,
            Metric::FprAtK => self.fpr_at_k,
            Metric::FnrAtK => self.fnr_at_k,
            Metric::Mae => self.mae,
            Metric::Mrr => self.rr,
            Metric::Rmse => self.rmse,
            Metric::Msrcc => self.msrcc,
        }
    }
}

/// Computes every measure for one pair. MSRCC compares the truth order
/// (`1..=|truth|`) with the predicted positions of the truth items.
pub fn evaluate<T: Ord>(pair: &RankedPair<T>, k: usize) -> Result<EvaluationReport> {
    let positions = spearman_positions(pair);
    Ok(EvaluationReport {
        course: String::new(),
        method: String::new(),
        k,
        p_at_k: precision_at_k(pair, k)?,
        fpr_at_k: fpr_at_k(pair, k)?,
        fnr_at_k: fnr_at_k(pair, k)?,
        mae: mean_absolute_error(pair)?,
        rmse: root_mean_square_error(pair)?,
        rr: reciprocal_rank(pair)?,
        msrcc: modified_spearman(positions.len(), &positions)?,
    })
}

/// Per-method means over several courses: MAP is the mean P@k, MRR the mean
/// reciprocal rank, every other measure its plain mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricSummary {
    values: [f64; 8],
}

impl MetricSummary {
    pub fn from_reports(reports: &[EvaluationReport]) -> Result<Self> {
        let collect = |m: Metric| reports.iter().map(|r| r.get(m)).collect::<Vec<_>>();
        let mut values = [0.0; 8];
        for (slot, metric) in values.iter_mut().zip(Metric::ALL) {
            let column = collect(metric);
            *slot = match metric {
                Metric::Map => mean_average_precision(&column)?,
                Metric::Mrr => mean_reciprocal_rank(&column)?,
                _ => mean(&column, "metric summary")?,
            };
        }
        Ok(Self { values })
    }

    pub fn get(&self, metric: Metric) -> f64 {
        self.values[metric as usize]
    }
}
