//! Positional scoring, OWA fusion and consensus ranking.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::dataset::{CourseRanking, ItemId, RankerId, RankerRoster};
use crate::error::{Error, Result};
use crate::natural::natural_cmp;
use crate::weighting::{
    most_preferred_first_weights, quantifier_weights, Quantifier, WeightVector,
};

/// Positional score settings: `score = max(floor, 1 - (position - 1) * step)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PasConfig {
    step: f64,
    floor: f64,
}

impl PasConfig {
    pub const DEFAULT_STEP: f64 = 1.0 / 16.0;

    pub fn new(step: f64, floor: f64) -> Result<Self> {
        if !(step > 0.0 && step <= 1.0) || !(0.0..1.0).contains(&floor) {
            return Err(Error::InvalidPasConfig { step, floor });
        }
        Ok(Self { step, floor })
    }

    pub fn with_step(step: f64) -> Result<Self> {
        Self::new(step, 0.0)
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn floor(&self) -> f64 {
        self.floor
    }

    fn score(&self, position: usize) -> f64 {
        let raw = 1.0 - (position - 1) as f64 * self.step;
        raw.max(self.floor)
    }
}

impl Default for PasConfig {
    fn default() -> Self {
        Self {
            step: Self::DEFAULT_STEP,
            floor: 0.0,
        }
    }
}

pub fn pas_score(position: usize, config: &PasConfig) -> Result<f64> {
    if position == 0 {
        return Err(Error::ZeroPosition);
    }
    Ok(config.score(position))
}

/// Item-by-ranker grid of positional scores; unranked cells hold 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoreMatrix {
    pub course: String,
    pub items: Vec<ItemId>,
    pub rankers: Vec<RankerId>,
    scores: Vec<f64>,
}

impl ScoreMatrix {
    pub fn row(&self, item: usize) -> &[f64] {
        let n = self.rankers.len();
        &self.scores[item * n..(item + 1) * n]
    }

    pub fn rows(&self) -> impl Iterator<Item = (&ItemId, &[f64])> + '_ {
        self.items
            .iter()
            .enumerate()
            .map(move |(i, item)| (item, self.row(i)))
    }

    pub fn get(&self, item: &str, ranker: &str) -> Option<f64> {
        let i = self.items.iter().position(|x| x.as_str() == item)?;
        let k = self.rankers.iter().position(|x| x.as_str() == ranker)?;
        Some(self.row(i)[k])
    }
}

/// Scores every distinct item of `course` under every roster ranker.
/// Lists of rankers outside the roster are ignored.
pub fn build_score_matrix(
    course: &CourseRanking,
    roster: &RankerRoster,
    config: &PasConfig,
) -> ScoreMatrix {
    let items = course.distinct_items(roster);
    let n = roster.len();
    let mut scores = alloc::vec![0.0; items.len() * n];
    for (k, ranker) in roster.rankers.iter().enumerate() {
        for (pos, item) in course.list(ranker.as_str()).iter().enumerate() {
            if let Some(i) = items.iter().position(|x| x == item) {
                scores[i * n + k] = config.score(pos + 1);
            }
        }
    }
    ScoreMatrix {
        course: course.course.clone(),
        items,
        rankers: roster.rankers.clone(),
        scores,
    }
}

/// Ordered weighted average: the row is sorted descending and the `k`-th
/// largest value is multiplied by `W_k`. Zeros take part in the sort.
pub fn owa_aggregate(row: &[f64], weights: &WeightVector) -> Result<f64> {
    if row.len() != weights.len() {
        return Err(Error::LengthMismatch {
            expected: weights.len(),
            found: row.len(),
        });
    }
    let mut sorted = row.to_vec();
    sorted.sort_unstable_by(|a, b| b.total_cmp(a));
    Ok(sorted
        .iter()
        .zip(weights.as_slice())
        .map(|(d, w)| d * w)
        .sum())
}

/// Unweighted positional aggregation: the plain sum of the row.
pub fn pas_aggregate(row: &[f64]) -> f64 {
    row.iter().sum()
}

/// The fusion rules a consensus ranking can be built with.
#[derive(Debug, Clone, PartialEq)]
pub enum AggregationMethod {
    /// Unweighted positional sum.
    Pas,
    /// OWA with most-preferred-first weights over the roster size.
    MostPreferredFirst,
    /// OWA with quantifier-guided weights over the roster size.
    Quantifier(Quantifier),
}

impl AggregationMethod {
    /// Stable token naming the method, e.g. `mpf` or `quantifier:most`.
    /// Custom quantifiers render as `quantifier:a=<a>,b=<b>`.
    pub fn label(&self) -> String {
        match self {
            AggregationMethod::Pas => "pas".to_string(),
            AggregationMethod::MostPreferredFirst => "mpf".to_string(),
            AggregationMethod::Quantifier(q) => {
                if Quantifier::preset_by_name(q.name()).as_ref() == Some(q) {
                    alloc::format!("quantifier:{}", q.name())
                } else {
                    alloc::format!("quantifier:a={},b={}", q.a(), q.b())
                }
            }
        }
    }

    /// OWA weights for `rankers` sources, `None` for the unweighted sum.
    pub fn weights(&self, rankers: usize) -> Result<Option<WeightVector>> {
        match self {
            AggregationMethod::Pas => Ok(None),
            AggregationMethod::MostPreferredFirst => {
                most_preferred_first_weights(rankers).map(Some)
            }
            AggregationMethod::Quantifier(q) => quantifier_weights(q, rankers).map(Some),
        }
    }
}

impl fmt::Display for AggregationMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedEntry {
    pub item: ItemId,
    pub score: f64,
}

/// Consensus ranking: entries by descending score, ties by natural item order.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregatedRanking {
    pub course: String,
    pub method: String,
    pub entries: Vec<RankedEntry>,
}

impl AggregatedRanking {
    pub fn items(&self) -> Vec<ItemId> {
        self.entries.iter().map(|e| e.item.clone()).collect()
    }

    pub fn score_of(&self, item: &str) -> Option<f64> {
        self.entries
            .iter()
            .find(|e| e.item.as_str() == item)
            .map(|e| e.score)
    }
}

pub fn rank_items(matrix: &ScoreMatrix, method: &AggregationMethod) -> Result<AggregatedRanking> {
    let label = method.label();
    match method.weights(matrix.rankers.len())? {
        Some(w) => rank_with(matrix, label, |row| owa_aggregate(row, &w)),
        None => rank_with(matrix, label, |row| Ok(pas_aggregate(row))),
    }
}

/// Ranks with explicit OWA weights; their length must match the ranker count.
pub fn rank_items_with_weights(
    matrix: &ScoreMatrix,
    weights: &WeightVector,
) -> Result<AggregatedRanking> {
    rank_with(matrix, weights.provenance().to_string(), |row| {
        owa_aggregate(row, weights)
    })
}

fn rank_with<F>(matrix: &ScoreMatrix, method: String, mut score: F) -> Result<AggregatedRanking>
where
    F: FnMut(&[f64]) -> Result<f64>,
{
    let mut entries = matrix
        .rows()
        .map(|(item, row)| {
            Ok(RankedEntry {
                item: item.clone(),
                score: score(row)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    sort_entries(&mut entries);
    Ok(AggregatedRanking {
        course: matrix.course.clone(),
        method,
        entries,
    })
}

fn sort_entries(entries: &mut [RankedEntry]) {
    entries.sort_by(|x, y| match y.score.total_cmp(&x.score) {
        Ordering::Equal => natural_cmp(x.item.as_str(), y.item.as_str()),
        ord => ord,
    });
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use alloc::vec;

    fn table_matrix() -> ScoreMatrix {
        let ds = fixtures::data_structures();
        build_score_matrix(&ds.courses[0], &ds.roster, &PasConfig::default())
    }

    #[test]
    fn pas_scores() {
        let c = PasConfig::default();
        assert_eq!(pas_score(1, &c).unwrap(), 1.0);
        assert_eq!(pas_score(2, &c).unwrap(), 0.9375);
        assert_eq!(pas_score(5, &c).unwrap(), 0.75);
        assert_eq!(pas_score(17, &c).unwrap(), 0.0);
        assert_eq!(pas_score(40, &c).unwrap(), 0.0);
        assert_eq!(pas_score(0, &c), Err(Error::ZeroPosition));
        let floored = PasConfig::new(0.25, 0.1).unwrap();
        assert_eq!(pas_score(5, &floored).unwrap(), 0.1);
    }

    #[test]
    fn pas_config_bounds() {
        assert!(PasConfig::new(0.0, 0.0).is_err());
        assert!(PasConfig::new(1.5, 0.0).is_err());
        assert!(PasConfig::new(0.1, 1.0).is_err());
        assert!(PasConfig::new(0.1, -0.1).is_err());
        assert!(PasConfig::new(f64::NAN, 0.0).is_err());
        assert!(PasConfig::new(1.0, 0.0).is_ok());
    }

    #[test]
    fn table_matrix_cells() {
        let m = table_matrix();
        assert_eq!(m.items.len(), 16);
        assert_eq!(m.row(0), &[1.0, 0.0, 0.0, 0.9375, 0.0, 0.0, 0.0]);
        assert_eq!(m.get("DS8", "U3"), Some(0.75));
        assert_eq!(m.get("DS8", "U5"), Some(0.9375));
        assert_eq!(m.get("DS3", "U5"), Some(0.8125));
        assert_eq!(m.get("DS16", "U1"), Some(0.0));
    }

    #[test]
    fn empty_course_gives_empty_matrix() {
        let m = build_score_matrix(
            &CourseRanking::new("empty"),
            &fixtures::roster(),
            &PasConfig::default(),
        );
        assert!(m.items.is_empty());
        let r = rank_items(&m, &AggregationMethod::MostPreferredFirst).unwrap();
        assert!(r.entries.is_empty());
    }

    #[test]
    fn ds1_worked_example() {
        let w = most_preferred_first_weights(7).unwrap();
        let v = owa_aggregate(&[1.0, 0.0, 0.0, 0.9375, 0.0, 0.0, 0.0], &w).unwrap();
        assert!((v - 0.450813).abs() < 1e-4, "{v}");
        let v = owa_aggregate(&[0.0, 0.0, 0.0, 1.0, 0.0, 1.0, 0.0], &w).unwrap();
        assert!((v - 0.46428).abs() < 1e-3, "{v}");
        assert_eq!(owa_aggregate(&[0.0; 7], &w).unwrap(), 0.0);
    }

    #[test]
    fn owa_length_mismatch() {
        let w = most_preferred_first_weights(3).unwrap();
        assert_eq!(
            owa_aggregate(&[1.0, 0.5], &w),
            Err(Error::LengthMismatch {
                expected: 3,
                found: 2
            })
        );
        let m = table_matrix();
        assert!(rank_items_with_weights(&m, &w).is_err());
    }

    #[test]
    fn pas_sums() {
        assert_eq!(
            pas_aggregate(&[1.0, 0.0, 0.0, 0.9375, 0.0, 0.0, 0.0]),
            1.9375
        );
        assert_eq!(pas_aggregate(&[0.0; 4]), 0.0);
        assert_eq!(pas_aggregate(&[0.75]), 0.75);
    }

    #[test]
    fn table_ranking_head_and_ties() {
        let r = rank_items(&table_matrix(), &AggregationMethod::MostPreferredFirst).unwrap();
        let ids: Vec<&str> = r.entries.iter().map(|e| e.item.as_str()).collect();
        assert_eq!(&ids[..5], ["DS9", "DS1", "DS3", "DS10", "DS8"]);
        // DS2 lands in the 0.25 group because its lone score is sorted to the front
        assert_eq!(&ids[5..9], ["DS2", "DS4", "DS12", "DS15"]);
        assert_eq!(r.method, "mpf");
        assert_eq!(r.course, fixtures::DATA_STRUCTURES_COURSE);
    }

    #[test]
    fn single_cell() {
        let roster = RankerRoster::new(["U1"]);
        let c = CourseRanking::new("c").with_list("U1", ["X"]);
        let m = build_score_matrix(&c, &roster, &PasConfig::default());
        let r = rank_items(&m, &AggregationMethod::MostPreferredFirst).unwrap();
        assert_eq!(
            r.entries,
            vec![RankedEntry {
                item: "X".into(),
                score: 1.0
            }]
        );
    }

    #[test]
    fn labels() {
        assert_eq!(AggregationMethod::Pas.label(), "pas");
        assert_eq!(
            AggregationMethod::Quantifier(Quantifier::most()).label(),
            "quantifier:most"
        );
        let custom = Quantifier::new("custom", 0.2, 0.7).unwrap();
        assert_eq!(
            AggregationMethod::Quantifier(custom).label(),
            "quantifier:a=0.2,b=0.7"
        );
    }

    #[test]
    fn pas_ranking_uses_sums() {
        let r = rank_items(&table_matrix(), &AggregationMethod::Pas).unwrap();
        assert_eq!(r.entries[0].item.as_str(), "DS9");
        assert_eq!(r.entries[0].score, 2.0);
        assert_eq!(r.entries[1].item.as_str(), "DS1");
        assert_eq!(r.entries[1].score, 1.9375);
    }
}
