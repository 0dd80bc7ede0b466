//! JSON and CSV encodings of datasets, ground truths, rankings and reports.
//!
//! Dataset JSON:
//!
//! ```json
//! {"roster": ["U1", "U2"], "courses": [{"name": "c", "rankings": {"U1": ["DS1"], "U2": ["DS2", "DS3"]}}]}
//! ```
//!
//! Dataset CSV has the header `course,ranker,position,item`; positions are
//! 1-based and rows may come in any order.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use indexmap::IndexMap;
use owa_rank_core::aggregation::{AggregatedRanking, RankedEntry};
use owa_rank_core::dataset::{CourseRanking, GroundTruth, ItemId, RankerRoster, RankingDataset};
use owa_rank_core::metrics::{EvaluationReport, Metric};
use owa_rank_core::natural_cmp;
use serde::{Deserialize, Serialize};

use crate::error::{AppError, Result};

#[derive(Serialize, Deserialize)]
struct DatasetDoc {
    roster: Vec<String>,
    courses: Vec<CourseDoc>,
}

#[derive(Serialize, Deserialize)]
struct CourseDoc {
    name: String,
    #[serde(default)]
    rankings: IndexMap<String, Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct TruthDoc {
    course: String,
    ranking: Vec<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum TruthFile {
    One(TruthDoc),
    Many(Vec<TruthDoc>),
}

#[derive(Serialize, Deserialize)]
struct RankingDoc {
    course: String,
    method: String,
    entries: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
struct EntryDoc {
    item: String,
    score: f64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RankingFile {
    One(RankingDoc),
    Many(Vec<RankingDoc>),
}

#[derive(Deserialize)]
struct CsvRow {
    course: String,
    ranker: String,
    position: usize,
    item: String,
}

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| AppError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| AppError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("report types always serialize");
    out.push('\n');
    out
}

pub fn parse_dataset_json(source: &str, text: &str) -> Result<RankingDataset> {
    let doc: DatasetDoc = serde_json::from_str(text).map_err(|e| AppError::parse(source, e))?;
    Ok(RankingDataset {
        roster: RankerRoster::new(doc.roster),
        courses: doc
            .courses
            .into_iter()
            .map(|c| {
                c.rankings
                    .into_iter()
                    .fold(CourseRanking::new(c.name), |course, (ranker, items)| {
                        course.with_list(ranker, items)
                    })
            })
            .collect(),
    })
}

/// Rankings are written in roster order, then any rankers outside the roster.
pub fn dataset_to_json(dataset: &RankingDataset) -> String {
    let doc = DatasetDoc {
        roster: dataset
            .roster
            .rankers
            .iter()
            .map(|r| r.to_string())
            .collect(),
        courses: dataset
            .courses
            .iter()
            .map(|c| CourseDoc {
                name: c.course.clone(),
                rankings: ordered_lists(c, &dataset.roster)
                    .map(|(r, items)| {
                        (r.to_string(), items.iter().map(|i| i.to_string()).collect())
                    })
                    .collect(),
            })
            .collect(),
    };
    to_json(&doc)
}

fn ordered_lists<'a>(
    course: &'a CourseRanking,
    roster: &'a RankerRoster,
) -> impl Iterator<Item = (&'a str, &'a [ItemId])> + 'a {
    let listed = roster
        .rankers
        .iter()
        .map(|r| (r.as_str(), course.list(r.as_str())))
        .filter(|(_, items)| !items.is_empty());
    let extra = course
        .lists
        .iter()
        .filter(|(r, _)| !roster.contains(r.as_str()))
        .map(|(r, items)| (r.as_str(), items.as_slice()));
    listed.chain(extra)
}

/// Parses the `course,ranker,position,item` CSV form. Courses keep their
/// order of first appearance. Without an explicit roster the rankers are
/// ordered naturally (`U2` before `U10`).
pub fn parse_dataset_csv(
    source: &str,
    text: &str,
    roster: Option<RankerRoster>,
) -> Result<RankingDataset> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut course_order: Vec<String> = Vec::new();
    let mut cells: BTreeMap<(String, String), BTreeMap<usize, String>> = BTreeMap::new();
    for (line, row) in reader.deserialize::<CsvRow>().enumerate() {
        let row = row.map_err(|e| AppError::parse(source, e))?;
        let at = || format!("row {}", line + 1);
        if row.position == 0 {
            return Err(AppError::parse(
                source,
                format!("{}: positions are 1-based", at()),
            ));
        }
        if !course_order.contains(&row.course) {
            course_order.push(row.course.clone());
        }
        let slot = cells
            .entry((row.course.clone(), row.ranker.clone()))
            .or_default();
        if slot.insert(row.position, row.item).is_some() {
            return Err(AppError::parse(
                source,
                format!(
                    "{}: duplicate row for course {:?}, ranker {}, position {}",
                    at(),
                    row.course,
                    row.ranker,
                    row.position
                ),
            ));
        }
    }

    let roster = roster.unwrap_or_else(|| {
        let mut rankers: Vec<&str> = cells.keys().map(|(_, r)| r.as_str()).collect();
        rankers.sort_by(|a, b| natural_cmp(a, b));
        rankers.dedup();
        RankerRoster::new(rankers)
    });

    let mut courses: Vec<CourseRanking> = course_order.iter().map(CourseRanking::new).collect();
    for ((course, ranker), positions) in cells {
        if let Some((gap, _)) = positions.keys().enumerate().find(|(i, p)| **p != i + 1) {
            return Err(AppError::parse(
                source,
                format!(
                    "course {course:?}, ranker {ranker}: position {} is missing",
                    gap + 1
                ),
            ));
        }
        let idx = course_order
            .iter()
            .position(|c| *c == course)
            .expect("course was recorded");
        courses[idx].set_list(ranker, positions.into_values());
    }
    Ok(RankingDataset { roster, courses })
}

pub fn dataset_to_csv(dataset: &RankingDataset) -> String {
    let mut out = String::from("course,ranker,position,item\n");
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    for course in &dataset.courses {
        for (ranker, items) in ordered_lists(course, &dataset.roster) {
            for (i, item) in items.iter().enumerate() {
                let position = (i + 1).to_string();
                writer
                    .write_record([course.course.as_str(), ranker, &position, item.as_str()])
                    .expect("writing to memory");
            }
        }
    }
    let body = writer.into_inner().expect("writing to memory");
    out.push_str(std::str::from_utf8(&body).expect("csv of utf-8 fields"));
    out
}

/// Loads a dataset, choosing CSV for `.csv` files and JSON otherwise.
pub fn load_dataset(path: &Path, roster: Option<RankerRoster>) -> Result<RankingDataset> {
    let text = read_file(path)?;
    let source = path.display().to_string();
    let is_csv = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    if is_csv {
        parse_dataset_csv(&source, &text, roster)
    } else {
        let mut ds = parse_dataset_json(&source, &text)?;
        if let Some(r) = roster {
            ds.roster = r;
        }
        Ok(ds)
    }
}

/// Accepts a single ground-truth object or an array of them.
pub fn parse_truths(source: &str, text: &str) -> Result<Vec<GroundTruth>> {
    let file: TruthFile = serde_json::from_str(text).map_err(|e| AppError::parse(source, e))?;
    let docs = match file {
        TruthFile::One(t) => vec![t],
        TruthFile::Many(ts) => ts,
    };
    Ok(docs
        .into_iter()
        .map(|t| GroundTruth::new(t.course, t.ranking))
        .collect())
}

pub fn truth_to_json(truth: &GroundTruth) -> String {
    to_json(&TruthDoc {
        course: truth.course.clone(),
        ranking: truth.ranking.iter().map(|i| i.to_string()).collect(),
    })
}

fn ranking_doc(r: &AggregatedRanking) -> RankingDoc {
    RankingDoc {
        course: r.course.clone(),
        method: r.method.clone(),
        entries: r
            .entries
            .iter()
            .map(|e| EntryDoc {
                item: e.item.to_string(),
                score: e.score,
            })
            .collect(),
    }
}

fn from_ranking_doc(d: RankingDoc) -> AggregatedRanking {
    AggregatedRanking {
        course: d.course,
        method: d.method,
        entries: d
            .entries
            .into_iter()
            .map(|e| RankedEntry {
                item: e.item.into(),
                score: e.score,
            })
            .collect(),
    }
}

pub fn ranking_to_json(r: &AggregatedRanking) -> String {
    to_json(&ranking_doc(r))
}

pub fn rankings_to_json(rs: &[AggregatedRanking]) -> String {
    to_json(&rs.iter().map(ranking_doc).collect::<Vec<_>>())
}

/// Accepts a single ranking object or an array of them.
pub fn parse_rankings(source: &str, text: &str) -> Result<Vec<AggregatedRanking>> {
    let file: RankingFile = serde_json::from_str(text).map_err(|e| AppError::parse(source, e))?;
    Ok(match file {
        RankingFile::One(d) => vec![from_ranking_doc(d)],
        RankingFile::Many(ds) => ds.into_iter().map(from_ranking_doc).collect(),
    })
}

/// Metric values keyed by [`Metric::key`], in reporting order.
pub(crate) type MetricMap = IndexMap<&'static str, Option<f64>>;

pub(crate) fn metric_map(mut value: impl FnMut(Metric) -> Option<f64>) -> MetricMap {
    Metric::ALL.iter().map(|&m| (m.key(), value(m))).collect()
}

#[derive(Serialize)]
pub(crate) struct ReportDoc<'a> {
    pub course: &'a str,
    pub method: &'a str,
    pub k: usize,
    #[serde(flatten)]
    pub metrics: MetricMap,
}

impl<'a> From<&'a EvaluationReport> for ReportDoc<'a> {
    fn from(r: &'a EvaluationReport) -> Self {
        ReportDoc {
            course: &r.course,
            method: &r.method,
            k: r.k,
            metrics: metric_map(|m| Some(r.get(m))),
        }
    }
}

pub fn report_to_json(r: &EvaluationReport) -> String {
    to_json(&ReportDoc::from(r))
}

/// A single report as an object, several as an array.
pub fn reports_to_json(reports: &[EvaluationReport]) -> String {
    match reports {
        [one] => report_to_json(one),
        many => to_json(&many.iter().map(ReportDoc::from).collect::<Vec<_>>()),
    }
}

pub(crate) fn json_string<T: Serialize>(value: &T) -> String {
    to_json(value)
}
