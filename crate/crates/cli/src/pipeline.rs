//! Aggregate, evaluate and compare: the steps behind each subcommand.

use owa_rank_core::aggregation::{build_score_matrix, rank_items, AggregatedRanking};
use owa_rank_core::dataset::{GroundTruth, RankingDataset};
use owa_rank_core::metrics::{evaluate, EvaluationReport, Metric, MetricSummary, RankedPair};
use serde::Serialize;

use crate::error::{AppError, Result};
use crate::formats::{json_string, metric_map, MetricMap, ReportDoc};
use crate::method::MethodSpec;

pub fn check_dataset(dataset: &RankingDataset) -> Result<()> {
    let violations = dataset.validate();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(AppError::Validation(
            violations.iter().map(|v| v.to_string()).collect(),
        ))
    }
}

fn check_truths(truths: &[GroundTruth]) -> Result<()> {
    let mut problems: Vec<String> = truths
        .iter()
        .flat_map(|t| t.validate())
        .map(|v| v.to_string())
        .collect();
    for (i, t) in truths.iter().enumerate() {
        if t.ranking.is_empty() {
            problems.push(format!("course {:?}: ground truth is empty", t.course));
        }
        if truths[..i].iter().any(|o| o.course == t.course) {
            problems.push(format!("course {:?}: more than one ground truth", t.course));
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(AppError::Validation(problems))
    }
}

/// One consensus ranking per course, in dataset order.
pub fn aggregate_dataset(
    dataset: &RankingDataset,
    method: &MethodSpec,
) -> Result<Vec<AggregatedRanking>> {
    check_dataset(dataset)?;
    dataset
        .courses
        .iter()
        .map(|course| {
            let matrix = build_score_matrix(course, &dataset.roster, &method.pas);
            Ok(rank_items(&matrix, &method.method)?)
        })
        .collect()
}

/// Scores `predicted` against `truth`; the course names must agree.
pub fn evaluate_ranking(
    predicted: &AggregatedRanking,
    truth: &GroundTruth,
    k: usize,
) -> Result<EvaluationReport> {
    if k == 0 {
        return Err(AppError::Usage("--k must be at least 1".into()));
    }
    if predicted.course != truth.course {
        return Err(AppError::Validation(vec![format!(
            "predicted ranking is for course {:?} but the ground truth is for {:?}",
            predicted.course, truth.course
        )]));
    }
    check_truths(std::slice::from_ref(truth))?;
    let pair = RankedPair::new(predicted.items(), truth.ranking.clone())?;
    Ok(evaluate(&pair, k)?.labelled(&predicted.course, &predicted.method))
}

/// Every method scored on every course that has a ground truth, plus
/// per-method means and the improvement of the proposed method over each
/// other method.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub k: usize,
    pub proposed: String,
    pub methods: Vec<String>,
    pub courses: Vec<String>,
    /// Method-major: all courses of `methods[0]`, then of `methods[1]`, ...
    pub evaluations: Vec<EvaluationReport>,
    pub summaries: Vec<MetricSummary>,
    proposed_index: usize,
}

impl ComparisonReport {
    pub fn summary(&self, method: &str) -> Option<&MetricSummary> {
        let i = self.methods.iter().position(|m| m == method)?;
        Some(&self.summaries[i])
    }

    pub fn evaluation(&self, method: &str, course: &str) -> Option<&EvaluationReport> {
        self.evaluations
            .iter()
            .find(|r| r.method == method && r.course == course)
    }

    /// Indices of the methods the proposed one is compared against.
    pub fn baselines(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.methods.len()).filter(move |&i| i != self.proposed_index)
    }

    /// Percent improvement of the proposed method over `methods[baseline]`;
    /// `None` when the baseline mean is 0 and the proposed one differs.
    pub fn improvement(&self, baseline: usize, metric: Metric) -> Option<f64> {
        let proposed = self.summaries[self.proposed_index].get(metric);
        metric.improvement(proposed, self.summaries[baseline].get(metric))
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct SummaryDoc<'a> {
            method: &'a str,
            #[serde(flatten)]
            metrics: MetricMap,
        }
        #[derive(Serialize)]
        struct ImprovementDoc<'a> {
            baseline: &'a str,
            #[serde(flatten)]
            metrics: MetricMap,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            k: usize,
            proposed: &'a str,
            methods: &'a [String],
            courses: &'a [String],
            evaluations: Vec<ReportDoc<'a>>,
            summary: Vec<SummaryDoc<'a>>,
            improvement_percent: Vec<ImprovementDoc<'a>>,
        }
        json_string(&Doc {
            k: self.k,
            proposed: &self.proposed,
            methods: &self.methods,
            courses: &self.courses,
            evaluations: self.evaluations.iter().map(ReportDoc::from).collect(),
            summary: self
                .methods
                .iter()
                .zip(&self.summaries)
                .map(|(m, s)| SummaryDoc {
                    method: m,
                    metrics: metric_map(|metric| Some(s.get(metric))),
                })
                .collect(),
            improvement_percent: self
                .baselines()
                .map(|b| ImprovementDoc {
                    baseline: &self.methods[b],
                    metrics: metric_map(|metric| self.improvement(b, metric)),
                })
                .collect(),
        })
    }
}

pub fn compare(
    dataset: &RankingDataset,
    truths: &[GroundTruth],
    methods: &[MethodSpec],
    proposed: &str,
    k: usize,
) -> Result<ComparisonReport> {
    if k == 0 {
        return Err(AppError::Usage("--k must be at least 1".into()));
    }
    if methods.len() < 2 {
        return Err(AppError::Usage("compare needs at least two methods".into()));
    }
    let labels: Vec<String> = methods.iter().map(MethodSpec::label).collect();
    let proposed_index = labels.iter().position(|l| l == proposed).ok_or_else(|| {
        AppError::Usage(format!(
            "proposed method {proposed:?} is not among the compared methods ({})",
            labels.join(", ")
        ))
    })?;
    check_dataset(dataset)?;
    check_truths(truths)?;
    let unknown: Vec<String> = truths
        .iter()
        .filter(|t| dataset.course(&t.course).is_none())
        .map(|t| format!("ground truth names unknown course {:?}", t.course))
        .collect();
    if !unknown.is_empty() {
        return Err(AppError::Validation(unknown));
    }
    // dataset order, restricted to courses that can be judged
    let judged: Vec<(&str, &GroundTruth)> = dataset
        .courses
        .iter()
        .filter_map(|c| {
            truths
                .iter()
                .find(|t| t.course == c.course)
                .map(|t| (c.course.as_str(), t))
        })
        .collect();
    if judged.is_empty() {
        return Err(AppError::Validation(vec![
            "no course has a ground truth".into()
        ]));
    }

    let mut evaluations = Vec::with_capacity(methods.len() * judged.len());
    let mut summaries = Vec::with_capacity(methods.len());
    for spec in methods {
        let start = evaluations.len();
        for &(course, truth) in &judged {
            let course = dataset.course(course).expect("judged courses exist");
            let matrix = build_score_matrix(course, &dataset.roster, &spec.pas);
            let ranking = rank_items(&matrix, &spec.method)?;
            evaluations.push(evaluate_ranking(&ranking, truth, k)?);
        }
        summaries.push(MetricSummary::from_reports(&evaluations[start..])?);
    }

    Ok(ComparisonReport {
        k,
        proposed: proposed.to_string(),
        methods: labels,
        courses: judged.iter().map(|(c, _)| c.to_string()).collect(),
        evaluations,
        summaries,
        proposed_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use owa_rank_core::fixtures;

    fn truth() -> GroundTruth {
        GroundTruth::new(
            fixtures::DATA_STRUCTURES_COURSE,
            [
                "DS1", "DS9", "DS3", "DS8", "DS10", "DS4", "DS12", "DS2", "DS5", "DS15", "DS14",
            ],
        )
    }

    #[test]
    fn identical_methods_show_no_improvement() {
        let methods =
            vec![
                MethodSpec::new(owa_rank_core::aggregation::AggregationMethod::MostPreferredFirst);
                2
            ];
        let r = compare(
            &fixtures::data_structures(),
            &[truth()],
            &methods,
            "mpf",
            10,
        )
        .unwrap();
        for b in r.baselines() {
            for m in Metric::ALL {
                assert_eq!(r.improvement(b, m), Some(0.0));
            }
        }
    }

    #[test]
    fn usage_errors() {
        let ds = fixtures::data_structures();
        let five = MethodSpec::standard_roster();
        assert!(matches!(
            compare(&ds, &[truth()], &five, "borda", 10),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(
            compare(&ds, &[truth()], &five[..1], "pas", 10),
            Err(AppError::Usage(_))
        ));
        assert!(matches!(
            compare(&ds, &[truth()], &five, "mpf", 0),
            Err(AppError::Usage(_))
        ));
    }

    #[test]
    fn unknown_truth_course_is_rejected() {
        let ds = fixtures::data_structures();
        let t = GroundTruth::new("Compilers", ["X", "Y"]);
        let err = compare(&ds, &[t], &MethodSpec::standard_roster(), "mpf", 10).unwrap_err();
        assert!(err.to_string().contains("Compilers"));
    }

    #[test]
    fn evaluate_checks_course_names() {
        let ds = fixtures::data_structures();
        let rankings = aggregate_dataset(&ds, &"mpf".parse().unwrap()).unwrap();
        let wrong = GroundTruth::new("Graphics", ["DS1"]);
        assert!(matches!(
            evaluate_ranking(&rankings[0], &wrong, 10),
            Err(AppError::Validation(_))
        ));
        let perfect = GroundTruth::new(fixtures::DATA_STRUCTURES_COURSE, rankings[0].items());
        let r = evaluate_ranking(&rankings[0], &perfect, 10).unwrap();
        assert_eq!(
            (r.p_at_k, r.mae, r.rmse, r.rr, r.msrcc),
            (1.0, 0.0, 0.0, 1.0, 1.0)
        );
    }

    #[test]
    fn aggregation_reports_every_violation() {
        let mut ds = fixtures::data_structures();
        ds.courses[0].set_list("U9", ["DS1"]);
        ds.courses[0].set_list("U1", ["DS1", "DS1"]);
        match aggregate_dataset(&ds, &"mpf".parse().unwrap()) {
            Err(AppError::Validation(v)) => assert_eq!(v.len(), 2),
            other => panic!("{other:?}"),
        }
    }
}
