//! Markdown tables for terminal output. Numbers use six decimals.

use std::fmt::Write;

use owa_rank_core::aggregation::AggregatedRanking;
use owa_rank_core::metrics::{EvaluationReport, Metric};
use owa_rank_core::weighting::WeightVector;

use crate::pipeline::ComparisonReport;

fn header(k: usize, metric: Metric) -> String {
    metric.to_string().replace("@k", &format!("@{k}"))
}

fn num(v: f64) -> String {
    format!("{v:.6}")
}

pub fn weights(w: &WeightVector) -> String {
    let mut out = format!("Weights ({})\n\n", w.provenance());
    let exact = w.rational();
    out.push_str(if exact.is_some() {
        "| k | W_k | exact |\n|---|-----|-------|\n"
    } else {
        "| k | W_k |\n|---|-----|\n"
    });
    for (i, v) in w.as_slice().iter().enumerate() {
        match exact {
            Some(r) => writeln!(out, "| {} | {} | {} |", i + 1, num(*v), r[i]),
            None => writeln!(out, "| {} | {} |", i + 1, num(*v)),
        }
        .unwrap();
    }
    out
}

pub fn ranking(r: &AggregatedRanking) -> String {
    let mut out = format!(
        "## {} ({})\n\n| Rank | Item | Score |\n|------|------|-------|\n",
        r.course, r.method
    );
    for (i, e) in r.entries.iter().enumerate() {
        writeln!(out, "| {} | {} | {} |", i + 1, e.item, num(e.score)).unwrap();
    }
    out
}

pub fn report(r: &EvaluationReport) -> String {
    let mut out = format!(
        "## {} ({}), k = {}\n\n| Metric | Value |\n|--------|-------|\n",
        r.course, r.method, r.k
    );
    for m in Metric::ALL {
        writeln!(out, "| {} | {} |", header(r.k, m), num(r.get(m))).unwrap();
    }
    out
}

pub fn comparison(c: &ComparisonReport) -> String {
    let metric_cols: Vec<String> = Metric::ALL.iter().map(|&m| header(c.k, m)).collect();
    let rule = |n: usize| format!("|{}\n", "---|".repeat(n));
    let mut out = String::new();

    out.push_str("## Per-course results\n\n");
    writeln!(out, "| Method | Course | {} |", metric_cols.join(" | ")).unwrap();
    out.push_str(&rule(2 + metric_cols.len()));
    for r in &c.evaluations {
        let cells: Vec<String> = Metric::ALL.iter().map(|&m| num(r.get(m))).collect();
        writeln!(
            out,
            "| {} | {} | {} |",
            r.method,
            r.course,
            cells.join(" | ")
        )
        .unwrap();
    }

    out.push_str("\n## Method means\n\n");
    writeln!(out, "| Method | {} |", metric_cols.join(" | ")).unwrap();
    out.push_str(&rule(1 + metric_cols.len()));
    for (m, s) in c.methods.iter().zip(&c.summaries) {
        let cells: Vec<String> = Metric::ALL.iter().map(|&x| num(s.get(x))).collect();
        writeln!(out, "| {} | {} |", m, cells.join(" | ")).unwrap();
    }

    let baselines: Vec<usize> = c.baselines().collect();
    writeln!(
        out,
        "\n## Improvement of {} over baselines (%)\n",
        c.proposed
    )
    .unwrap();
    let names: Vec<&str> = baselines.iter().map(|&b| c.methods[b].as_str()).collect();
    writeln!(out, "| Metric | {} |", names.join(" | ")).unwrap();
    out.push_str(&rule(1 + names.len()));
    for m in Metric::ALL {
        let cells: Vec<String> = baselines
            .iter()
            .map(|&b| {
                c.improvement(b, m)
                    .map_or_else(|| "n/a".to_string(), |v| format!("{v:.2}"))
            })
            .collect();
        writeln!(out, "| {} | {} |", header(c.k, m), cells.join(" | ")).unwrap();
    }
    out
}
