use std::fmt;
use std::str::FromStr;

use owa_rank_core::aggregation::{AggregationMethod, PasConfig};
use owa_rank_core::weighting::Quantifier;

use crate::error::AppError;

/// An aggregation method together with the positional scoring it runs on.
#[derive(Debug, Clone, PartialEq)]
pub struct MethodSpec {
    pub method: AggregationMethod,
    pub pas: PasConfig,
}

impl MethodSpec {
    pub fn new(method: AggregationMethod) -> Self {
        Self {
            method,
            pas: PasConfig::default(),
        }
    }

    pub fn with_pas(mut self, pas: PasConfig) -> Self {
        self.pas = pas;
        self
    }

    pub fn label(&self) -> String {
        self.method.label()
    }

    /// PAS plus the four OWA variants compared in the evaluation protocol.
    pub fn standard_roster() -> Vec<MethodSpec> {
        [
            AggregationMethod::Pas,
            AggregationMethod::Quantifier(Quantifier::at_least_half()),
            AggregationMethod::Quantifier(Quantifier::as_many_as_possible()),
            AggregationMethod::Quantifier(Quantifier::most()),
            AggregationMethod::MostPreferredFirst,
        ]
        .into_iter()
        .map(MethodSpec::new)
        .collect()
    }
}

impl fmt::Display for MethodSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.method.fmt(f)
    }
}

/// Parses `a=<x>,b=<y>`.
pub fn parse_custom_quantifier(text: &str) -> Result<Quantifier, AppError> {
    let bad = || AppError::Usage(format!("expected a=<x>,b=<y>, got {text:?}"));
    let (mut a, mut b) = (None, None);
    for part in text.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(bad)?;
        let value: f64 = value.trim().parse().map_err(|_| bad())?;
        match key.trim() {
            "a" => a = Some(value),
            "b" => b = Some(value),
            _ => return Err(bad()),
        }
    }
    let (a, b) = (a.ok_or_else(bad)?, b.ok_or_else(bad)?);
    Quantifier::new("custom", a, b).map_err(|e| AppError::Usage(e.to_string()))
}

/// Parses a method token: `pas`, `mpf` (or `most-preferred-first`),
/// `quantifier:<preset>` or `quantifier:a=<x>,b=<y>`.
impl FromStr for MethodSpec {
    type Err = AppError;

    fn from_str(token: &str) -> Result<Self, AppError> {
        let method = match token {
            "pas" => AggregationMethod::Pas,
            "mpf" | "most-preferred-first" => AggregationMethod::MostPreferredFirst,
            _ => {
                let rest = token.strip_prefix("quantifier:").ok_or_else(|| {
                    AppError::Usage(format!(
                        "unknown method {token:?}; expected pas, mpf, quantifier:<most|at-least-half|as-many-as-possible> or quantifier:a=<x>,b=<y>"
                    ))
                })?;
                let q = match Quantifier::preset_by_name(rest) {
                    Some(q) => q,
                    None => parse_custom_quantifier(rest)?,
                };
                AggregationMethod::Quantifier(q)
            }
        };
        Ok(MethodSpec::new(method))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokens() {
        assert_eq!(
            "pas".parse::<MethodSpec>().unwrap().method,
            AggregationMethod::Pas
        );
        assert_eq!(
            "most-preferred-first"
                .parse::<MethodSpec>()
                .unwrap()
                .label(),
            "mpf"
        );
        assert_eq!(
            "quantifier:most".parse::<MethodSpec>().unwrap().method,
            AggregationMethod::Quantifier(Quantifier::most())
        );
        let custom: MethodSpec = "quantifier:a=0.2,b=0.7".parse().unwrap();
        assert_eq!(custom.label(), "quantifier:a=0.2,b=0.7");
    }

    #[test]
    fn bad_tokens() {
        for bad in [
            "owa",
            "quantifier:",
            "quantifier:some",
            "quantifier:a=0.5,b=0.5",
            "quantifier:a=x,b=1",
        ] {
            let err = bad.parse::<MethodSpec>().unwrap_err();
            assert!(matches!(err, AppError::Usage(_)), "{bad}");
        }
    }

    #[test]
    fn standard_roster_labels() {
        let labels: Vec<String> = MethodSpec::standard_roster()
            .iter()
            .map(|m| m.label())
            .collect();
        assert_eq!(
            labels,
            [
                "pas",
                "quantifier:at-least-half",
                "quantifier:as-many-as-possible",
                "quantifier:most",
                "mpf"
            ]
        );
    }
}
