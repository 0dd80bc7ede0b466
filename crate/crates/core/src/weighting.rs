//! OWA weight vectors.
//!
//! Quantifier-guided weights follow `W_k = Q(k/m) - Q((k-1)/m)` for a
//! relative fuzzy quantifier `Q` with knots `(a, b)`. Most-preferred-first
//! weights follow `W_k = (u + 1 - k) / N` with `N = u(u+1)/2`, so the first
//! (best-ranked) position always carries the largest weight.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Tolerance on `sum(W) - 1` accepted by [`WeightVector::new`].
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-12;

/// Relative linguistic quantifier with membership
///
/// ```text
///        0                 r < a
/// Q(r) = (r - a)/(b - a)   a <= r <= b
///        1                 r > b
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct Quantifier {
    name: String,
    a: f64,
    b: f64,
}

impl Quantifier {
    /// `a == b` is rejected: the middle branch would divide by zero.
    pub fn new(name: impl Into<String>, a: f64, b: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) || !(0.0..=1.0).contains(&b) || a >= b {
            return Err(Error::InvalidQuantifier { a, b });
        }
        Ok(Self {
            name: name.into(),
            a,
            b,
        })
    }

    /// "most": `(0.3, 0.8)`.
    pub fn most() -> Self {
        Self::preset("most", 0.3, 0.8)
    }

    /// "at least half": `(0, 0.5)`.
    pub fn at_least_half() -> Self {
        Self::preset("at-least-half", 0.0, 0.5)
    }

    /// "as many as possible": `(0.5, 1)`.
    pub fn as_many_as_possible() -> Self {
        Self::preset("as-many-as-possible", 0.5, 1.0)
    }

    fn preset(name: &str, a: f64, b: f64) -> Self {
        Self {
            name: name.to_string(),
            a,
            b,
        }
    }

    /// Looks up a preset by its token (`most`, `at-least-half`,
    /// `as-many-as-possible`).
    pub fn preset_by_name(token: &str) -> Option<Self> {
        match token {
            "most" => Some(Self::most()),
            "at-least-half" => Some(Self::at_least_half()),
            "as-many-as-possible" => Some(Self::as_many_as_possible()),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn membership(&self, r: f64) -> Result<f64> {
        quantifier_membership(self, r)
    }
}

/// Normalized OWA weights plus a label naming how they were produced.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
    exact: Option<Vec<Ratio<u64>>>,
    provenance: String,
}

impl WeightVector {
    /// Wraps caller-supplied weights after checking `W_k in [0, 1]` and
    /// `|sum - 1| <= 1e-12`.
    pub fn new(weights: Vec<f64>, provenance: impl Into<String>) -> Result<Self> {
        let sum: f64 = weights.iter().sum();
        let in_range = weights.iter().all(|w| (0.0..=1.0).contains(w));
        let normalized = (sum - 1.0).abs() <= WEIGHT_SUM_TOLERANCE;
        if weights.is_empty() || !in_range || !normalized {
            return Err(Error::UnnormalizedWeights { sum });
        }
        Ok(Self {
            weights,
            exact: None,
            provenance: provenance.into(),
        })
    }

    /// `m` equal weights `1/m`, the arithmetic mean as an OWA operator.
    pub fn uniform(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroCriteria);
        }
        let exact: Vec<Ratio<u64>> = (0..m).map(|_| Ratio::new(1, m as u64)).collect();
        Ok(Self::from_exact(exact, "uniform"))
    }

    fn from_exact(exact: Vec<Ratio<u64>>, provenance: &str) -> Self {
        let weights = exact
            .iter()
            .map(|r| *r.numer() as f64 / *r.denom() as f64)
            .collect();
        Self {
            weights,
            exact: Some(exact),
            provenance: provenance.to_string(),
        }
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    /// Exact rational weights, when the generating rule is rational.
    pub fn rational(&self) -> Option<&[Ratio<u64>]> {
        self.exact.as_deref()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

pub fn quantifier_membership(q: &Quantifier, r: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&r) {
        return Err(Error::MembershipOutOfRange(r));
    }
    Ok(if r < q.a {
        0.0
    } else if r > q.b {
        1.0
    } else {
        (r - q.a) / (q.b - q.a)
    })
}

/// `W_k = Q(k/m) - Q((k-1)/m)` for `k = 1..=m`.
pub fn quantifier_weights(q: &Quantifier, m: usize) -> Result<WeightVector> {
    if m == 0 {
        return Err(Error::ZeroCriteria);
    }
    let q_at = |k: usize| -> f64 {
        // k/m is always inside [0, 1]
        quantifier_membership(q, k as f64 / m as f64).unwrap_or(0.0)
    };
    let mut weights = Vec::with_capacity(m);
    let mut prev = q_at(0);
    for k in 1..=m {
        let cur = q_at(k);
        // Q is monotone, so the difference is never negative beyond rounding
        weights.push((cur - prev).max(0.0));
        prev = cur;
    }
    Ok(WeightVector {
        weights,
        exact: None,
        provenance: q.name.clone(),
    })
}

/// `W_k = (u + 1 - k) / N`, `N = u(u+1)/2`, computed exactly and rounded once.
pub fn most_preferred_first_weights(u: usize) -> Result<WeightVector> {
    if u == 0 {
        return Err(Error::ZeroRankers);
    }
    let u = u as u64;
    let n = u * (u + 1) / 2;
    let exact = (1..=u).map(|k| Ratio::new(u + 1 - k, n)).collect();
    Ok(WeightVector::from_exact(exact, "most-preferred-first"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn membership_knots() {
        let most = Quantifier::most();
        assert_eq!(most.membership(0.3).unwrap(), 0.0);
        assert_eq!(most.membership(0.8).unwrap(), 1.0);
        assert_eq!(Quantifier::at_least_half().membership(0.25).unwrap(), 0.5);
        assert_eq!(most.membership(0.0).unwrap(), 0.0);
        assert_eq!(most.membership(1.0).unwrap(), 1.0);
    }

    #[test]
    fn membership_rejects_out_of_range() {
        assert_eq!(
            Quantifier::most().membership(1.5),
            Err(Error::MembershipOutOfRange(1.5))
        );
        assert!(Quantifier::most().membership(-0.1).is_err());
        assert!(Quantifier::most().membership(f64::NAN).is_err());
    }

    #[test]
    fn quantifier_constructor_checks_knots() {
        assert!(Quantifier::new("flat", 0.4, 0.4).is_err());
        assert!(Quantifier::new("backwards", 0.6, 0.2).is_err());
        assert!(Quantifier::new("wide", -0.1, 0.5).is_err());
        assert!(Quantifier::new("wide", 0.1, 1.5).is_err());
        assert!(Quantifier::new("ok", 0.0, 1.0).is_ok());
    }

    #[test]
    fn most_weights_for_seven() {
        let w = quantifier_weights(&Quantifier::most(), 7).unwrap();
        assert!(close(
            w.as_slice(),
            &[0.0, 0.0, 0.2571, 0.2857, 0.2857, 0.1714, 0.0],
            1e-4
        ));
        assert_eq!(w.as_slice()[0], 0.0);
        assert_eq!(w.provenance(), "most");
    }

    #[test]
    fn at_least_half_weights_for_seven() {
        let w = quantifier_weights(&Quantifier::at_least_half(), 7).unwrap();
        let expected = [2.0 / 7.0, 2.0 / 7.0, 2.0 / 7.0, 1.0 / 7.0, 0.0, 0.0, 0.0];
        assert!(close(w.as_slice(), &expected, 1e-12));
    }

    #[test]
    fn single_criterion_gets_everything() {
        for q in [
            Quantifier::most(),
            Quantifier::at_least_half(),
            Quantifier::as_many_as_possible(),
        ] {
            assert_eq!(quantifier_weights(&q, 1).unwrap().as_slice(), &[1.0]);
        }
    }

    #[test]
    fn zero_counts_rejected() {
        assert_eq!(
            quantifier_weights(&Quantifier::most(), 0),
            Err(Error::ZeroCriteria)
        );
        assert_eq!(most_preferred_first_weights(0), Err(Error::ZeroRankers));
    }

    #[test]
    fn most_zeroes_the_top_position() {
        for m in 4..=20 {
            if 1.0 / (m as f64) < 0.3 {
                let w = quantifier_weights(&Quantifier::most(), m).unwrap();
                assert_eq!(w.as_slice()[0], 0.0, "m = {m}");
            }
        }
    }

    #[test]
    fn mpf_weights_match_table() {
        let w = most_preferred_first_weights(7).unwrap();
        let published = [0.25, 0.21428, 0.17857, 0.14285, 0.10714, 0.07142, 0.03571];
        assert!(close(w.as_slice(), &published, 1e-5));
        let exact: Vec<Ratio<u64>> = (1..=7).rev().map(|k| Ratio::new(k, 28)).collect();
        assert_eq!(w.rational().unwrap(), exact.as_slice());
    }

    #[test]
    fn mpf_small_cases() {
        assert_eq!(most_preferred_first_weights(1).unwrap().as_slice(), &[1.0]);
        let w = most_preferred_first_weights(3).unwrap();
        assert_eq!(
            w.rational().unwrap(),
            &[Ratio::new(1, 2), Ratio::new(1, 3), Ratio::new(1, 6)]
        );
        assert!(close(w.as_slice(), &[0.5, 1.0 / 3.0, 1.0 / 6.0], 1e-15));
    }

    #[test]
    fn weight_vector_checks_normalization() {
        assert!(WeightVector::new(vec![0.5, 0.5], "x").is_ok());
        assert!(WeightVector::new(vec![0.5, 0.6], "x").is_err());
        assert!(WeightVector::new(vec![1.5, -0.5], "x").is_err());
        assert!(WeightVector::new(vec![], "x").is_err());
        assert!(WeightVector::new(vec![f64::NAN, 1.0], "x").is_err());
    }

    #[test]
    fn uniform_is_exact() {
        let w = WeightVector::uniform(4).unwrap();
        assert_eq!(w.as_slice(), &[0.25; 4]);
        assert!(WeightVector::uniform(0).is_err());
    }
}
