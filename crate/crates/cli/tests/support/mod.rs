//! Slow, obvious reimplementations used to cross-check the library.

use std::cmp::Ordering;

/// `(u + 1 - k) / (u (u + 1) / 2)` for k = 1..=u.
pub fn mpf_weights(u: usize) -> Vec<f64> {
    let n = (u * (u + 1) / 2) as f64;
    (1..=u).map(|k| (u + 1 - k) as f64 / n).collect()
}

fn membership(a: f64, b: f64, r: f64) -> f64 {
    if r < a {
        0.0
    } else if r > b {
        1.0
    } else {
        (r - a) / (b - a)
    }
}

pub fn quantifier_weights(a: f64, b: f64, m: usize) -> Vec<f64> {
    (1..=m)
        .map(|k| {
            membership(a, b, k as f64 / m as f64) - membership(a, b, (k - 1) as f64 / m as f64)
        })
        .collect()
}

/// Repeatedly takes the largest remaining value and pairs it with the next
/// weight.
pub fn owa(row: &[f64], weights: &[f64]) -> f64 {
    assert_eq!(row.len(), weights.len());
    let mut left = row.to_vec();
    let mut total = 0.0;
    for w in weights {
        let mut best = 0;
        for i in 1..left.len() {
            if left[i] > left[best] {
                best = i;
            }
        }
        total += left.remove(best) * w;
    }
    total
}

/// `1 - (position - 1) / 16`, floored at 0.
pub fn positional_score(position: usize) -> f64 {
    (1.0 - (position - 1) as f64 / 16.0).max(0.0)
}

/// Items such as `DS12` compare by prefix, then by number.
pub fn natural_key(id: &str) -> (String, u64) {
    let split = id.find(|c: char| c.is_ascii_digit()).unwrap_or(id.len());
    let (head, tail) = id.split_at(split);
    (head.to_string(), tail.parse().unwrap_or(0))
}

/// Score matrix as `(item, row)` pairs, items in first-appearance order.
pub fn score_rows(lists: &[(&str, Vec<&str>)]) -> Vec<(String, Vec<f64>)> {
    let mut rows: Vec<(String, Vec<f64>)> = Vec::new();
    for (r, (_, list)) in lists.iter().enumerate() {
        for (p, item) in list.iter().enumerate() {
            let i = match rows.iter().position(|(x, _)| x == item) {
                Some(i) => i,
                None => {
                    rows.push((item.to_string(), vec![0.0; lists.len()]));
                    rows.len() - 1
                }
            };
            rows[i].1[r] = positional_score(p + 1);
        }
    }
    rows
}

/// Items by descending score, ties broken by `natural_key`.
pub fn rank(scored: Vec<(String, f64)>) -> Vec<(String, f64)> {
    let mut scored = scored;
    scored.sort_by(|x, y| match y.1.partial_cmp(&x.1).unwrap() {
        Ordering::Equal => natural_key(&x.0).cmp(&natural_key(&y.0)),
        o => o,
    });
    scored
}

pub struct Scores {
    pub p: f64,
    pub fpr: f64,
    pub fnr: f64,
    pub mae: f64,
    pub rmse: f64,
    pub rr: f64,
    pub msrcc: f64,
}

fn find<T: PartialEq>(list: &[T], x: &T) -> Option<usize> {
    (0..list.len()).find(|&i| list[i] == *x)
}

pub fn scores<T: PartialEq>(predicted: &[T], truth: &[T], k: usize) -> Scores {
    let pk = &predicted[..k.min(predicted.len())];
    let tk = &truth[..k.min(truth.len())];
    let hits = pk.iter().filter(|x| tk.contains(x)).count();

    let mut abs = 0.0;
    let mut sq = 0.0;
    let mut shared = 0usize;
    for (i, x) in truth.iter().enumerate() {
        if let Some(j) = find(predicted, x) {
            let d = i as f64 - j as f64;
            abs += d.abs();
            sq += d * d;
            shared += 1;
        }
    }

    let rr = match find(predicted, &truth[0]) {
        Some(j) => 1.0 / (j + 1) as f64,
        None => 0.0,
    };

    let v: Vec<f64> = truth
        .iter()
        .map(|x| (find(predicted, x).unwrap_or(predicted.len()) + 1) as f64)
        .collect();
    let max_v = v.iter().cloned().fold(0.0, f64::max);
    let m = truth.len() as f64;
    let mut d2 = 0.0;
    for (i, vi) in v.iter().enumerate() {
        d2 += ((i + 1) as f64 - vi).powi(2);
    }

    Scores {
        p: hits as f64 / k as f64,
        fpr: (pk.len() - hits) as f64 / k as f64,
        fnr: (tk.len() - hits) as f64 / k as f64,
        mae: abs / shared as f64,
        rmse: (sq / shared as f64).sqrt(),
        rr,
        msrcc: 1.0 - d2 / (m * (max_v * max_v - 1.0)),
    }
}

/// Rearranges `xs` into the next permutation in lexicographic order;
/// false once the last one has been passed.
pub fn next_permutation<T: Ord>(xs: &mut [T]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        xs.reverse();
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}
