//! Precision/recall of a candidate summary against a model (reference)
//! summary, with deterministic sentence matching.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scoring::RankedSummary;

/// An exact fraction in [0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: usize,
    pub den: usize,
}

impl Fraction {
    pub fn value(&self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Percentage with one decimal, round half up: 6/7 -> "85.7", 3/7 -> "42.9".
    pub fn display_percent(&self) -> String {
        let tenths = (2000 * self.num + self.den) / (2 * self.den);
        format!("{}.{}", tenths / 10, tenths % 10)
    }
}

/// Outcome of comparing a candidate summary with a model summary.
#[derive(Debug, Clone, Serialize)]
pub struct EvaluationReport {
    pub n_common: usize,
    pub n_sum: usize,
    pub n_msum: usize,
    pub precision: Fraction,
    pub recall: Fraction,
    /// (candidate index, model index) pairs, 0-based; one-to-one.
    pub matched_pairs: Vec<(usize, usize)>,
}

/// Normalized form used for sentence identity: lowercased, whitespace
/// collapsed, terminal punctuation stripped.
fn match_key(text: &str) -> String {
    let collapsed = text
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
        .to_lowercase();
    collapsed
        .trim_end_matches(|c| matches!(c, '.' | '!' | '?'))
        .trim_end()
        .to_string()
}

/// Greedy one-to-one matching of normalization-equal sentences; candidates
/// are processed in order and each sentence matches at most once.
pub fn match_sentences(candidate: &[String], model: &[String]) -> Vec<(usize, usize)> {
    let model_keys: Vec<String> = model.iter().map(|s| match_key(s)).collect();
    let mut used = vec![false; model.len()];
    let mut pairs = Vec::new();
    for (ci, c) in candidate.iter().enumerate() {
        let key = match_key(c);
        if let Some(mi) = model_keys
            .iter()
            .enumerate()
            .position(|(mi, mk)| !used[mi] && *mk == key)
        {
            used[mi] = true;
            pairs.push((ci, mi));
        }
    }
    pairs
}

/// The two ratios as exact fractions.
pub fn precision_recall(
    n_common: usize,
    n_sum: usize,
    n_msum: usize,
) -> Result<(Fraction, Fraction)> {
    if n_sum == 0 {
        return Err(Error::UndefinedMetric {
            metric: "precision",
        });
    }
    if n_msum == 0 {
        return Err(Error::UndefinedMetric { metric: "recall" });
    }
    debug_assert!(n_common <= n_sum.min(n_msum));
    Ok((
        Fraction {
            num: n_common,
            den: n_sum,
        },
        Fraction {
            num: n_common,
            den: n_msum,
        },
    ))
}

/// Evaluates a ranked summary against a model summary.
pub fn evaluate(candidate: &RankedSummary, model: &[String]) -> Result<EvaluationReport> {
    evaluate_texts(&candidate.sentence_texts(), model)
}

/// Evaluates plain sentence lists (e.g. summaries read from files).
pub fn evaluate_texts(candidate: &[String], model: &[String]) -> Result<EvaluationReport> {
    if model.is_empty() {
        return Err(Error::EmptyModelSummary);
    }
    let matched_pairs = match_sentences(candidate, model);
    let n_common = matched_pairs.len();
    let (precision, recall) = precision_recall(n_common, candidate.len(), model.len())?;
    Ok(EvaluationReport {
        n_common,
        n_sum: candidate.len(),
        n_msum: model.len(),
        precision,
        recall,
        matched_pairs,
    })
}

impl EvaluationReport {
    /// Human-readable report table.
    pub fn to_text(&self) -> String {
        format!(
            "n_common {}  n_sum {}  n_msum {}\nP {}% ({}/{})  R {}% ({}/{})\n",
            self.n_common,
            self.n_sum,
            self.n_msum,
            self.precision.display_percent(),
            self.precision.num,
            self.precision.den,
            self.recall.display_percent(),
            self.recall.num,
            self.recall.den,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn normalization_equal_sentences_match() {
        let pairs = match_sentences(&strings(&["A cat sat."]), &strings(&["a  cat sat"]));
        assert_eq!(pairs, vec![(0, 0)]);
    }

    #[test]
    fn disjoint_lists_do_not_match() {
        let pairs = match_sentences(&strings(&["A cat."]), &strings(&["A dog."]));
        assert!(pairs.is_empty());
    }

    #[test]
    fn matching_is_one_to_one() {
        let pairs = match_sentences(
            &strings(&["A cat sat.", "A cat sat."]),
            &strings(&["A cat sat."]),
        );
        assert_eq!(pairs.len(), 1);
    }

    #[test]
    fn table_fractions_display_with_half_up_rounding() {
        let (p, r) = precision_recall(6, 7, 7).unwrap();
        assert_eq!(p.display_percent(), "85.7");
        assert_eq!(r.display_percent(), "85.7");
        let (p, _) = precision_recall(4, 7, 7).unwrap();
        assert_eq!(p.display_percent(), "57.1");
        let (p, _) = precision_recall(3, 7, 7).unwrap();
        assert_eq!(p.display_percent(), "42.9");
        let (p, _) = precision_recall(2, 7, 7).unwrap();
        assert_eq!(p.display_percent(), "28.6");
        let (p, r) = precision_recall(0, 5, 5).unwrap();
        assert_eq!((p.num, r.num), (0, 0));
        assert_eq!(p.display_percent(), "0.0");
    }

    #[test]
    fn zero_denominators_are_undefined() {
        assert!(matches!(
            precision_recall(0, 0, 5),
            Err(Error::UndefinedMetric { .. })
        ));
        assert!(matches!(
            precision_recall(0, 5, 0),
            Err(Error::UndefinedMetric { .. })
        ));
    }

    #[test]
    fn identity_gives_perfect_scores_in_any_order() {
        let candidate = strings(&["B runs.", "A sits."]);
        let model = strings(&["A sits.", "B runs."]);
        let report = evaluate_texts(&candidate, &model).unwrap();
        assert_eq!(report.n_common, 2);
        assert_eq!(report.precision.value(), 1.0);
        assert_eq!(report.recall.value(), 1.0);
    }

    #[test]
    fn extra_candidate_sentence_lowers_precision_only() {
        let model = strings(&["A.", "B.", "C.", "D."]);
        let mut candidate = model.clone();
        candidate.push("E.".to_string());
        let report = evaluate_texts(&candidate, &model).unwrap();
        assert_eq!(report.precision, Fraction { num: 4, den: 5 });
        assert_eq!(report.recall, Fraction { num: 4, den: 4 });
    }

    #[test]
    fn empty_model_summary_is_an_error() {
        assert!(matches!(
            evaluate_texts(&strings(&["A."]), &[]),
            Err(Error::EmptyModelSummary)
        ));
    }
}
