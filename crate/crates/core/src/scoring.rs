//! Sentence scoring: the title-sentence matrix, the presence factor matrix,
//! the sentence score, ranking and summary selection.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ingestion::{Sentence, SentenceSet};
use crate::linguistic::{SentenceTerms, TitleTermset};

/// Grid of per-sentence frequencies of each title term. Rows are title terms,
/// columns are sentences.
#[derive(Debug, Clone)]
pub struct TitleSentenceMatrix {
    entries: Vec<Vec<u32>>,
    pub row_terms: TitleTermset,
    pub n_sentences: usize,
}

impl TitleSentenceMatrix {
    pub fn term_count(&self) -> usize {
        self.row_terms.len()
    }

    /// Frequency of title term `i` in sentence `j` (0-based).
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }
}

/// Binary presence flags with the same row/column indexing as the TSM.
#[derive(Debug, Clone)]
pub struct PresenceFactorMatrix {
    entries: Vec<Vec<u8>>,
}

impl PresenceFactorMatrix {
    pub fn entry(&self, i: usize, j: usize) -> u8 {
        self.entries[i][j]
    }
}

/// Which sentence score formula to use.
///
/// `Literal` is the frequency-times-presence sum as printed; `Coverage`
/// additionally scales by the fraction of distinct title terms the sentence
/// contains, favoring sentences that cover more of the title.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ScoreVariant {
    #[default]
    Literal,
    Coverage,
}

/// An exact non-negative rational score. Literal scores are integers
/// (denominator 1); coverage scores are integer/m. Comparison is exact
/// cross-multiplication, never floating point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Score {
    pub num: u64,
    pub den: u64,
}

impl Score {
    pub fn integer(n: u64) -> Self {
        Self { num: n, den: 1 }
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// Integer value of an integral score, if it is one.
    pub fn as_integer(&self) -> Option<u64> {
        (self.num % self.den == 0).then_some(self.num / self.den)
    }
}

impl PartialOrd for Score {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Score {
    fn cmp(&self, other: &Self) -> Ordering {
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(n) => write!(f, "{n}"),
            None => write!(f, "{}/{}", self.num, self.den),
        }
    }
}

/// A sentence with its score and the number of distinct title terms present.
#[derive(Debug, Clone)]
pub struct ScoredSentence {
    pub sentence: Sentence,
    pub score: Score,
    pub distinct_hits: usize,
}

/// How the selected sentences are ordered in the output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderingMode {
    #[default]
    Score,
    Document,
}

/// Summary size: an absolute sentence count or a fraction of the document
/// (k = ceil(ratio * n)).
#[derive(Debug, Clone, Copy)]
pub enum SummarySize {
    Count(usize),
    Ratio(f64),
}

/// The selected summary sentences with scores and ranks.
#[derive(Debug, Clone)]
pub struct RankedSummary {
    pub selected: Vec<ScoredSentence>,
    pub k: usize,
    pub ordering_mode: OrderingMode,
}

impl RankedSummary {
    pub fn sentence_texts(&self) -> Vec<String> {
        self.selected.iter().map(|s| s.sentence.raw_text.clone()).collect()
    }
}

/// Builds the title-sentence matrix: entry (i, j) is the multiplicity of
/// title term i in sentence j.
pub fn build_tsm(
    termset: &TitleTermset,
    sentence_terms: &[SentenceTerms],
) -> Result<TitleSentenceMatrix> {
    if termset.is_empty() {
        return Err(Error::EmptyTermset);
    }
    if sentence_terms.is_empty() {
        return Err(Error::NoSentences);
    }
    let entries = termset
        .terms
        .iter()
        .map(|term| sentence_terms.iter().map(|s| s.count(term)).collect())
        .collect();
    Ok(TitleSentenceMatrix {
        entries,
        row_terms: termset.clone(),
        n_sentences: sentence_terms.len(),
    })
}

/// Derives the presence factor matrix: 1 where the TSM entry is at least 1.
pub fn build_pfm(tsm: &TitleSentenceMatrix) -> PresenceFactorMatrix {
    PresenceFactorMatrix {
        entries: tsm
            .entries
            .iter()
            .map(|row| row.iter().map(|&c| u8::from(c >= 1)).collect())
            .collect(),
    }
}

/// The sentence score for 1-based sentence index `j`: the sum over title
/// terms of frequency times presence, optionally scaled by coverage.
pub fn sentence_score(
    tsm: &TitleSentenceMatrix,
    pfm: &PresenceFactorMatrix,
    j: usize,
    variant: ScoreVariant,
) -> Result<Score> {
    if j < 1 || j > tsm.n_sentences {
        return Err(Error::IndexOutOfRange {
            index: j,
            n: tsm.n_sentences,
        });
    }
    let col = j - 1;
    let m = tsm.term_count();
    let literal: u64 = (0..m)
        .map(|i| tsm.entry(i, col) as u64 * pfm.entry(i, col) as u64)
        .sum();
    let hits = (0..m).filter(|&i| pfm.entry(i, col) == 1).count();
    Ok(match variant {
        ScoreVariant::Literal => Score::integer(literal),
        ScoreVariant::Coverage => Score {
            num: literal * hits as u64,
            den: m as u64,
        },
    })
}

/// Scores every sentence of the set.
pub fn score_all(
    tsm: &TitleSentenceMatrix,
    pfm: &PresenceFactorMatrix,
    sentences: &SentenceSet,
    variant: ScoreVariant,
) -> Result<Vec<ScoredSentence>> {
    sentences
        .sentences
        .iter()
        .map(|s| {
            let score = sentence_score(tsm, pfm, s.index, variant)?;
            let hits = (0..tsm.term_count())
                .filter(|&i| pfm.entry(i, s.index - 1) == 1)
                .count();
            Ok(ScoredSentence {
                sentence: s.clone(),
                score,
                distinct_hits: hits,
            })
        })
        .collect()
}

/// Sorts non-increasing by score, ties broken by ascending sentence index.
pub fn rank_sentences(mut scores: Vec<ScoredSentence>) -> Vec<ScoredSentence> {
    scores.sort_by(|a, b| {
        b.score
            .cmp(&a.score)
            .then(a.sentence.index.cmp(&b.sentence.index))
    });
    scores
}

/// Takes the top `k` ranked sentences. Zero-score sentences are excluded
/// unless `include_zero` is set, even when that yields fewer than `k`.
pub fn select_summary(
    ranked: Vec<ScoredSentence>,
    size: SummarySize,
    ordering_mode: OrderingMode,
    include_zero: bool,
) -> Result<RankedSummary> {
    let n = ranked.len();
    let k = match size {
        SummarySize::Count(k) => {
            if k < 1 {
                return Err(Error::InvalidK("k must be at least 1".into()));
            }
            k
        }
        SummarySize::Ratio(r) => {
            if !(r > 0.0 && r <= 1.0) {
                return Err(Error::InvalidK(format!("ratio {r} not in (0, 1]")));
            }
            (r * n as f64).ceil() as usize
        }
    };
    let mut selected: Vec<ScoredSentence> = ranked
        .into_iter()
        .filter(|s| include_zero || !s.score.is_zero())
        .take(k.min(n))
        .collect();
    if ordering_mode == OrderingMode::Document {
        selected.sort_by_key(|s| s.sentence.index);
    }
    Ok(RankedSummary {
        selected,
        k,
        ordering_mode,
    })
}

/// Tab-separated inspection dump of both matrices: a `# TSM` grid then a
/// `# PFM` grid, header row of sentence indices, header column of title terms.
pub fn dump_matrices(tsm: &TitleSentenceMatrix, pfm: &PresenceFactorMatrix) -> String {
    let mut out = String::new();
    let header: Vec<String> = (1..=tsm.n_sentences).map(|j| format!("S{j}")).collect();
    for (name, get) in [
        ("# TSM", true),
        ("# PFM", false),
    ] {
        out.push_str(name);
        out.push('\n');
        out.push('\t');
        out.push_str(&header.join("\t"));
        out.push('\n');
        for (i, term) in tsm.row_terms.terms.iter().enumerate() {
            out.push_str(term.as_str());
            for j in 0..tsm.n_sentences {
                let v = if get {
                    tsm.entry(i, j)
                } else {
                    pfm.entry(i, j) as u32
                };
                out.push('\t');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
    }
    out
}
