//! Title-driven extractive summarization of blog pages.
//!
//! A blog page is parsed into a title, a post body and (optionally) visitor
//! comments. The body is segmented into sentences, the title is reduced to a
//! termset by a linguistic pipeline (tokenization, normalization, stopword
//! removal, optional lemma lookup, Porter stemming), and each sentence is
//! scored by how often the title terms occur in it. Two matrices drive the
//! score: the title-sentence matrix (per-term frequencies) and the presence
//! factor matrix (binary presence flags). The top-scoring sentences form the
//! summary, verbatim. An evaluation harness computes precision and recall of
//! a candidate summary against a model (reference) summary.
//!
//! See the `examples/` directory for one runnable program per capability;
//! the `blogsum` binary wraps the same pipeline for batch use.

pub mod cli;
pub mod error;
pub mod evaluation;
pub mod ingestion;
pub mod linguistic;
pub mod porter;
pub mod scoring;

pub use error::{Error, Result};
pub use evaluation::{evaluate, EvaluationReport};
pub use ingestion::{parse_document, segment_sentences, BlogDocument, InputFormat, Sentence, SentenceSet};
pub use linguistic::{build_title_termset, process_sentence, PipelineConfig, Term, TitleTermset};
pub use scoring::{
    build_pfm, build_tsm, rank_sentences, select_summary, sentence_score, OrderingMode,
    PresenceFactorMatrix, RankedSummary, ScoreVariant, ScoredSentence, SummarySize,
    TitleSentenceMatrix,
};

/// Options for the end-to-end document summarizer.
#[derive(Debug, Clone)]
pub struct SummaryOptions {
    pub size: SummarySize,
    pub variant: ScoreVariant,
    pub ordering: OrderingMode,
    pub include_zero: bool,
}

impl Default for SummaryOptions {
    fn default() -> Self {
        Self {
            size: SummarySize::Ratio(0.2),
            variant: ScoreVariant::Literal,
            ordering: OrderingMode::Score,
            include_zero: false,
        }
    }
}

/// Runs the whole pipeline over one parsed document: segmentation, title
/// termset, matrices, scoring, ranking and selection.
pub fn summarize(
    doc: &BlogDocument,
    pipeline: &PipelineConfig,
    options: &SummaryOptions,
) -> Result<RankedSummary> {
    let sentences = segment_sentences(&doc.body)?;
    let termset = build_title_termset(&doc.title, pipeline)?;
    let sentence_terms: Vec<_> = sentences
        .sentences
        .iter()
        .map(|s| process_sentence(s, pipeline))
        .collect();
    let tsm = build_tsm(&termset, &sentence_terms)?;
    let pfm = build_pfm(&tsm);
    let scored = scoring::score_all(&tsm, &pfm, &sentences, options.variant)?;
    let ranked = rank_sentences(scored);
    select_summary(ranked, options.size, options.ordering, options.include_zero)
}

/// Builds the two scoring matrices for one parsed document without selecting
/// a summary; used by the matrix inspection mode.
pub fn build_matrices(
    doc: &BlogDocument,
    pipeline: &PipelineConfig,
) -> Result<(TitleSentenceMatrix, PresenceFactorMatrix)> {
    let sentences = segment_sentences(&doc.body)?;
    let termset = build_title_termset(&doc.title, pipeline)?;
    let sentence_terms: Vec<_> = sentences
        .sentences
        .iter()
        .map(|s| process_sentence(s, pipeline))
        .collect();
    let tsm = build_tsm(&termset, &sentence_terms)?;
    let pfm = build_pfm(&tsm);
    Ok((tsm, pfm))
}
