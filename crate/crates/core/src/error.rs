use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by parsing, pipeline construction, scoring and evaluation.
#[derive(Debug, Error)]
pub enum Error {
    /// Input bytes could not be decoded or violate the declared format.
    #[error("{source_id}: malformed input: {reason}")]
    MalformedInput { source_id: String, reason: String },

    /// No title could be located and no fallback is allowed.
    #[error("{source_id}: no title found")]
    MissingTitle { source_id: String },

    /// The document has no post content.
    #[error("{source_id}: empty body")]
    EmptyBody { source_id: String },

    /// Every title token was a stopword or normalized away; the document
    /// cannot be scored.
    #[error("title yields no terms after processing")]
    EmptyTermset,

    /// A matrix was requested over zero sentences.
    #[error("document has no sentences")]
    NoSentences,

    /// Sentence index outside 1..=n.
    #[error("sentence index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    /// Summary size parameter out of range.
    #[error("invalid summary size: {0}")]
    InvalidK(String),

    /// Precision or recall requested with a zero denominator.
    #[error("{metric} undefined: denominator is zero")]
    UndefinedMetric { metric: &'static str },

    /// The model (reference) summary contains no sentences.
    #[error("model summary is empty")]
    EmptyModelSummary,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
