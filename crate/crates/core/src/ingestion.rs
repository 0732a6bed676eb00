//! Blog page acquisition: format parsing, title/body/comment separation and
//! sentence segmentation.

use std::collections::HashSet;

use scraper::{Html, Selector};
use serde::Deserialize;

use crate::error::{Error, Result};

/// Default CSS selector for comment regions: any element whose id or class
/// contains "comment".
pub const DEFAULT_COMMENT_SELECTOR: &str = "[id*=comment], [class*=comment]";

/// Supported input formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    Plain,
    Record,
    Html,
}

impl InputFormat {
    /// Guesses the format from a file extension; anything unknown is plain.
    pub fn from_extension(ext: Option<&str>) -> Self {
        match ext.map(|e| e.to_ascii_lowercase()).as_deref() {
            Some("html") | Some("htm") => Self::Html,
            Some("json") => Self::Record,
            _ => Self::Plain,
        }
    }
}

/// A parsed blog page. Comments are carried for inspection but never merged
/// into the body and never scored.
#[derive(Debug, Clone)]
pub struct BlogDocument {
    pub title: String,
    pub body: String,
    pub comments: Vec<String>,
    pub source_id: String,
}

/// One body sentence. `raw_text` is the verbatim body slice at `span`
/// (byte offsets, whitespace already trimmed at both ends).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sentence {
    /// 1-based position in document order.
    pub index: usize,
    pub raw_text: String,
    pub span: (usize, usize),
}

/// The ordered sentences S1..Sn of a post body.
#[derive(Debug, Clone)]
pub struct SentenceSet {
    pub sentences: Vec<Sentence>,
}

impl SentenceSet {
    pub fn len(&self) -> usize {
        self.sentences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sentences.is_empty()
    }
}

/// Parsing knobs; only HTML ingestion uses the comment selector.
#[derive(Debug, Clone)]
pub struct ParseConfig {
    pub comment_selector: String,
}

impl Default for ParseConfig {
    fn default() -> Self {
        Self {
            comment_selector: DEFAULT_COMMENT_SELECTOR.to_string(),
        }
    }
}

/// Parses raw bytes in the declared format into a [`BlogDocument`] with the
/// default configuration.
pub fn parse_document(raw: &[u8], format: InputFormat, source_id: &str) -> Result<BlogDocument> {
    parse_document_with(raw, format, source_id, &ParseConfig::default())
}

pub fn parse_document_with(
    raw: &[u8],
    format: InputFormat,
    source_id: &str,
    config: &ParseConfig,
) -> Result<BlogDocument> {
    let text = std::str::from_utf8(raw).map_err(|e| Error::MalformedInput {
        source_id: source_id.to_string(),
        reason: format!("invalid UTF-8: {e}"),
    })?;
    let doc = match format {
        InputFormat::Plain => parse_plain(text, source_id)?,
        InputFormat::Record => parse_record(text, source_id)?,
        InputFormat::Html => parse_html(text, source_id, &config.comment_selector)?,
    };
    if doc.title.trim().is_empty() {
        return Err(Error::MissingTitle {
            source_id: source_id.to_string(),
        });
    }
    if doc.body.trim().is_empty() {
        return Err(Error::EmptyBody {
            source_id: source_id.to_string(),
        });
    }
    Ok(doc)
}

/// Plain text: the first block of lines up to the first blank line is the
/// title, the rest is the body.
fn parse_plain(text: &str, source_id: &str) -> Result<BlogDocument> {
    let mut lines = text.lines();
    let mut title_lines = Vec::new();
    for line in lines.by_ref() {
        if line.trim().is_empty() {
            break;
        }
        title_lines.push(line.trim());
    }
    let title = title_lines.join(" ");
    let body = lines.collect::<Vec<_>>().join("\n").trim().to_string();
    if title.trim().is_empty() {
        return Err(Error::MissingTitle {
            source_id: source_id.to_string(),
        });
    }
    Ok(BlogDocument {
        title,
        body,
        comments: Vec::new(),
        source_id: source_id.to_string(),
    })
}

#[derive(Deserialize)]
struct RawRecord {
    title: String,
    body: String,
    #[serde(default)]
    comments: Vec<String>,
    #[serde(default)]
    source_id: Option<String>,
}

fn parse_record(text: &str, source_id: &str) -> Result<BlogDocument> {
    let record: RawRecord = serde_json::from_str(text).map_err(|e| Error::MalformedInput {
        source_id: source_id.to_string(),
        reason: format!("invalid record: {e}"),
    })?;
    Ok(BlogDocument {
        title: record.title,
        body: record.body,
        comments: record.comments,
        source_id: record.source_id.unwrap_or_else(|| source_id.to_string()),
    })
}

/// HTML: title from `<title>`, else the first `<h1>`; body is the text of
/// paragraph elements outside any comment region; comment regions become
/// entries of `comments`.
fn parse_html(text: &str, source_id: &str, comment_selector: &str) -> Result<BlogDocument> {
    let document = Html::parse_document(text);
    let comment_sel = Selector::parse(comment_selector).map_err(|e| Error::MalformedInput {
        source_id: source_id.to_string(),
        reason: format!("bad comment selector {comment_selector:?}: {e}"),
    })?;

    let title_sel = Selector::parse("title").unwrap();
    let h1_sel = Selector::parse("h1").unwrap();
    let title = document
        .select(&title_sel)
        .next()
        .or_else(|| document.select(&h1_sel).next())
        .map(|e| collapse_whitespace(&e.text().collect::<String>()))
        .filter(|t| !t.is_empty())
        .ok_or_else(|| Error::MissingTitle {
            source_id: source_id.to_string(),
        })?;

    let comment_nodes: HashSet<_> = document.select(&comment_sel).map(|e| e.id()).collect();

    let p_sel = Selector::parse("p").unwrap();
    let mut paragraphs = Vec::new();
    for p in document.select(&p_sel) {
        let in_comment = comment_nodes.contains(&p.id())
            || p.ancestors().any(|a| comment_nodes.contains(&a.id()));
        if in_comment {
            continue;
        }
        let para = collapse_whitespace(&p.text().collect::<String>());
        if !para.is_empty() {
            paragraphs.push(para);
        }
    }

    // one entry per outermost comment region
    let mut comments = Vec::new();
    for c in document.select(&comment_sel) {
        if c.ancestors().any(|a| comment_nodes.contains(&a.id())) {
            continue;
        }
        let text = collapse_whitespace(&c.text().collect::<String>());
        if !text.is_empty() {
            comments.push(text);
        }
    }

    Ok(BlogDocument {
        title,
        body: paragraphs.join("\n\n"),
        comments,
        source_id: source_id.to_string(),
    })
}

fn collapse_whitespace(text: &str) -> String {
    text.split_whitespace().collect::<Vec<_>>().join(" ")
}

/// Sentence segmentation knobs. Splits happen at `.`, `!` or `?` followed by
/// whitespace and an uppercase letter; a protected abbreviation suppresses
/// the split unless that uppercase follow-up is present.
#[derive(Debug, Clone)]
pub struct SegmentConfig {
    pub abbreviations: Vec<String>,
}

impl Default for SegmentConfig {
    fn default() -> Self {
        Self {
            abbreviations: ["etc", "i.e", "e.g", "Dr", "Mr", "Mrs", "vs"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        }
    }
}

impl SegmentConfig {
    fn is_abbreviation(&self, word: &str) -> bool {
        self.abbreviations
            .iter()
            .any(|a| a.eq_ignore_ascii_case(word))
    }
}

/// Splits a body into its ordered sentence set with the default abbreviation
/// list.
pub fn segment_sentences(body: &str) -> Result<SentenceSet> {
    segment_sentences_with(body, &SegmentConfig::default())
}

const CLOSING_QUOTES: &[char] = &['"', '\'', '\u{2019}', '\u{201d}', ')', ']'];
const OPENING_QUOTES: &[char] = &['"', '\'', '\u{2018}', '\u{201c}', '(', '['];

pub fn segment_sentences_with(body: &str, config: &SegmentConfig) -> Result<SentenceSet> {
    if body.trim().is_empty() {
        return Err(Error::EmptyBody {
            source_id: String::new(),
        });
    }

    let chars: Vec<(usize, char)> = body.char_indices().collect();
    let mut boundaries = Vec::new(); // byte offsets just past each sentence end
    let mut i = 0;
    while i < chars.len() {
        let (_, c) = chars[i];
        if matches!(c, '.' | '!' | '?') {
            // include trailing closing quotes/brackets in the sentence
            let mut end = i + 1;
            while end < chars.len() && CLOSING_QUOTES.contains(&chars[end].1) {
                end += 1;
            }
            let mut after = end;
            let mut saw_ws = false;
            while after < chars.len() && chars[after].1.is_whitespace() {
                saw_ws = true;
                after += 1;
            }
            let mut peek = after;
            while peek < chars.len() && OPENING_QUOTES.contains(&chars[peek].1) {
                peek += 1;
            }
            let upper_follows =
                saw_ws && peek < chars.len() && chars[peek].1.is_uppercase();
            let at_end = after >= chars.len();
            let abbrev = c == '.' && config.is_abbreviation(&word_before(&chars, i));
            let split = upper_follows || (at_end && !abbrev);
            if split {
                let boundary = if end < chars.len() {
                    chars[end].0
                } else {
                    body.len()
                };
                boundaries.push(boundary);
                i = end;
                continue;
            }
        }
        i += 1;
    }

    let mut sentences = Vec::new();
    let mut start = 0;
    let push = |start: usize, end: usize, sentences: &mut Vec<Sentence>| {
        let slice = &body[start..end];
        let trimmed = slice.trim();
        if trimmed.is_empty() || !trimmed.chars().any(char::is_alphanumeric) {
            return;
        }
        let lead = slice.len() - slice.trim_start().len();
        let s = start + lead;
        let e = s + trimmed.len();
        sentences.push(Sentence {
            index: sentences.len() + 1,
            raw_text: trimmed.to_string(),
            span: (s, e),
        });
    };
    for b in boundaries {
        push(start, b, &mut sentences);
        start = b;
    }
    push(start, body.len(), &mut sentences);

    if sentences.is_empty() {
        return Err(Error::EmptyBody {
            source_id: String::new(),
        });
    }
    Ok(SentenceSet { sentences })
}

/// The word (letters and internal periods) immediately before position `i`.
fn word_before(chars: &[(usize, char)], i: usize) -> String {
    let mut j = i;
    let mut word = Vec::new();
    while j > 0 {
        let c = chars[j - 1].1;
        if c.is_alphanumeric() || (c == '.' && !word.is_empty()) {
            word.push(c);
            j -= 1;
        } else {
            break;
        }
    }
    word.into_iter().rev().collect()
}
