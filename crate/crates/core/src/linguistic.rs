//! The linguistic pipeline: tokenization, normalization, stopword removal,
//! lemma lookup and stemming. One [`PipelineConfig`] flows to both the title
//! and the sentences so their terms are always comparable.

use std::borrow::Borrow;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::ingestion::Sentence;
use crate::porter;

const DEFAULT_STOPWORDS: &str = include_str!("../assets/stopwords.txt");

/// The bundled demo lemma lexicon (irregular plurals plus car/automobile
/// synonym folding). Not loaded by default.
pub const DEMO_LEXICON: &str = include_str!("../assets/lemmas.tsv");

/// A normalized term: lowercase, no surrounding punctuation, at least one
/// letter or digit. Only [`normalize`] constructs these.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term(String);

impl Term {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Borrow<str> for Term {
    fn borrow(&self) -> &str {
        &self.0
    }
}

/// Which stemmer the pipeline applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Stemmer {
    #[default]
    Porter,
    None,
}

/// Pipeline configuration: stoplist, optional lemma lexicon, stemmer choice.
#[derive(Debug, Clone)]
pub struct PipelineConfig {
    pub stoplist: HashSet<Term>,
    pub lexicon: HashMap<Term, Term>,
    pub stemmer: Stemmer,
}

impl Default for PipelineConfig {
    fn default() -> Self {
        Self {
            stoplist: parse_stoplist(DEFAULT_STOPWORDS),
            lexicon: HashMap::new(),
            stemmer: Stemmer::Porter,
        }
    }
}

impl PipelineConfig {
    /// Replaces the stoplist from a file: one term per line, `#` comments.
    pub fn load_stoplist(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        self.stoplist = parse_stoplist(&text);
        Ok(())
    }

    /// Loads a lemma lexicon from a file of `surface<TAB>lemma` lines.
    pub fn load_lexicon(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        self.lexicon = parse_lexicon(&text);
        Ok(())
    }

    /// Installs the bundled demo lexicon.
    pub fn with_demo_lexicon(mut self) -> Self {
        self.lexicon = parse_lexicon(DEMO_LEXICON);
        self
    }

    fn apply_stemmer(&self, term: Term) -> Term {
        match self.stemmer {
            Stemmer::Porter => Term(porter::stem(term.as_str())),
            Stemmer::None => term,
        }
    }
}

fn parse_stoplist(text: &str) -> HashSet<Term> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .filter_map(normalize)
        .collect()
}

fn parse_lexicon(text: &str) -> HashMap<Term, Term> {
    text.lines()
        .filter_map(|line| {
            let (surface, lemma) = line.split_once('\t')?;
            Some((normalize(surface)?, normalize(lemma)?))
        })
        .collect()
}

/// Splits text into raw tokens: maximal runs of letters/digits with internal
/// apostrophes and hyphens kept; everything else separates.
pub fn tokenize(text: &str) -> Vec<&str> {
    let mut tokens = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < chars.len() {
        if !chars[i].1.is_alphanumeric() {
            i += 1;
            continue;
        }
        let start = chars[i].0;
        let mut end = i;
        while end + 1 < chars.len() {
            let next = chars[end + 1].1;
            if next.is_alphanumeric() {
                end += 1;
            } else if matches!(next, '\'' | '\u{2019}' | '-')
                && end + 2 < chars.len()
                && chars[end + 2].1.is_alphanumeric()
            {
                end += 2;
            } else {
                break;
            }
        }
        let stop = if end + 1 < chars.len() {
            chars[end + 1].0
        } else {
            text.len()
        };
        tokens.push(&text[start..stop]);
        i = end + 1;
    }
    tokens
}

/// Lowercases, applies Unicode compatibility folding and strips surrounding
/// apostrophes/hyphens; `None` when nothing alphanumeric remains.
pub fn normalize(token: &str) -> Option<Term> {
    let folded: String = token.nfkc().collect::<String>().to_lowercase();
    let folded = folded.replace('\u{2019}', "'");
    let trimmed = folded.trim_matches(|c| matches!(c, '\'' | '-'));
    if trimmed.chars().any(char::is_alphanumeric) {
        Some(Term(trimmed.to_string()))
    } else {
        None
    }
}

/// Drops stoplist members, preserving relative order.
pub fn remove_stopwords(terms: Vec<Term>, stoplist: &HashSet<Term>) -> Vec<Term> {
    terms.into_iter().filter(|t| !stoplist.contains(t)).collect()
}

/// Lexicon lookup; identity on misses.
pub fn lemmatize(term: Term, lexicon: &HashMap<Term, Term>) -> Term {
    lexicon.get(&term).cloned().unwrap_or(term)
}

/// Porter stem of a normalized term.
pub fn stem(term: &Term) -> Term {
    Term(porter::stem(term.as_str()))
}

/// The shared pipeline: tokenize, normalize, stopword removal, lemma lookup,
/// stem. Both the title and every sentence go through this.
fn process_text(text: &str, config: &PipelineConfig) -> Vec<Term> {
    tokenize(text)
        .into_iter()
        .filter_map(normalize)
        .filter(|t| !config.stoplist.contains(t))
        .map(|t| lemmatize(t, &config.lexicon))
        .map(|t| config.apply_stemmer(t))
        .collect()
}

/// The processed, de-duplicated title terms, in first-occurrence order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TitleTermset {
    pub terms: Vec<Term>,
}

impl TitleTermset {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, term: &Term) -> bool {
        self.terms.contains(term)
    }
}

/// A sentence's term multiset after the pipeline.
#[derive(Debug, Clone)]
pub struct SentenceTerms {
    pub sentence_index: usize,
    pub counts: HashMap<Term, u32>,
}

impl SentenceTerms {
    pub fn count(&self, term: &Term) -> u32 {
        self.counts.get(term).copied().unwrap_or(0)
    }
}

/// Builds the title termset T; errors when every token is normalized away or
/// removed as a stopword.
pub fn build_title_termset(title: &str, config: &PipelineConfig) -> Result<TitleTermset> {
    let mut seen = HashSet::new();
    let mut terms = Vec::new();
    for term in process_text(title, config) {
        if seen.insert(term.clone()) {
            terms.push(term);
        }
    }
    if terms.is_empty() {
        return Err(Error::EmptyTermset);
    }
    Ok(TitleTermset { terms })
}

/// Runs the pipeline over one sentence, keeping duplicate terms with counts.
/// An empty multiset is legitimate.
pub fn process_sentence(sentence: &Sentence, config: &PipelineConfig) -> SentenceTerms {
    let mut counts: HashMap<Term, u32> = HashMap::new();
    for term in process_text(&sentence.raw_text, config) {
        *counts.entry(term).or_insert(0) += 1;
    }
    SentenceTerms {
        sentence_index: sentence.index,
        counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sentence(text: &str) -> Sentence {
        Sentence {
            index: 1,
            raw_text: text.to_string(),
            span: (0, text.len()),
        }
    }

    #[test]
    fn tokenize_keeps_internal_hyphens_and_apostrophes() {
        assert_eq!(
            tokenize("easy-to-read code, 'goto' statements"),
            vec!["easy-to-read", "code", "goto", "statements"]
        );
        assert_eq!(tokenize("don't stop"), vec!["don't", "stop"]);
    }

    #[test]
    fn tokenize_empty_and_parenthetical() {
        assert!(tokenize("").is_empty());
        assert_eq!(
            tokenize("Object Oriented Programming (OOP)"),
            vec!["Object", "Oriented", "Programming", "OOP"]
        );
    }

    #[test]
    fn normalize_folds_and_strips() {
        assert_eq!(normalize("Programming").unwrap().as_str(), "programming");
        assert_eq!(normalize("'goto'").unwrap().as_str(), "goto");
        assert_eq!(normalize("C").unwrap().as_str(), "c");
        assert!(normalize("--").is_none());
        assert!(normalize("''").is_none());
    }

    #[test]
    fn normalize_is_idempotent() {
        for raw in ["Programming", "'goto'", "easy-to-read", "Don’t", "ﬁle"] {
            let once = normalize(raw).unwrap();
            let twice = normalize(once.as_str()).unwrap();
            assert_eq!(once, twice, "normalize({raw})");
        }
    }

    #[test]
    fn quoted_c_normalizes_to_c() {
        let tokens = tokenize("Pascal and ‘C’ supported blocks");
        let terms: Vec<_> = tokens.iter().filter_map(|t| normalize(t)).collect();
        assert!(terms.iter().any(|t| t.as_str() == "c"));
    }

    #[test]
    fn stopword_removal_preserves_order_and_is_idempotent() {
        let config = PipelineConfig::default();
        let terms: Vec<_> = ["the", "use", "of", "goto"]
            .iter()
            .filter_map(|t| normalize(t))
            .collect();
        let once = remove_stopwords(terms, &config.stoplist);
        let strs: Vec<_> = once.iter().map(Term::as_str).collect();
        assert_eq!(strs, vec!["use", "goto"]);
        let twice = remove_stopwords(once.clone(), &config.stoplist);
        assert_eq!(once, twice);
        assert!(remove_stopwords(Vec::new(), &config.stoplist).is_empty());
    }

    #[test]
    fn lemmatize_uses_lexicon_with_identity_fallback() {
        let lexicon = parse_lexicon(DEMO_LEXICON);
        assert_eq!(lemmatize(normalize("cars").unwrap(), &lexicon).as_str(), "car");
        assert_eq!(
            lemmatize(normalize("automobile").unwrap(), &lexicon).as_str(),
            "car"
        );
        assert_eq!(
            lemmatize(normalize("blogosphere").unwrap(), &lexicon).as_str(),
            "blogosphere"
        );
    }

    #[test]
    fn stem_examples() {
        assert_eq!(stem(&normalize("natural").unwrap()).as_str(), "natur");
        assert_eq!(stem(&normalize("programming").unwrap()).as_str(), "program");
        assert_eq!(stem(&normalize("oop").unwrap()).as_str(), "oop");
    }

    #[test]
    fn title_termset_dedupes_in_first_occurrence_order() {
        let config = PipelineConfig::default();
        let t = build_title_termset("Object Oriented Programming", &config).unwrap();
        let strs: Vec<_> = t.terms.iter().map(Term::as_str).collect();
        assert_eq!(strs, vec!["object", "orient", "program"]);

        let t = build_title_termset("Green Tea Benefits", &config).unwrap();
        let strs: Vec<_> = t.terms.iter().map(Term::as_str).collect();
        assert_eq!(strs, vec!["green", "tea", "benefit"]);
    }

    #[test]
    fn all_stopword_title_is_an_error() {
        let config = PipelineConfig::default();
        assert!(matches!(
            build_title_termset("The Of For", &config),
            Err(Error::EmptyTermset)
        ));
    }

    #[test]
    fn sentence_terms_keep_counts() {
        let config = PipelineConfig::default();
        let terms = process_sentence(&sentence("I drink coffee daily."), &config);
        let mut got: Vec<_> = terms
            .counts
            .iter()
            .map(|(t, c)| (t.as_str().to_string(), *c))
            .collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                ("coffe".into(), 1),
                ("daili".into(), 1),
                ("drink".into(), 1)
            ]
        );

        let terms = process_sentence(&sentence("Tea, especially green tea, is popular."), &config);
        assert_eq!(terms.count(&normalize("tea").unwrap()), 2);
        assert_eq!(terms.count(&normalize("especi").unwrap()), 1);
        assert_eq!(terms.count(&normalize("green").unwrap()), 1);
        assert_eq!(terms.count(&normalize("popular").unwrap()), 1);

        let empty = process_sentence(&sentence("."), &config);
        assert!(empty.counts.is_empty());
    }

    #[test]
    fn title_and_sentence_pipelines_agree() {
        let config = PipelineConfig::default();
        let text = "Objects manipulate reusable software components daily";
        let termset = build_title_termset(text, &config).unwrap();
        let terms = process_sentence(&sentence(text), &config);
        for t in &termset.terms {
            assert!(terms.count(t) >= 1, "term {t} missing from sentence path");
        }
        assert_eq!(termset.len(), terms.counts.len());
    }
}
