//! Summarize a plain-text blog page: title block, blank line, body.
//!
//! Run on the built-in sample, or pass a file path:
//!
//! ```sh
//! cargo run --example summarize_plain [-- path/to/page.txt]
//! ```

use blogsum::{parse_document, summarize, InputFormat, PipelineConfig, SummaryOptions};

const SAMPLE: &str = "\
Green Tea Benefits

Green tea has many health benefits. I drink coffee daily. Green tea \
benefits your health. Some people prefer water. Tea ceremonies are an \
art in themselves.
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (raw, source) = match std::env::args_os().nth(1) {
        Some(path) => (std::fs::read(&path)?, path.to_string_lossy().into_owned()),
        None => (SAMPLE.as_bytes().to_vec(), "built-in sample".to_string()),
    };
    let doc = parse_document(&raw, InputFormat::Plain, &source)?;

    let summary = summarize(&doc, &PipelineConfig::default(), &SummaryOptions::default())?;
    println!("title: {}", doc.title);
    println!("selected {} of the highest-scoring sentences:\n", summary.k);
    for s in &summary.selected {
        println!("  [{}] (score {}) {}", s.sentence.index, s.score, s.sentence.raw_text);
    }
    Ok(())
}
