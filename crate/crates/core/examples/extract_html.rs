//! Parse an HTML page into title, body, and comment regions, then show that
//! comments stay out of the summary.
//!
//! ```sh
//! cargo run --example extract_html [-- path/to/page.html]
//! ```

use blogsum::{parse_document, summarize, InputFormat, PipelineConfig, SummaryOptions};

const SAMPLE: &str = r#"<html>
<head><title>Green Tea Benefits</title></head>
<body>
  <div id="post">
    <p>Green tea has many health benefits. I drink coffee daily.</p>
    <p>Green tea benefits your health.</p>
  </div>
  <div id="comment-section">
    <div class="comment"><p>Green tea green tea green tea! Best post ever.</p></div>
    <div class="comment"><p>I disagree completely.</p></div>
  </div>
</body>
</html>"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (raw, source) = match std::env::args_os().nth(1) {
        Some(path) => (std::fs::read(&path)?, path.to_string_lossy().into_owned()),
        None => (SAMPLE.as_bytes().to_vec(), "built-in sample".to_string()),
    };
    let doc = parse_document(&raw, InputFormat::Html, &source)?;

    println!("title: {}", doc.title);
    println!("body:\n{}\n", doc.body);
    println!("{} comment region(s) set aside:", doc.comments.len());
    for (i, c) in doc.comments.iter().enumerate() {
        println!("  comment {}: {}", i + 1, c.replace('\n', " "));
    }

    let summary = summarize(&doc, &PipelineConfig::default(), &SummaryOptions::default())?;
    println!("\nsummary (comments never contribute, however spammy):");
    for s in &summary.selected {
        println!("  {}", s.sentence.raw_text);
    }
    Ok(())
}
