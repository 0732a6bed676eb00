//! Customize the linguistic pipeline: a domain stoplist, a small lemma
//! lexicon that folds synonyms together, and stemming switched off.
//!
//! ```sh
//! cargo run --example custom_pipeline
//! ```

use blogsum::linguistic::{normalize, Stemmer};
use blogsum::{
    parse_document, summarize, InputFormat, PipelineConfig, SummaryOptions, SummarySize,
};

const SAMPLE: &str = "\
Cheap Cars

Automobiles are getting expensive. Trains run on fixed rails. A good car \
does not have to cost much. Motorcars from the nineties are cheap and \
sturdy. Helicopters are never cheap.
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = parse_document(SAMPLE.as_bytes(), InputFormat::Plain, "sample")?;

    let mut config = PipelineConfig::default();
    // fold vocabulary variants into one lemma so "Automobiles" and
    // "Motorcars" count as the title word "cars"
    for (variant, lemma) in [
        ("cars", "car"),
        ("automobile", "car"),
        ("automobiles", "car"),
        ("motorcar", "car"),
        ("motorcars", "car"),
        ("cheaper", "cheap"),
    ] {
        config
            .lexicon
            .insert(normalize(variant).unwrap(), normalize(lemma).unwrap());
    }
    // treat a domain word as noise on top of the default stoplist
    config.stoplist.insert(normalize("nineties").unwrap());
    // with the lexicon doing the folding, skip stemming entirely
    config.stemmer = Stemmer::None;

    let options = SummaryOptions {
        size: SummarySize::Count(3),
        ..SummaryOptions::default()
    };
    let summary = summarize(&doc, &config, &options)?;
    for s in &summary.selected {
        println!("[{}] (score {}) {}", s.sentence.index, s.score, s.sentence.raw_text);
    }
    Ok(())
}
