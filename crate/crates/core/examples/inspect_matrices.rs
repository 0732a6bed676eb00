//! Build the title-sentence matrix (term frequencies) and the presence
//! factor matrix (binary presence) for a document and print both, together
//! with the per-sentence scores they induce.
//!
//! ```sh
//! cargo run --example inspect_matrices
//! ```

use blogsum::scoring::{dump_matrices, score_all};
use blogsum::{
    build_title_termset, parse_document, process_sentence, rank_sentences, segment_sentences,
    InputFormat, PipelineConfig, ScoreVariant,
};

const SAMPLE: &str = "\
Green Tea Benefits

Green tea has many health benefits. I drink coffee daily. Green tea \
benefits your health.
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let doc = parse_document(SAMPLE.as_bytes(), InputFormat::Plain, "sample")?;
    let config = PipelineConfig::default();

    let termset = build_title_termset(&doc.title, &config)?;
    println!(
        "title termset ({} terms): {:?}\n",
        termset.len(),
        termset.terms.iter().map(|t| t.as_str()).collect::<Vec<_>>()
    );

    let sentences = segment_sentences(&doc.body)?;
    let terms: Vec<_> = sentences
        .sentences
        .iter()
        .map(|s| process_sentence(s, &config))
        .collect();
    let tsm = blogsum::build_tsm(&termset, &terms)?;
    let pfm = blogsum::build_pfm(&tsm);
    print!("{}", dump_matrices(&tsm, &pfm));

    println!("\nper-sentence scores (literal and coverage variants):");
    let literal = score_all(&tsm, &pfm, &sentences, ScoreVariant::Literal)?;
    let coverage = score_all(&tsm, &pfm, &sentences, ScoreVariant::Coverage)?;
    for (l, c) in literal.iter().zip(&coverage) {
        println!(
            "  S{}: literal {}, coverage {} ({} distinct title terms) -- {}",
            l.sentence.index, l.score, c.score, l.distinct_hits, l.sentence.raw_text
        );
    }

    println!("\nranked order:");
    for s in rank_sentences(literal) {
        println!("  S{} (score {})", s.sentence.index, s.score);
    }
    Ok(())
}
