//! Score a candidate summary against a hand-written model summary with
//! sentence-level precision and recall.
//!
//! ```sh
//! cargo run --example evaluate_summary
//! ```

use blogsum::evaluation::evaluate_texts;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let candidate: Vec<String> = [
        "Green tea has many health benefits.",
        "Green tea benefits your health.",
        "Tea ceremonies are an art in themselves.",
    ]
    .map(String::from)
    .to_vec();

    let model: Vec<String> = [
        "Green tea has many health benefits.",
        "Green tea benefits your health.",
        "Some people prefer water.",
        "Drinking habits vary widely.",
    ]
    .map(String::from)
    .to_vec();

    let report = evaluate_texts(&candidate, &model)?;
    print!("{}", report.to_text());

    println!("\nmatched pairs (candidate index, model index):");
    for (c, m) in &report.matched_pairs {
        println!("  candidate {} <-> model {}", c, m);
    }

    println!(
        "\nexact fractions: P = {}/{}, R = {}/{}",
        report.precision.num, report.precision.den, report.recall.num, report.recall.den
    );
    Ok(())
}
