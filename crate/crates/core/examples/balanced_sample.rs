// Draws a sample balanced across the eight binary forms.

use neutral_rewriter::corpus::balanced_sample;
use neutral_rewriter::{count_forms, tokenize};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let templates = [
        "he said so", "she left early", "I met her", "the choice is hers", "his dog barked",
        "we called him", "he did it himself", "she asked herself",
    ];
    // "hers" is deliberately rare
    let corpus: Vec<String> = (0..400)
        .map(|i| {
            let t = if i % 50 == 3 { 3 } else { [0, 1, 2, 4, 5, 6, 7][i % 7] };
            format!("{} ({i})", templates[t])
        })
        .collect();

    let sample = balanced_sample(&corpus, 80, 42)?;
    println!("selected {} lines, quota {}", sample.lines.len(), sample.quota);
    for (form, n) in &sample.lines_per_form {
        println!("  {:<8} {n}", form.as_str());
    }
    for s in &sample.shortfall {
        println!("  short: {} ({} of {})", s.form.as_str(), s.selected, s.required);
    }
    println!("census of first line: {:?}", count_forms(&tokenize(&sample.lines[0])).total());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
