// Word error rate over line-aligned files, with the diff classifier.

use std::fs;

use neutral_rewriter::eval::{evaluate, EvalOptions};
use neutral_rewriter::{classify_diffs, tokenize, wer};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = ["He", "works", "."];
    let r = ["They", "work", "."];
    println!("wer({h:?}, {r:?}) = {:.3}", wer(&h, &r));

    for (hyp, reference) in [
        ("They work and works", "They work and work"),
        ("I saw them book", "I saw their book"),
        ("They 're gone", "They 've gone"),
    ] {
        let diffs = classify_diffs(&tokenize(hyp), &tokenize(reference));
        println!("{hyp:?} vs {reference:?}: {:?}", diffs.iter().map(|d| d.category).collect::<Vec<_>>());
    }

    let dir = std::env::temp_dir().join(format!("neutral-eval-{}", std::process::id()));
    fs::create_dir_all(&dir)?;
    let (src, hyp, reference) = (dir.join("src.txt"), dir.join("hyp.txt"), dir.join("ref.txt"));
    fs::write(&src, "He works in a company.\nShe saw her friend.\n")?;
    fs::write(&hyp, "They work in a company.\nThey saw them friend.\n")?;
    fs::write(&reference, "They work in a company.\nThey saw their friend.\n")?;
    let report = evaluate(&src, &hyp, &reference, EvalOptions::default())?;
    print!("{}", report.to_table());
    fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
