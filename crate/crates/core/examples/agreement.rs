// Subject-verb agreement: verb pluralization and the verbs it reaches.

use neutral_rewriter::rewrite::pluralize_verb;
use neutral_rewriter::{rewrite, RewriteOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for verb in ["works", "has", "is", "was", "carries", "watches", "doesn't"] {
        println!("{verb:>8} -> {}", pluralize_verb(verb));
    }
    let options = RewriteOptions::default();
    for text in [
        "He works and studies at night.",
        "She, however, knows the answer.",
        "Does he know where she lives?",
        "He who laughs last laughs best.",
    ] {
        println!("{text}\n  -> {}", rewrite(text, &options, None).text());
    }
    let r = rewrite("He works and studies at night.", &options, None);
    if r.text() != "They work and study at night." {
        return Err(format!("unexpected output {:?}", r.text()).into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
