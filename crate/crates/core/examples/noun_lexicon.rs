// Optional noun rewriting with the bundled and the as-printed lexicons.

use neutral_rewriter::{rewrite, NounLexicon, RewriteOptions, Rewriter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let builtin = NounLexicon::builtin();
    let exact = NounLexicon::paper_exact();
    println!("bundled lexicon: {} entries, as printed: {}", builtin.len(), exact.len());

    let options = RewriteOptions {
        neutralize_nouns: true,
        ..Default::default()
    };
    for text in [
        "The chairman spoke to the actresses.",
        "He is the best man for the job.",
        "Mankind built a man-made lake.",
        "The usherettes left.",
    ] {
        let r = rewrite(text, &options, None);
        println!("{text}\n  -> {}", r.text());
        for e in r.edits.iter().filter(|e| e.noun_category.is_some()) {
            println!("     {} -> {} [{}]", e.original, e.replacement, e.noun_category.unwrap());
        }
    }

    let printed = Rewriter::new(options).with_lexicon(exact.clone());
    println!("as printed: {}", printed.rewrite("The usherettes left.", None).text());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
