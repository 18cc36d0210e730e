// Rewrites a few sentences with the default options and prints the edit log.

use neutral_rewriter::{rewrite, RewriteOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let options = RewriteOptions::default();
    for text in [
        "He opened the door.",
        "She works in a company.",
        "HE HURT HIMSELF, but she's fine.",
    ] {
        let result = rewrite(text, &options, None);
        println!("{text}\n  -> {}", result.text());
        for edit in &result.edits {
            println!(
                "     {:?} {:?} -> {:?} ({})",
                edit.span,
                edit.original,
                edit.replacement,
                edit.category.as_str()
            );
        }
    }
    let r = rewrite("He opened the door.", &options, None);
    if r.text() != "They opened the door." {
        return Err(format!("unexpected output {:?}", r.text()).into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
