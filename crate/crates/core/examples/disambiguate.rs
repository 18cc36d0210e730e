// Shows how `her`, `his` and the clitic `'s` are classified before rewriting.

use neutral_rewriter::annotate::{classify_clitic_s, classify_her, classify_his};
use neutral_rewriter::{annotate, rewrite, tokenize, ContractionStyle, RewriteOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in [
        "I gave it to her.",
        "It is her book.",
        "It is his book.",
        "The book is his.",
        "He's worked hard.",
        "She's tired.",
    ] {
        let a = annotate(&tokenize(text));
        for i in 0..a.len() {
            match a.lower(i).as_str() {
                "her" => println!("{text:<20} her -> {:?}", classify_her(&a, i)?),
                "his" => println!("{text:<20} his -> {:?}", classify_his(&a, i)?),
                "'s" => println!("{text:<20} 's  -> {:?}", classify_clitic_s(&a, i)?),
                _ => {}
            }
        }
    }

    let expand = RewriteOptions {
        contraction_style: ContractionStyle::Expand,
        ..Default::default()
    };
    let r = rewrite("He's worked hard.", &expand, None);
    println!("expanded: {}", r.text());
    if r.text() != "They have worked hard." {
        return Err(format!("unexpected output {:?}", r.text()).into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
