// Generates a gendered/neutral parallel corpus in memory.

use neutral_rewriter::{generate_parallel, RewriteOptions, Rewriter};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let input = "He opened the door.\nThey left early.\nShe has her own car.\nIs he coming?\n";
    let rewriter = Rewriter::new(RewriteOptions::default());
    let (mut src, mut tgt) = (Vec::new(), Vec::new());
    let stats = generate_parallel(input.as_bytes(), &rewriter, &mut src, &mut tgt)?;

    let (src, tgt) = (String::from_utf8(src)?, String::from_utf8(tgt)?);
    for (s, t) in src.lines().zip(tgt.lines()) {
        println!("{s:<25} | {t}");
    }
    println!("{}", serde_json::to_string(&stats)?);
    if src.lines().count() != tgt.lines().count() {
        return Err("line counts differ".into());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
