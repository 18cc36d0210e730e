// Feeds parser output in CoNLL-U form to the rewriter.

use neutral_rewriter::annotate::read_external_annotations;
use neutral_rewriter::{rewrite, RewriteOptions};

const PARSED: &str = "\
# text = The book is his.
1\tThe\tthe\tDET\tDT\t_\t2\tdet\t_\t_
2\tbook\tbook\tNOUN\tNN\t_\t4\tnsubj\t_\t_
3\tis\tbe\tAUX\tVBZ\t_\t4\tcop\t_\t_
4\this\the\tPRON\tPRP$\t_\t0\troot\t_\t_
5\t.\t.\tPUNCT\t.\t_\t4\tpunct\t_\t_

# text = She gave her notes away.
1\tShe\tshe\tPRON\tPRP\t_\t2\tnsubj\t_\t_
2\tgave\tgive\tVERB\tVBD\t_\t0\troot\t_\t_
3\ther\tshe\tPRON\tPRP$\t_\t4\tnmod:poss\t_\t_
4\tnotes\tnote\tNOUN\tNNS\t_\t2\tobj\t_\t_
5\taway\taway\tADV\tRB\t_\t2\tadvmod\t_\t_
6\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let external = read_external_annotations(PARSED.as_bytes())?;
    for w in &external.warnings {
        eprintln!("warning: {w}");
    }
    let options = RewriteOptions::default();
    for a in &external.sentences {
        let text = a.sentence.source_text.clone();
        let r = rewrite(&text, &options, Some(a));
        println!("{text}\n  -> {}", r.text());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
