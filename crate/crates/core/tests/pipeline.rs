use neutral_rewriter::annotate::{classify_her, classify_his, read_external_annotations, HerRole, HisRole};
use neutral_rewriter::eval::{evaluate_lines, EvalOptions};
use neutral_rewriter::{annotate, rewrite, tokenize, RewriteOptions, Rewriter};

#[test]
fn external_poss_relation_overrides_heuristics() {
    // "her" followed by a noun would be read as a determiner; the parser says object
    let conllu = "\
1\tShe\tshe\tPRON\tPRP\t_\t2\tnsubj\t_\t_
2\tgave\tgive\tVERB\tVBD\t_\t0\troot\t_\t_
3\ther\tshe\tPRON\tPRP\t_\t2\tiobj\t_\t_
4\tflowers\tflower\tNOUN\tNNS\t_\t2\tobj\t_\t_
5\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_
";
    let ext = read_external_annotations(conllu.as_bytes()).unwrap();
    let a = &ext.sentences[0];
    assert_eq!(classify_her(a, 2).unwrap(), HerRole::Objective);
    let builtin = annotate(&tokenize("She gave her flowers ."));
    assert_eq!(classify_her(&builtin, 2).unwrap(), HerRole::PossessiveDet);
    let r = rewrite("She gave her flowers .", &RewriteOptions::default(), Some(a));
    assert_eq!(r.text(), "They gave them flowers .");
}

#[test]
fn his_roles() {
    let a = annotate(&tokenize("His own car is his ."));
    assert_eq!(classify_his(&a, 0).unwrap(), HisRole::PossessiveDet);
    assert_eq!(classify_his(&a, 4).unwrap(), HisRole::IndependentPossessive);
}

#[test]
fn rewrite_then_evaluate() {
    let src = ["He works in a company.", "She saw her friend.", "It is his."];
    let reference = ["They work in a company.", "They saw their friend.", "It is theirs."];
    let rw = Rewriter::new(RewriteOptions::default());
    let hyp: Vec<String> = rw.rewrite_batch(&src).iter().map(|r| r.text()).collect();
    let src: Vec<String> = src.iter().map(|s| s.to_string()).collect();
    let reference: Vec<String> = reference.iter().map(|s| s.to_string()).collect();
    let report = evaluate_lines(&src, &hyp, &reference, EvalOptions::default()).unwrap();
    assert_eq!(report.system_wer, 0.0);
    assert!(report.base_wer > 0.0);
}

#[test]
fn edit_log_replays_to_output() {
    for text in ["He's here and she knows him.", "Does she like his dog?", "  HE  ran  "] {
        let r = rewrite(text, &RewriteOptions::default(), None);
        let replayed = neutral_rewriter::rewrite::apply_edits(&tokenize(text), &r.edits).unwrap();
        assert_eq!(neutral_rewriter::detokenize(&replayed), r.text());
    }
}
