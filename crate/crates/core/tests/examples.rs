mod rewrite_sentence_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/rewrite_sentence.rs"));
}

#[test]
fn rewrite_sentence_example_runs() {
    rewrite_sentence_example::run_example().expect("rewrite_sentence example should run");
}

mod disambiguate_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/disambiguate.rs"));
}

#[test]
fn disambiguate_example_runs() {
    disambiguate_example::run_example().expect("disambiguate example should run");
}

mod agreement_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/agreement.rs"));
}

#[test]
fn agreement_example_runs() {
    agreement_example::run_example().expect("agreement example should run");
}

mod noun_lexicon_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/noun_lexicon.rs"));
}

#[test]
fn noun_lexicon_example_runs() {
    noun_lexicon_example::run_example().expect("noun_lexicon example should run");
}

mod evaluate_wer_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/evaluate_wer.rs"));
}

#[test]
fn evaluate_wer_example_runs() {
    evaluate_wer_example::run_example().expect("evaluate_wer example should run");
}

mod balanced_sample_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/balanced_sample.rs"));
}

#[test]
fn balanced_sample_example_runs() {
    balanced_sample_example::run_example().expect("balanced_sample example should run");
}

mod parallel_corpus_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/parallel_corpus.rs"));
}

#[test]
fn parallel_corpus_example_runs() {
    parallel_corpus_example::run_example().expect("parallel_corpus example should run");
}

mod external_annotations_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/external_annotations.rs"));
}

#[test]
fn external_annotations_example_runs() {
    external_annotations_example::run_example().expect("external_annotations example should run");
}
