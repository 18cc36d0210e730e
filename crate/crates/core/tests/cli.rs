use std::fs;
use std::io::Cursor;

use neutral_rewriter::cli::{run, EXIT_DATA, EXIT_OK, EXIT_USAGE};

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn neutral(args: &[&str], stdin: &str) -> Outcome {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("neutral").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    Outcome {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

#[test]
fn rewrite_streams_stdin_to_stdout() {
    let o = neutral(&["rewrite"], "He opened the door.\nShe works in a company.\n");
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout, "They opened the door.\nThey work in a company.\n");
    assert!(o.stderr.is_empty());
}

#[test]
fn rewrite_options() {
    let o = neutral(&["rewrite", "--contractions", "expand"], "He's worked.\n");
    assert_eq!(o.stdout, "They have worked.\n");
    let o = neutral(&["rewrite"], "The chairman left.\n");
    assert_eq!(o.stdout, "The chairman left.\n");
    let o = neutral(&["rewrite", "--nouns"], "The chairman left.\n");
    assert_eq!(o.stdout, "The chairperson left.\n");
    let o = neutral(&["rewrite", "--nouns", "--paper-exact"], "The usherettes left.\n");
    assert_eq!(o.stdout, "The usher left.\n");
}

#[test]
fn rewrite_json_edit_log() {
    let o = neutral(&["rewrite", "--json"], "He ran\n");
    let v: serde_json::Value = serde_json::from_str(o.stdout.trim()).unwrap();
    assert_eq!(v["output"], "They ran");
    assert_eq!(v["edits"][0]["category"], "PRONOUN");
}

#[test]
fn rewrite_files_titles_and_lexicon() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    let output = dir.path().join("out.txt");
    let titles = dir.path().join("titles.tsv");
    let lexicon = dir.path().join("lex.tsv");
    fs::write(&input, "Mrs. Smith met the foreman.\n").unwrap();
    fs::write(&titles, "Mrs\tMx\n").unwrap();
    fs::write(&lexicon, "foreman\tlead\tJOB_TITLE\n").unwrap();
    let o = neutral(
        &[
            "rewrite",
            input.to_str().unwrap(),
            "-o",
            output.to_str().unwrap(),
            "--titles",
            titles.to_str().unwrap(),
            "--nouns",
            "--lexicon",
            lexicon.to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(fs::read_to_string(&output).unwrap(), "Mx. Smith met the lead.\n");
}

#[test]
fn conllu_annotations_drive_disambiguation() {
    let dir = tempfile::tempdir().unwrap();
    let conllu = dir.path().join("a.conllu");
    fs::write(
        &conllu,
        "# text = I saw her .\n\
         1\tI\tI\tPRON\tPRP\t_\t2\tnsubj\t_\t_\n\
         2\tsaw\tsee\tVERB\tVBD\t_\t0\troot\t_\t_\n\
         3\ther\tshe\tPRON\tPRP\t_\t2\tobj\t_\t_\n\
         4\t.\t.\tPUNCT\t.\t_\t2\tpunct\t_\t_\n",
    )
    .unwrap();
    let o = neutral(&["rewrite", "--conllu", conllu.to_str().unwrap()], "I saw her .\nHe left .\n");
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(o.stdout, "I saw them .\nThey left .\n");

    fs::write(&conllu, "1\tI\n").unwrap();
    let o = neutral(&["rewrite", "--conllu", conllu.to_str().unwrap()], "x\n");
    assert_eq!(o.code, EXIT_DATA);
    assert!(o.stderr.contains("line 1"), "{}", o.stderr);
}

#[test]
fn eval_reports_and_alignment_errors() {
    let dir = tempfile::tempdir().unwrap();
    let p = |n: &str| dir.path().join(n);
    fs::write(p("src"), "He works .\nShe left .\n").unwrap();
    fs::write(p("ref"), "They work .\nThey left .\n").unwrap();
    fs::write(p("short"), "They work .\n").unwrap();
    let path = |n: &str| p(n).to_str().unwrap().to_string();

    let o = neutral(&["eval", &path("src"), &path("ref"), &path("ref"), "--json"], "");
    assert_eq!(o.code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["system_wer"], 0.0);
    assert_eq!(v["n"], 2);
    assert!((v["base_wer"].as_f64().unwrap() - 50.0).abs() < 1e-9);

    let o = neutral(&["eval", &path("src"), &path("short"), &path("ref")], "");
    assert_eq!(o.code, EXIT_DATA);
    assert!(o.stderr.contains(&path("short")) && o.stderr.contains(&path("ref")), "{}", o.stderr);

    let o = neutral(&["eval", &path("src"), &path("ref"), &path("ref")], "");
    assert!(o.stdout.contains("system"));
}

#[test]
fn sample_and_parallel() {
    let corpus: String = ["he a", "she b", "her c", "hers d", "his e", "him f", "himself g", "herself h", "they i"]
        .iter()
        .map(|l| format!("{l}\n"))
        .collect();
    let o = neutral(&["sample", "--n", "8", "--seed", "3"], &corpus);
    assert_eq!(o.code, EXIT_OK);
    assert_eq!(o.stdout.lines().count(), 8);
    assert!(!o.stdout.contains("they i"));

    let o = neutral(&["sample", "--n", "16", "--json"], &corpus);
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["shortfall"].as_array().unwrap().len(), 8);
    assert!(o.stderr.contains("quota"));

    let dir = tempfile::tempdir().unwrap();
    let (src, tgt) = (dir.path().join("s"), dir.path().join("t"));
    let o = neutral(
        &["parallel", "--src", src.to_str().unwrap(), "--tgt", tgt.to_str().unwrap()],
        "He opened the door.\nThey left.\n",
    );
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(fs::read_to_string(&tgt).unwrap(), "They opened the door.\nThey left.\n");
    let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["changed"], 1);
}

#[test]
fn usage_errors_and_help() {
    let o = neutral(&[], "");
    assert_eq!(o.code, EXIT_USAGE);
    assert!(o.stderr.contains("Usage"));
    assert_eq!(neutral(&["rewrite", "--bogus"], "").code, EXIT_USAGE);
    assert_eq!(neutral(&["eval", "a"], "").code, EXIT_USAGE);
    assert_eq!(neutral(&["sample"], "").code, EXIT_USAGE);
    assert_eq!(neutral(&["rewrite", "--lexicon", "x", "--paper-exact"], "").code, EXIT_USAGE);
    let help = neutral(&["--help"], "");
    assert_eq!(help.code, EXIT_OK);
    assert!(help.stdout.contains("rewrite"));
    assert_eq!(neutral(&["--version"], "").code, EXIT_OK);
    let missing = neutral(&["rewrite", "/nonexistent/file"], "");
    assert_eq!(missing.code, EXIT_DATA);
    assert!(missing.stderr.contains("/nonexistent/file"));
}
