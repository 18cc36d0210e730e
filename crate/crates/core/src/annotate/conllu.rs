//! Reader for CoNLL-U files produced by an external tagger/parser.

use std::fmt;
use std::io::BufRead;
use std::path::Path;

use super::{annotate, AnnotatedSentence, AnnotationSource, Pos, Relation, TokenAnnotation};
use crate::error::{Error, Result};
use crate::text::{normalize_clitic, tokenize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConlluWord {
    pub form: String,
    pub upos: String,
    pub xpos: String,
    pub feats: String,
    /// Zero-based head index; `None` for the root.
    pub head: Option<usize>,
    pub deprel: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConlluSentence {
    /// The `# text = ...` comment, when present.
    pub text: Option<String>,
    pub words: Vec<ConlluWord>,
    /// 1-based line number of the sentence's first line.
    pub line: usize,
}

impl ConlluSentence {
    /// The sentence text: the `# text` comment, or the forms joined by spaces.
    pub fn text(&self) -> String {
        self.text.clone().unwrap_or_else(|| {
            self.words
                .iter()
                .map(|w| w.form.as_str())
                .collect::<Vec<_>>()
                .join(" ")
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnnotationWarning {
    /// The external tokenization disagrees with ours; the sentence was
    /// annotated with the built-in tagger instead.
    TokenMismatch {
        sentence: usize,
        line: usize,
        external: usize,
        ours: usize,
    },
    /// Annotations passed to the rewriter belong to different text.
    TextMismatch { external: usize, ours: usize },
}

impl fmt::Display for AnnotationWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnnotationWarning::TokenMismatch {
                sentence,
                line,
                external,
                ours,
            } => write!(
                f,
                "sentence {} (line {line}): external annotation has {external} tokens, \
                 tokenizer produced {ours}; using built-in annotation",
                sentence + 1
            ),
            AnnotationWarning::TextMismatch { external, ours } => write!(
                f,
                "annotation ({external} tokens) does not match the input ({ours} tokens); \
                 using built-in annotation"
            ),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExternalAnnotations {
    pub sentences: Vec<AnnotatedSentence>,
    pub warnings: Vec<AnnotationWarning>,
}

/// Parses CoNLL-U. Multiword-token ranges (`3-4`) and empty nodes (`5.1`)
/// are skipped; only syntactic words are kept.
pub fn parse_conllu<R: BufRead>(reader: R) -> Result<Vec<ConlluSentence>> {
    let mut sentences = Vec::new();
    let mut current: Option<ConlluSentence> = None;

    for (n, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = n + 1;
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() {
            if let Some(s) = current.take() {
                sentences.push(s);
            }
            continue;
        }
        let sentence = current.get_or_insert_with(|| ConlluSentence {
            text: None,
            words: Vec::new(),
            line: line_no,
        });
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(text) = comment.trim_start().strip_prefix("text =") {
                sentence.text = Some(text.trim().to_string());
            }
            continue;
        }
        let err = |message: String| Error::Conllu {
            line: line_no,
            message,
        };
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != 10 {
            return Err(err(format!("expected 10 columns, found {}", cols.len())));
        }
        let id = cols[0];
        if id.contains('-') || id.contains('.') {
            continue;
        }
        let id: usize = id
            .parse()
            .map_err(|_| err(format!("invalid token id {id:?}")))?;
        if id != sentence.words.len() + 1 {
            return Err(err(format!(
                "token id {id} out of sequence, expected {}",
                sentence.words.len() + 1
            )));
        }
        let head = match cols[6] {
            "_" => None,
            h => match h.parse::<usize>() {
                Ok(0) => None,
                Ok(h) if h == id => return Err(err(format!("token {id} is its own head"))),
                Ok(h) => Some(h - 1),
                Err(_) => return Err(err(format!("invalid head {h:?}"))),
            },
        };
        sentence.words.push(ConlluWord {
            form: cols[1].to_string(),
            upos: cols[3].to_string(),
            xpos: cols[4].to_string(),
            feats: cols[5].to_string(),
            head,
            deprel: cols[7].to_string(),
        });
    }
    if let Some(s) = current.take() {
        sentences.push(s);
    }
    sentences.retain(|s| !s.words.is_empty());

    for s in &sentences {
        if let Some(bad) = s.words.iter().find_map(|w| w.head.filter(|&h| h >= s.words.len())) {
            return Err(Error::Conllu {
                line: s.line,
                message: format!("head {} beyond sentence length {}", bad + 1, s.words.len()),
            });
        }
    }
    Ok(sentences)
}

pub fn load_external_annotations(path: impl AsRef<Path>) -> Result<ExternalAnnotations> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    read_external_annotations(std::io::BufReader::new(file))
}

pub fn read_external_annotations<R: BufRead>(reader: R) -> Result<ExternalAnnotations> {
    let parsed = parse_conllu(reader)?;
    let mut sentences = Vec::with_capacity(parsed.len());
    let mut warnings = Vec::new();
    for (k, s) in parsed.iter().enumerate() {
        let ours = tokenize(&s.text());
        let aligned = ours.len() == s.words.len()
            && ours
                .tokens
                .iter()
                .zip(&s.words)
                .all(|(t, w)| normalize_clitic(&t.surface) == normalize_clitic(&w.form));
        if aligned {
            let annotations = s.words.iter().map(word_annotation).collect();
            sentences.push(AnnotatedSentence {
                sentence: ours,
                annotations,
                source: AnnotationSource::External,
            });
        } else {
            warnings.push(AnnotationWarning::TokenMismatch {
                sentence: k,
                line: s.line,
                external: s.words.len(),
                ours: ours.len(),
            });
            sentences.push(annotate(&ours));
        }
    }
    Ok(ExternalAnnotations {
        sentences,
        warnings,
    })
}

fn word_annotation(w: &ConlluWord) -> TokenAnnotation {
    TokenAnnotation {
        pos: map_pos(w),
        head: w.head,
        relation: Some(map_relation(&w.deprel)),
    }
}

fn map_relation(deprel: &str) -> Relation {
    match deprel {
        "nsubj" | "nsubj:pass" => Relation::Nsubj,
        "obj" | "iobj" | "dobj" => Relation::Obj,
        "nmod:poss" | "poss" => Relation::Poss,
        "conj" => Relation::Conj,
        _ => Relation::Other,
    }
}

fn map_pos(w: &ConlluWord) -> Pos {
    let lower = normalize_clitic(&w.form);
    match w.upos.as_str() {
        "NOUN" => Pos::Noun,
        "PROPN" => Pos::Propn,
        "ADJ" => Pos::Adj,
        "ADV" => Pos::Adv,
        "PRON" => Pos::Pron,
        "DET" => Pos::Det,
        "ADP" => Pos::Adp,
        "CCONJ" | "SCONJ" => Pos::Conj,
        "PUNCT" => Pos::Punct,
        "NUM" => Pos::Num,
        "PART" if matches!(lower.as_str(), "not" | "n't") => Pos::Adv,
        "VERB" | "AUX" => verb_pos(w, &lower),
        _ => Pos::Other,
    }
}

fn verb_pos(w: &ConlluWord, lower: &str) -> Pos {
    // "was" agrees with a singular subject even though it is past tense.
    if matches!(lower, "was" | "wasn't") {
        return Pos::VerbFin3sg;
    }
    match w.xpos.as_str() {
        "VBZ" => return Pos::VerbFin3sg,
        "VBP" | "VB" => return Pos::VerbFinPl,
        "VBD" => return Pos::VerbPast,
        "VBN" => return Pos::VerbPart,
        "VBG" => return Pos::VerbGer,
        "MD" => return Pos::Modal,
        _ => {}
    }
    let feat = |name: &str| {
        w.feats
            .split('|')
            .find_map(|f| f.strip_prefix(name)?.strip_prefix('='))
    };
    match (feat("VerbForm"), feat("Tense")) {
        (Some("Part"), Some("Past")) => Pos::VerbPart,
        (Some("Ger"), _) | (Some("Part"), _) => Pos::VerbGer,
        (_, Some("Past")) => Pos::VerbPast,
        (Some("Fin"), Some("Pres")) if feat("Person") == Some("3") && feat("Number") == Some("Sing") => {
            Pos::VerbFin3sg
        }
        (Some("Fin"), _) if feat("Mood") != Some("Ind") && w.upos == "AUX" => Pos::Modal,
        _ => Pos::VerbFinPl,
    }
}
