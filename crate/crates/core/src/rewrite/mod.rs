//! The rule-based rewriter: binary pronouns and determiners to singular
//! they, with clitic handling, subject-verb agreement, and optional noun and
//! title rewriting.

mod agreement;
mod edit;
mod pronoun;

use std::collections::{BTreeMap, VecDeque};
use std::path::Path;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use agreement::{fix_agreement, pluralize_verb};
pub use edit::{apply_edits, Edit, EditCategory};
pub use pronoun::{map_clitic, map_pronoun, match_case, BinaryForm, GrammaticalRole, PronounMap};

use crate::annotate::{
    annotate, classify_clitic_s, classify_her, classify_his, AnnotatedSentence,
    AnnotationWarning, CliticRole, HerRole, HisRole,
};
use crate::error::{Error, Result};
use crate::nouns::{neutralize_nouns, NounLexicon};
use crate::text::{detokenize, normalize_clitic, tokenize, Sentence};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ContractionStyle {
    /// "he's" → "they're"
    #[default]
    Preserve,
    /// "he's" → "they are"
    Expand,
}

/// User-supplied replacements for titles such as "Mrs" and "Miss".
/// Keys are lowercase and carry no trailing period.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TitleMap {
    entries: BTreeMap<String, String>,
}

impl TitleMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, title: &str, replacement: &str) {
        self.entries.insert(
            title.trim_end_matches('.').to_lowercase(),
            replacement.trim_end_matches('.').to_string(),
        );
    }

    pub fn get(&self, title: &str) -> Option<&str> {
        self.entries
            .get(&title.trim_end_matches('.').to_lowercase())
            .map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Parses `title<TAB>replacement` rows; `#` lines are comments.
    pub fn parse(text: &str, source_name: &str) -> Result<Self> {
        let mut map = TitleMap::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let cols: Vec<&str> = line.split('\t').collect();
            match cols[..] {
                [title, replacement] if !title.is_empty() && !replacement.is_empty() => {
                    map.insert(title, replacement)
                }
                _ => {
                    return Err(Error::Lexicon {
                        source_name: source_name.to_string(),
                        line: n + 1,
                        message: format!("expected title<TAB>replacement, found {line:?}"),
                    })
                }
            }
        }
        Ok(map)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RewriteOptions {
    pub neutralize_nouns: bool,
    pub contraction_style: ContractionStyle,
    /// Titles are left alone unless a map is given.
    pub title_map: Option<TitleMap>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RewriteResult {
    pub output: Sentence,
    pub edits: Vec<Edit>,
    /// FNV-1a hash of the input text.
    pub input_hash: u64,
    #[serde(skip)]
    pub warnings: Vec<AnnotationWarning>,
}

impl RewriteResult {
    pub fn text(&self) -> String {
        detokenize(&self.output)
    }

    pub fn is_unchanged(&self) -> bool {
        self.edits.is_empty()
    }

    /// `{"output": ..., "edits": [...]}` as a single JSON line.
    pub fn to_json_line(&self) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            output: String,
            input_hash: String,
            edits: &'a [Edit],
        }
        serde_json::to_string(&Line {
            output: self.text(),
            input_hash: format!("{:016x}", self.input_hash),
            edits: &self.edits,
        })
        .expect("edit log serializes")
    }
}

pub fn fnv1a(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0000_0100_0000_01b3)
    })
}

/// Rewrites one line with the bundled noun lexicon.
pub fn rewrite(
    text: &str,
    options: &RewriteOptions,
    annotations: Option<&AnnotatedSentence>,
) -> RewriteResult {
    Rewriter::new(options.clone()).rewrite(text, annotations)
}

/// Lines handed to the thread pool at a time by the batch drivers.
pub const BATCH_SIZE: usize = 1024;

#[derive(Debug, Clone)]
pub struct Rewriter {
    options: RewriteOptions,
    lexicon: Arc<NounLexicon>,
}

impl Rewriter {
    pub fn new(options: RewriteOptions) -> Self {
        Rewriter {
            options,
            lexicon: NounLexicon::builtin_shared(),
        }
    }

    pub fn with_lexicon(mut self, lexicon: NounLexicon) -> Self {
        self.lexicon = Arc::new(lexicon);
        self
    }

    pub fn options(&self) -> &RewriteOptions {
        &self.options
    }

    pub fn lexicon(&self) -> &NounLexicon {
        &self.lexicon
    }

    pub fn rewrite(&self, text: &str, external: Option<&AnnotatedSentence>) -> RewriteResult {
        let sentence = tokenize(text);
        let mut warnings = Vec::new();
        let annotated = match external {
            Some(ext) if same_tokens(&ext.sentence, &sentence) => AnnotatedSentence {
                sentence: sentence.clone(),
                annotations: ext.annotations.clone(),
                source: ext.source,
            },
            Some(ext) => {
                warnings.push(AnnotationWarning::TextMismatch {
                    external: ext.len(),
                    ours: sentence.len(),
                });
                annotate(&sentence)
            }
            None => annotate(&sentence),
        };

        let mut edits = self.pronoun_edits(&annotated);
        if self.options.neutralize_nouns {
            edits.extend(neutralize_nouns(&sentence, &self.lexicon));
        }
        if let Some(titles) = &self.options.title_map {
            edits.extend(title_edits(&sentence, titles));
        }
        let edits = resolve_overlaps(edits);
        let output = apply_edits(&sentence, &edits).expect("rewriter edits are consistent");

        RewriteResult {
            output,
            edits,
            input_hash: fnv1a(text),
            warnings,
        }
    }

    fn pronoun_edits(&self, a: &AnnotatedSentence) -> Vec<Edit> {
        let s = &a.sentence;
        let mut edits = Vec::new();
        let mut subjects = Vec::new();
        let mut push = |i: usize, neutral: &str, category: EditCategory| {
            let replacement = match_case(&s.tokens[i].surface, neutral);
            edits.push(Edit::new(s, (i, i + 1), replacement, category));
        };
        for i in 0..a.len() {
            let lower = normalize_clitic(&s.tokens[i].surface);
            if lower == "'s" {
                let role = classify_clitic_s(a, i).expect("token is 's");
                if role != CliticRole::Possessive {
                    let neutral = map_clitic("they", role, self.options.contraction_style)
                        .expect("verbal clitic has a mapping");
                    // keep the source's apostrophe ("’s" → "’re")
                    let apostrophe = s.tokens[i].surface.chars().next().unwrap_or('\'');
                    let neutral = neutral.replace('\'', &apostrophe.to_string());
                    push(i, &neutral, EditCategory::Clitic);
                }
                continue;
            }
            let Some(form) = BinaryForm::from_surface(&lower) else {
                continue;
            };
            let (role, category) = match form {
                BinaryForm::He | BinaryForm::She => {
                    subjects.push(i);
                    (GrammaticalRole::Nominative, EditCategory::Pronoun)
                }
                BinaryForm::Him => (GrammaticalRole::Objective, EditCategory::Pronoun),
                BinaryForm::Her => match classify_her(a, i).expect("token is her") {
                    HerRole::Objective => (GrammaticalRole::Objective, EditCategory::Pronoun),
                    HerRole::PossessiveDet => {
                        (GrammaticalRole::PossessiveDet, EditCategory::Determiner)
                    }
                },
                BinaryForm::His => match classify_his(a, i).expect("token is his") {
                    HisRole::PossessiveDet => {
                        (GrammaticalRole::PossessiveDet, EditCategory::Determiner)
                    }
                    HisRole::IndependentPossessive => {
                        (GrammaticalRole::IndependentPossessive, EditCategory::Pronoun)
                    }
                },
                BinaryForm::Hers => (GrammaticalRole::IndependentPossessive, EditCategory::Pronoun),
                BinaryForm::Himself | BinaryForm::Herself => {
                    (GrammaticalRole::Reflexive, EditCategory::Reflexive)
                }
            };
            let neutral = map_pronoun(&lower, role).expect("role is valid for form");
            push(i, neutral, category);
        }
        for subject in subjects {
            edits.extend(fix_agreement(a, subject).expect("subject is he/she"));
        }
        edits
    }

    /// Rewrites a batch in parallel; results keep the input order.
    pub fn rewrite_batch<S: AsRef<str> + Sync>(&self, lines: &[S]) -> Vec<RewriteResult> {
        lines
            .par_iter()
            .map(|l| self.rewrite(l.as_ref(), None))
            .collect()
    }

    pub fn rewrite_batch_annotated<S: AsRef<str> + Sync>(
        &self,
        lines: &[S],
        annotations: &[Option<&AnnotatedSentence>],
    ) -> Vec<RewriteResult> {
        lines
            .par_iter()
            .enumerate()
            .map(|(k, l)| self.rewrite(l.as_ref(), annotations.get(k).copied().flatten()))
            .collect()
    }

    /// Streaming variant: lines in, results out in the same order, with at
    /// most [`BATCH_SIZE`] lines in flight.
    pub fn rewrite_lines<I>(&self, lines: I) -> RewriteLines<'_, I::IntoIter>
    where
        I: IntoIterator<Item = String>,
    {
        RewriteLines {
            rewriter: self,
            lines: lines.into_iter(),
            ready: VecDeque::new(),
        }
    }
}

pub struct RewriteLines<'r, I> {
    rewriter: &'r Rewriter,
    lines: I,
    ready: VecDeque<RewriteResult>,
}

impl<I: Iterator<Item = String>> Iterator for RewriteLines<'_, I> {
    type Item = RewriteResult;

    fn next(&mut self) -> Option<RewriteResult> {
        if self.ready.is_empty() {
            let chunk: Vec<String> = self.lines.by_ref().take(BATCH_SIZE).collect();
            self.ready.extend(self.rewriter.rewrite_batch(&chunk));
        }
        self.ready.pop_front()
    }
}

fn same_tokens(a: &Sentence, b: &Sentence) -> bool {
    a.len() == b.len()
        && a.tokens
            .iter()
            .zip(&b.tokens)
            .all(|(x, y)| normalize_clitic(&x.surface) == normalize_clitic(&y.surface))
}

fn title_edits(s: &Sentence, titles: &TitleMap) -> Vec<Edit> {
    let mut edits = Vec::new();
    for (i, t) in s.tokens.iter().enumerate() {
        if let Some(target) = titles.get(&t.surface) {
            let mut replacement = match_case(&t.surface, target);
            if t.surface.ends_with('.') {
                replacement.push('.');
            }
            edits.push(Edit::new(s, (i, i + 1), replacement, EditCategory::Title));
        }
    }
    edits
}

/// Sorts edits and drops any that overlap an earlier one. Pronoun and
/// agreement edits come first, so they win over noun and title edits.
fn resolve_overlaps(edits: Vec<Edit>) -> Vec<Edit> {
    let mut kept: Vec<Edit> = Vec::with_capacity(edits.len());
    for e in edits {
        if !kept.iter().any(|k| k.overlaps(&e)) {
            kept.push(e);
        }
    }
    kept.sort_by_key(|e| e.span);
    kept
}
