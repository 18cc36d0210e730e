//! Lexicon-driven replacement of gender-marked nouns.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rewrite::{match_case, Edit, EditCategory};
use crate::text::Sentence;

/// Longest source phrase, in tokens.
pub const MAX_PHRASE_TOKENS: usize = 5;

const BUILTIN: &str = include_str!("../data/nouns.tsv");
const PAPER_EXACT: &str = include_str!("../data/nouns_paper_exact.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NounCategory {
    JobTitle,
    FeminineForm,
    GenericMan,
}

impl NounCategory {
    pub const ALL: [NounCategory; 3] = [
        NounCategory::JobTitle,
        NounCategory::FeminineForm,
        NounCategory::GenericMan,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            NounCategory::JobTitle => "JOB_TITLE",
            NounCategory::FeminineForm => "FEMININE_FORM",
            NounCategory::GenericMan => "GENERIC_MAN",
        }
    }
}

impl fmt::Display for NounCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NounCategory {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        NounCategory::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown category {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounEntry {
    /// Lowercase source tokens.
    pub source: Vec<String>,
    pub target: String,
    pub category: NounCategory,
}

impl NounEntry {
    pub fn source_text(&self) -> String {
        self.source.join(" ")
    }
}

#[derive(Debug, Clone, Default)]
pub struct NounLexicon {
    entries: Vec<NounEntry>,
    /// First source token → entry indices, longest phrase first.
    index: HashMap<String, Vec<usize>>,
}

impl NounLexicon {
    /// The bundled lexicon, with plural sources mapped to plural targets.
    pub fn builtin() -> &'static NounLexicon {
        static LEX: OnceLock<NounLexicon> = OnceLock::new();
        LEX.get_or_init(|| NounLexicon::parse(BUILTIN, "nouns.tsv").expect("bundled lexicon parses"))
    }

    pub(crate) fn builtin_shared() -> Arc<NounLexicon> {
        static LEX: OnceLock<Arc<NounLexicon>> = OnceLock::new();
        LEX.get_or_init(|| Arc::new(NounLexicon::builtin().clone()))
            .clone()
    }

    /// The source noun rows before number normalization, inconsistencies included.
    pub fn paper_exact() -> &'static NounLexicon {
        static LEX: OnceLock<NounLexicon> = OnceLock::new();
        LEX.get_or_init(|| {
            NounLexicon::parse(PAPER_EXACT, "nouns_paper_exact.tsv").expect("bundled lexicon parses")
        })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text, &path.display().to_string())
    }

    /// Parses `source<TAB>target<TAB>category` rows. Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse(text: &str, source_name: &str) -> Result<Self> {
        let mut lex = NounLexicon::default();
        let mut seen: HashMap<String, usize> = HashMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line_no = n + 1;
            let line = raw.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Lexicon {
                source_name: source_name.to_string(),
                line: line_no,
                message,
            };
            let cols: Vec<&str> = line.split('\t').collect();
            let [source, target, category] = cols[..] else {
                return Err(err(format!(
                    "expected 3 tab-separated columns, found {}",
                    cols.len()
                )));
            };
            let tokens: Vec<String> = source.split_whitespace().map(str::to_lowercase).collect();
            if tokens.is_empty() || tokens.len() > MAX_PHRASE_TOKENS {
                return Err(err(format!(
                    "source phrase must have 1 to {MAX_PHRASE_TOKENS} tokens"
                )));
            }
            if target.trim().is_empty() {
                return Err(err("empty target phrase".to_string()));
            }
            let category: NounCategory = category.trim().parse().map_err(err)?;
            let key = tokens.join(" ");
            if let Some(first) = seen.insert(key.clone(), line_no) {
                return Err(err(format!(
                    "duplicate source phrase {key:?} (first defined at line {first})"
                )));
            }
            lex.entries.push(NounEntry {
                source: tokens,
                target: target.trim().to_string(),
                category,
            });
        }
        lex.build_index();
        Ok(lex)
    }

    fn build_index(&mut self) {
        self.index.clear();
        for (k, e) in self.entries.iter().enumerate() {
            self.index.entry(e.source[0].clone()).or_default().push(k);
        }
        for ids in self.index.values_mut() {
            ids.sort_by_key(|&k| std::cmp::Reverse(self.entries[k].source.len()));
        }
    }

    pub fn entries(&self) -> &[NounEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, source: &str) -> Option<&NounEntry> {
        let tokens: Vec<String> = source.split_whitespace().map(str::to_lowercase).collect();
        let first = tokens.first()?;
        self.index
            .get(first)?
            .iter()
            .map(|&k| &self.entries[k])
            .find(|e| e.source == tokens)
    }

    /// Longest entry whose source matches `words` from the start.
    fn longest_match(&self, words: &[String]) -> Option<&NounEntry> {
        let ids = self.index.get(words.first()?)?;
        ids.iter()
            .map(|&k| &self.entries[k])
            .find(|e| e.source.len() <= words.len() && e.source[..] == words[..e.source.len()])
    }
}

pub fn load_lexicon(path: impl AsRef<Path>) -> Result<NounLexicon> {
    NounLexicon::from_path(path)
}

fn noun_edit(s: &Sentence, span: (usize, usize), replacement: String, entry: &NounEntry) -> Edit {
    let mut edit = Edit::new(s, span, replacement, EditCategory::Noun);
    edit.noun_category = Some(entry.category);
    edit
}

/// Replaces lexicon phrases in `s`, longest match first, scanning left to
/// right. Matching is case-insensitive and token-aligned; a hyphenated token
/// that is not itself an entry is matched part by part ("chairman-elect").
pub fn neutralize_nouns(s: &Sentence, lex: &NounLexicon) -> Vec<Edit> {
    let lowers: Vec<String> = s.tokens.iter().map(|t| t.surface.to_lowercase()).collect();
    let mut edits = Vec::new();
    let mut i = 0;
    while i < lowers.len() {
        let window = &lowers[i..lowers.len().min(i + MAX_PHRASE_TOKENS)];
        if let Some(entry) = lex.longest_match(window) {
            let end = i + entry.source.len();
            let replacement = match_case(&s.tokens[i].surface, &entry.target);
            edits.push(noun_edit(s, (i, end), replacement, entry));
            i = end;
            continue;
        }
        let surface = &s.tokens[i].surface;
        if surface.contains('-') {
            let mut changed = None;
            let parts: Vec<String> = surface
                .split('-')
                .map(|part| match lex.get(part).filter(|e| e.source.len() == 1) {
                    Some(e) if !part.is_empty() => {
                        changed.get_or_insert(e);
                        match_case(part, &e.target)
                    }
                    _ => part.to_string(),
                })
                .collect();
            if let Some(entry) = changed {
                edits.push(noun_edit(s, (i, i + 1), parts.join("-"), entry));
            }
        }
        i += 1;
    }
    edits
}
