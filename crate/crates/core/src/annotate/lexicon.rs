use std::collections::HashMap;
use std::path::Path;
use std::sync::OnceLock;

use super::Pos;
use crate::error::{Error, Result};

const CLOSED_CLASS: &str = include_str!("../../data/closed_class.tsv");
const VERBS: &str = include_str!("../../data/verbs.tsv");

/// Word form → candidate tags, first tag is the default reading.
#[derive(Debug, Clone, Default)]
pub struct TagLexicon {
    entries: HashMap<String, Vec<Pos>>,
}

impl TagLexicon {
    /// The lexicon shipped with the crate.
    pub fn builtin() -> &'static TagLexicon {
        static LEXICON: OnceLock<TagLexicon> = OnceLock::new();
        LEXICON.get_or_init(|| {
            let mut lex = TagLexicon::default();
            lex.extend_from_tsv(CLOSED_CLASS, "closed_class.tsv")
                .expect("bundled closed-class lexicon is well formed");
            lex.extend_from_tsv(VERBS, "verbs.tsv")
                .expect("bundled verb lexicon is well formed");
            lex
        })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut lex = TagLexicon::default();
        lex.extend_from_tsv(&text, &path.display().to_string())?;
        Ok(lex)
    }

    /// Adds `form<TAB>tag` rows. Blank lines and `#` comments are ignored.
    pub fn extend_from_tsv(&mut self, text: &str, source_name: &str) -> Result<()> {
        for (n, line) in text.lines().enumerate() {
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Lexicon {
                source_name: source_name.to_string(),
                line: n + 1,
                message,
            };
            let cols: Vec<&str> = line.split('\t').collect();
            let [form, tag] = cols[..] else {
                return Err(err(format!("expected 2 columns, found {}", cols.len())));
            };
            let tag: Pos = tag.parse().map_err(|_| err(format!("unknown tag {tag:?}")))?;
            self.insert(form, tag);
        }
        Ok(())
    }

    pub fn insert(&mut self, form: &str, tag: Pos) {
        let tags = self.entries.entry(form.to_lowercase()).or_default();
        if !tags.contains(&tag) {
            tags.push(tag);
        }
    }

    /// Candidate tags for a lowercase form.
    pub fn tags(&self, lower: &str) -> Option<&[Pos]> {
        self.entries.get(lower).map(Vec::as_slice)
    }

    pub fn has(&self, lower: &str, tag: Pos) -> bool {
        self.tags(lower).is_some_and(|t| t.contains(&tag))
    }

    pub fn contains(&self, lower: &str) -> bool {
        self.entries.contains_key(lower)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
