use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nouns::NounCategory;
use crate::text::{is_apostrophe, Sentence};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EditCategory {
    Pronoun,
    Determiner,
    Reflexive,
    Clitic,
    VerbAgreement,
    Noun,
    Title,
}

impl EditCategory {
    pub const ALL: [EditCategory; 7] = [
        EditCategory::Pronoun,
        EditCategory::Determiner,
        EditCategory::Reflexive,
        EditCategory::Clitic,
        EditCategory::VerbAgreement,
        EditCategory::Noun,
        EditCategory::Title,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            EditCategory::Pronoun => "PRONOUN",
            EditCategory::Determiner => "DETERMINER",
            EditCategory::Reflexive => "REFLEXIVE",
            EditCategory::Clitic => "CLITIC",
            EditCategory::VerbAgreement => "VERB_AGREEMENT",
            EditCategory::Noun => "NOUN",
            EditCategory::Title => "TITLE",
        }
    }
}

/// One replacement of the token span `span.0..span.1` of the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edit {
    pub span: (usize, usize),
    /// Source surfaces joined by single spaces.
    pub original: String,
    pub replacement: String,
    pub category: EditCategory,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub noun_category: Option<NounCategory>,
}

impl Edit {
    pub fn new(
        sentence: &Sentence,
        span: (usize, usize),
        replacement: impl Into<String>,
        category: EditCategory,
    ) -> Self {
        let original = sentence.tokens[span.0..span.1]
            .iter()
            .map(|t| t.surface.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        Edit {
            span,
            original,
            replacement: replacement.into(),
            category,
            noun_category: None,
        }
    }

    pub fn start(&self) -> usize {
        self.span.0
    }

    pub fn end(&self) -> usize {
        self.span.1
    }

    pub fn overlaps(&self, other: &Edit) -> bool {
        self.start() < other.end() && other.start() < self.end()
    }
}

/// Replays `edits` over `input`.
///
/// Each replacement takes over the leading whitespace of the first token it
/// replaces; the words of a multi-word replacement are joined by single
/// spaces. A clitic expanded into a full word ("'s" → "have") gets a space.
pub fn apply_edits(input: &Sentence, edits: &[Edit]) -> Result<Sentence> {
    let mut sorted: Vec<&Edit> = edits.iter().collect();
    sorted.sort_by_key(|e| e.span);
    for pair in sorted.windows(2) {
        if pair[0].overlaps(pair[1]) {
            return Err(Error::contract(format!(
                "overlapping edits at {:?} and {:?}",
                pair[0].span, pair[1].span
            )));
        }
    }

    let mut parts: Vec<(String, String)> = Vec::with_capacity(input.len());
    let mut next = sorted.into_iter().peekable();
    let mut i = 0;
    while i < input.len() {
        let Some(edit) = next.next_if(|e| e.start() == i) else {
            let t = &input.tokens[i];
            parts.push((t.leading_whitespace.clone(), t.surface.clone()));
            i += 1;
            continue;
        };
        if edit.end() > input.len() || edit.end() <= edit.start() {
            return Err(Error::contract(format!(
                "edit span {:?} invalid for a {}-token sentence",
                edit.span,
                input.len()
            )));
        }
        let expected = Edit::new(input, edit.span, "", edit.category).original;
        if expected != edit.original {
            return Err(Error::contract(format!(
                "edit at {:?} expects {:?} but the sentence has {:?}",
                edit.span, edit.original, expected
            )));
        }
        let first = &input.tokens[i];
        let mut ws = first.leading_whitespace.clone();
        let starts_with_apostrophe = |s: &str| s.chars().next().is_some_and(is_apostrophe);
        if ws.is_empty()
            && i > 0
            && starts_with_apostrophe(&first.surface)
            && !starts_with_apostrophe(&edit.replacement)
        {
            ws = " ".to_string();
        }
        for (k, word) in edit.replacement.split_whitespace().enumerate() {
            let lead = if k == 0 { ws.clone() } else { " ".to_string() };
            parts.push((lead, word.to_string()));
        }
        i = edit.end();
    }
    if let Some(e) = next.next() {
        return Err(Error::contract(format!(
            "edit span {:?} invalid for a {}-token sentence",
            e.span,
            input.len()
        )));
    }
    Ok(Sentence::from_parts(parts, input.trailing_whitespace.clone()))
}
