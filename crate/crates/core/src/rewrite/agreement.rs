//! Subject-verb agreement for subjects rewritten from he/she to they.

use super::edit::{Edit, EditCategory};
use super::pronoun::match_case;
use crate::annotate::{
    is_clause_boundary, AnnotatedSentence, AnnotationSource, Pos, Relation, TagLexicon,
    SUBORDINATORS,
};
use crate::error::{Error, Result};
use crate::text::{is_apostrophe, normalize_clitic};

/// Tokens searched after the subject for its verb.
const HEAD_WINDOW: usize = 12;
/// Longest parenthetical skipped between subject and verb ("He, however, ...").
const PARENTHETICAL_WINDOW: usize = 8;

const IRREGULAR: &[(&str, &str)] = &[
    ("is", "are"),
    ("was", "were"),
    ("has", "have"),
    ("does", "do"),
    ("goes", "go"),
    ("isn't", "aren't"),
    ("wasn't", "weren't"),
    ("hasn't", "haven't"),
    ("doesn't", "don't"),
    ("echoes", "echo"),
    ("vetoes", "veto"),
    ("torpedoes", "torpedo"),
    ("embargoes", "embargo"),
    ("focuses", "focus"),
    ("biases", "bias"),
    ("buses", "bus"),
    ("gases", "gas"),
    ("aches", "ache"),
    ("quizzes", "quiz"),
];

const MODALS: &[&str] = &[
    "can", "could", "will", "would", "shall", "should", "may", "might", "must", "ought",
];

/// Auxiliaries that invert with their subject in questions ("Does she know?").
const INVERTING_AUX: &[&str] = &["is", "was", "has", "does", "isn't", "wasn't", "hasn't", "doesn't"];
const WH_WORDS: &[&str] = &["what", "where", "when", "why", "how", "who", "which", "whom"];

/// Plural (non-third-singular) form of a third-person-singular verb.
/// Anything else, modals and past forms included, is returned unchanged.
pub fn pluralize_verb(form: &str) -> String {
    let apostrophe = form.chars().find(|&c| is_apostrophe(c));
    let lower = normalize_clitic(form);
    if let Some(&(_, plural)) = IRREGULAR.iter().find(|(sg, _)| *sg == lower) {
        let plural = match apostrophe {
            Some(a) if a != '\'' => plural.replace('\'', &a.to_string()),
            _ => plural.to_string(),
        };
        return match_case(form, &plural);
    }
    if apostrophe.is_some()
        || MODALS.contains(&lower.as_str())
        || !lower.chars().all(char::is_alphabetic)
        || lower.chars().count() < 3
        || !lower.ends_with('s')
        || lower.ends_with("ss")
        || lower.ends_with("us")
        || lower.ends_with("is")
    {
        return form.to_string();
    }
    let plural = if let Some(stem) = lower.strip_suffix("ies") {
        if stem.chars().count() <= 1 {
            // dies → die, lies → lie
            lower[..lower.len() - 1].to_string()
        } else {
            format!("{stem}y")
        }
    } else if ["sses", "xes", "zzes", "ches", "shes"]
        .iter()
        .any(|s| lower.ends_with(s))
    {
        lower[..lower.len() - 2].to_string()
    } else {
        lower[..lower.len() - 1].to_string()
    };
    match_case(form, &plural)
}

fn verb_edit(a: &AnnotatedSentence, i: usize) -> Option<Edit> {
    let surface = &a.sentence.tokens[i].surface;
    let plural = pluralize_verb(surface);
    (plural != *surface).then(|| Edit::new(&a.sentence, (i, i + 1), plural, EditCategory::VerbAgreement))
}

/// Agrees a finite 3sg verb; the clitic `'s` is rewritten separately.
fn agree(a: &AnnotatedSentence, i: usize, edits: &mut Vec<Edit>) {
    if a.pos(i) == Pos::VerbFin3sg && a.lower(i) != "'s" {
        edits.extend(verb_edit(a, i));
    }
}

fn next_non_adverb(a: &AnnotatedSentence, from: usize) -> Option<usize> {
    (from..a.len()).find(|&j| a.pos(j) != Pos::Adv)
}

fn next_finite(a: &AnnotatedSentence, from: usize) -> Option<usize> {
    for j in from..a.len() {
        if is_clause_boundary(&a.lower(j)) {
            return None;
        }
        if a.pos(j).is_finite() {
            return Some(j);
        }
    }
    None
}

/// A token tagged as a plural noun that could be a 3sg verb ("laughs").
/// Only trusted where a verb is required, as after a relative clause.
fn noun_with_verb_reading(a: &AnnotatedSentence, j: usize) -> bool {
    let w = a.lower(j);
    a.pos(j) == Pos::Noun
        && w.ends_with('s')
        && TagLexicon::builtin().has(&pluralize_verb(&w), Pos::VerbFinPl)
}

/// The verb of the main clause after a relative clause ending before `from`.
fn main_verb_after(a: &AnnotatedSentence, from: usize, edits: &mut Vec<Edit>) -> Option<usize> {
    for j in from..a.len() {
        if is_clause_boundary(&a.lower(j)) {
            return None;
        }
        if a.pos(j).is_finite() {
            return Some(j);
        }
        if noun_with_verb_reading(a, j) {
            edits.extend(verb_edit(a, j));
            return None;
        }
    }
    None
}

/// Finds the verb governed by the subject at `subject`, pluralizing the verb
/// of a subject relative clause on the way ("They who work ...").
fn find_head_verb(a: &AnnotatedSentence, subject: usize, edits: &mut Vec<Edit>) -> Option<usize> {
    let end = a.len().min(subject + 1 + HEAD_WINDOW);
    let mut j = subject + 1;
    while j < end {
        let w = a.lower(j);
        let pos = a.pos(j);
        if pos == Pos::Adv {
            j += 1;
        } else if w == "," {
            let close = (j + 1..a.len().min(j + 1 + PARENTHETICAL_WINDOW)).find(|&k| a.lower(k) == ",")?;
            j = close + 1;
        } else if matches!(w.as_str(), "who" | "that" | "which" | "whom") {
            let k = next_non_adverb(a, j + 1)?;
            if a.pos(k).is_finite() {
                // the relative pronoun is the clause's subject
                agree(a, k, edits);
                return main_verb_after(a, k + 1, edits);
            }
            // the clause has a subject of its own; skip its verb
            let inner = next_finite(a, k)?;
            return main_verb_after(a, inner + 1, edits);
        } else if pos.is_finite() {
            return Some(j);
        } else {
            return None;
        }
    }
    None
}

/// Pluralizes the verbs agreeing with the rewritten subject at
/// `subject_index`: its head verb, verbs coordinated with it, and an
/// inverted auxiliary in questions.
pub fn fix_agreement(a: &AnnotatedSentence, subject_index: usize) -> Result<Vec<Edit>> {
    match a.sentence.tokens.get(subject_index) {
        Some(_) if matches!(a.lower(subject_index).as_str(), "he" | "she") => {}
        _ => {
            return Err(Error::contract(format!(
                "token {subject_index} is not a he/she subject"
            )))
        }
    }
    let mut edits = Vec::new();

    if subject_index > 0 {
        let aux = subject_index - 1;
        let before = aux.checked_sub(1).map(|k| a.lower(k));
        let clause_initial = before.as_deref().is_none_or(|w| {
            is_clause_boundary(w) || WH_WORDS.contains(&w) || matches!(w, "," | "and" | "or" | "but" | "so")
        });
        if INVERTING_AUX.contains(&a.lower(aux).as_str()) && clause_initial {
            edits.extend(verb_edit(a, aux));
            return Ok(edits);
        }
    }

    let Some(head) = find_head_verb(a, subject_index, &mut edits) else {
        return Ok(edits);
    };
    agree(a, head, &mut edits);

    // coordinated verbs sharing the subject
    let mut current = head;
    let mut k = head + 1;
    while k < a.len() {
        let w = a.lower(k);
        if is_clause_boundary(&w) || SUBORDINATORS.contains(&w.as_str()) {
            break;
        }
        let external_conj = a.source == AnnotationSource::External
            && a.annotations[k].relation == Some(Relation::Conj)
            && a.annotations[k].head == Some(current)
            && a.pos(k).is_finite();
        if external_conj {
            agree(a, k, &mut edits);
            current = k;
        } else if matches!(w.as_str(), "and" | "or" | "but" | "nor" | ",") {
            if let Some(m) = next_non_adverb(a, k + 1).filter(|&m| a.pos(m).is_finite()) {
                agree(a, m, &mut edits);
                current = m;
                k = m;
            }
        }
        k += 1;
    }
    Ok(edits)
}
