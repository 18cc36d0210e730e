use serde::{Deserialize, Serialize};

use super::{AnnotatedSentence, AnnotationSource, Pos, Relation, TagLexicon};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum HerRole {
    Objective,
    PossessiveDet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum HisRole {
    PossessiveDet,
    IndependentPossessive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CliticRole {
    Is,
    Has,
    Possessive,
}

/// Tokens examined after `her`/`his` when looking for the noun they modify.
pub const NOMINAL_SCAN_LIMIT: usize = 3;

/// Index of the nominal that the possessive candidate at `i` determines,
/// skipping adverbs and adjectives ("her very old book").
pub fn nominal_after<S: AsRef<str>>(tags: &[Pos], lowers: &[S], i: usize) -> Option<usize> {
    let end = tags.len().min(i + 1 + NOMINAL_SCAN_LIMIT);
    for j in i + 1..end {
        // "on her own", "his own car"
        if lowers[j].as_ref() == "own" {
            return Some(j);
        }
        match tags[j] {
            Pos::Adv | Pos::Adj => continue,
            Pos::Noun | Pos::Propn | Pos::Num => return Some(j),
            _ => return None,
        }
    }
    None
}

fn check_surface(a: &AnnotatedSentence, i: usize, expected: &str) -> Result<()> {
    match a.sentence.tokens.get(i) {
        Some(_) if a.lower(i) == expected => Ok(()),
        Some(t) => Err(Error::contract(format!(
            "token {i} is {:?}, expected {expected:?}",
            t.surface
        ))),
        None => Err(Error::contract(format!(
            "token index {i} out of range for a {}-token sentence",
            a.len()
        ))),
    }
}

/// The parser's verdict on `i`, when it supplied a relation.
fn external_possessive(a: &AnnotatedSentence, i: usize) -> Option<bool> {
    if a.source != AnnotationSource::External {
        return None;
    }
    a.annotations[i].relation.map(|r| r == Relation::Poss)
}

fn has_nominal_head(a: &AnnotatedSentence, i: usize) -> bool {
    let lowers: Vec<String> = (0..a.len()).map(|j| a.lower(j)).collect();
    nominal_after(&a.tags(), &lowers, i).is_some()
}

pub fn classify_her(a: &AnnotatedSentence, i: usize) -> Result<HerRole> {
    check_surface(a, i, "her")?;
    if external_possessive(a, i).unwrap_or_else(|| has_nominal_head(a, i)) {
        Ok(HerRole::PossessiveDet)
    } else {
        Ok(HerRole::Objective)
    }
}

pub fn classify_his(a: &AnnotatedSentence, i: usize) -> Result<HisRole> {
    check_surface(a, i, "his")?;
    if external_possessive(a, i).unwrap_or_else(|| has_nominal_head(a, i)) {
        Ok(HisRole::PossessiveDet)
    } else {
        Ok(HisRole::IndependentPossessive)
    }
}

/// Decides whether `'s` at `i` stands for "is", "has", or marks a possessive.
///
/// After he/she, a following past participle selects "has", since "'s" plus a
/// bare past form is ungrammatical. Participles listed as adjectives
/// ("tired", "married") and passives with a "by" phrase keep the "is" reading.
pub fn classify_clitic_s(a: &AnnotatedSentence, i: usize) -> Result<CliticRole> {
    check_surface(a, i, "'s")?;
    let host_is_target = i > 0 && matches!(a.lower(i - 1).as_str(), "he" | "she");
    if !host_is_target {
        return Ok(CliticRole::Possessive);
    }
    let Some(j) = (i + 1..a.len()).find(|&j| a.pos(j) != Pos::Adv) else {
        return Ok(CliticRole::Is);
    };
    let word = a.lower(j);
    if !is_participle(a, j, &word) {
        return Ok(CliticRole::Is);
    }
    let lexicon = TagLexicon::builtin();
    let adjectival = lexicon.tags(&word).is_some_and(|t| t[0] == Pos::Adj);
    let passive_by = j + 1 < a.len() && a.lower(j + 1) == "by";
    if adjectival || passive_by {
        Ok(CliticRole::Is)
    } else {
        Ok(CliticRole::Has)
    }
}

fn is_participle(a: &AnnotatedSentence, j: usize, word: &str) -> bool {
    if a.pos(j) == Pos::VerbPart {
        return true;
    }
    let lexicon = TagLexicon::builtin();
    match lexicon.tags(word) {
        Some(tags) => tags.contains(&Pos::VerbPart),
        None => {
            let len = word.chars().count();
            len > 3 && word.ends_with("ed") || len > 4 && word.ends_with("en")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annotate::annotate;
    use crate::text::tokenize;

    fn ann(text: &str) -> AnnotatedSentence {
        annotate(&tokenize(text))
    }

    fn her(text: &str) -> HerRole {
        let a = ann(text);
        let i = (0..a.len()).find(|&i| a.lower(i) == "her").unwrap();
        classify_her(&a, i).unwrap()
    }

    fn his(text: &str) -> HisRole {
        let a = ann(text);
        let i = (0..a.len()).find(|&i| a.lower(i) == "his").unwrap();
        classify_his(&a, i).unwrap()
    }

    fn clitic(text: &str) -> CliticRole {
        let a = ann(text);
        let i = (0..a.len()).find(|&i| a.lower(i) == "'s").unwrap();
        classify_clitic_s(&a, i).unwrap()
    }

    #[test]
    fn her_readings() {
        assert_eq!(her("I gave it to her ."), HerRole::Objective);
        assert_eq!(her("It is her book ."), HerRole::PossessiveDet);
        assert_eq!(her("I saw her yesterday ."), HerRole::Objective);
        assert_eq!(her("her very old book"), HerRole::PossessiveDet);
        assert_eq!(her("Her"), HerRole::Objective);
        assert_eq!(her("He saw her run fast ."), HerRole::Objective);
        assert_eq!(her("She did it on her own ."), HerRole::PossessiveDet);
        assert_eq!(her("I gave her a book ."), HerRole::Objective);
    }

    #[test]
    fn scan_is_bounded() {
        // Three modifiers push the noun past the scan window.
        assert_eq!(her("her very very old book"), HerRole::Objective);
    }

    #[test]
    fn his_readings() {
        assert_eq!(his("It is his book ."), HisRole::PossessiveDet);
        assert_eq!(his("The book is his ."), HisRole::IndependentPossessive);
        assert_eq!(his("His car broke ."), HisRole::PossessiveDet);
        assert_eq!(his("His is better ."), HisRole::IndependentPossessive);
    }

    #[test]
    fn clitic_readings() {
        assert_eq!(clitic("He 's worked hard ."), CliticRole::Has);
        assert_eq!(clitic("She 's happy ."), CliticRole::Is);
        assert_eq!(clitic("The dog 's bone"), CliticRole::Possessive);
        assert_eq!(clitic("He's gone home."), CliticRole::Has);
        assert_eq!(clitic("She's been there."), CliticRole::Has);
        assert_eq!(clitic("He's got a car."), CliticRole::Has);
        assert_eq!(clitic("She's tired."), CliticRole::Is);
        assert_eq!(clitic("He's running."), CliticRole::Is);
        assert_eq!(clitic("He's loved by everyone."), CliticRole::Is);
        assert_eq!(clitic("She's a doctor."), CliticRole::Is);
        assert_eq!(clitic("He's not worked here."), CliticRole::Has);
        assert_eq!(clitic("He's"), CliticRole::Is);
    }

    #[test]
    fn external_poss_overrides_heuristics() {
        let mut a = ann("I like her .");
        a.source = AnnotationSource::External;
        a.annotations[2].relation = Some(Relation::Poss);
        assert_eq!(classify_her(&a, 2).unwrap(), HerRole::PossessiveDet);
        a.source = AnnotationSource::Builtin;
        assert_eq!(classify_her(&a, 2).unwrap(), HerRole::Objective);
    }

    #[test]
    fn precondition_violations_are_contract_errors() {
        let a = ann("I like him .");
        assert!(matches!(classify_her(&a, 2), Err(Error::Contract(_))));
        assert!(matches!(classify_his(&a, 9), Err(Error::Contract(_))));
        assert!(matches!(classify_clitic_s(&a, 0), Err(Error::Contract(_))));
    }
}
