use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::ContractionStyle;
use crate::annotate::CliticRole;
use crate::error::{Error, Result};

/// The eight binary-gendered pronoun and determiner forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BinaryForm {
    He,
    She,
    Her,
    Hers,
    His,
    Him,
    Himself,
    Herself,
}

impl BinaryForm {
    pub const ALL: [BinaryForm; 8] = [
        BinaryForm::He,
        BinaryForm::She,
        BinaryForm::Her,
        BinaryForm::Hers,
        BinaryForm::His,
        BinaryForm::Him,
        BinaryForm::Himself,
        BinaryForm::Herself,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BinaryForm::He => "he",
            BinaryForm::She => "she",
            BinaryForm::Her => "her",
            BinaryForm::Hers => "hers",
            BinaryForm::His => "his",
            BinaryForm::Him => "him",
            BinaryForm::Himself => "himself",
            BinaryForm::Herself => "herself",
        }
    }

    /// Case-insensitive lookup of a token surface.
    pub fn from_surface(surface: &str) -> Option<Self> {
        let lower = surface.to_lowercase();
        BinaryForm::ALL.into_iter().find(|f| f.as_str() == lower)
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BinaryForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinaryForm::from_surface(s)
            .ok_or_else(|| Error::contract(format!("{s:?} is not a binary pronoun form")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GrammaticalRole {
    Nominative,
    Objective,
    PossessiveDet,
    IndependentPossessive,
    Reflexive,
}

/// The binary → neutral mapping table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PronounMap {
    entries: Vec<(BinaryForm, GrammaticalRole, &'static str)>,
}

impl PronounMap {
    pub fn standard() -> Self {
        use BinaryForm::*;
        use GrammaticalRole::*;
        PronounMap {
            entries: vec![
                (He, Nominative, "they"),
                (She, Nominative, "they"),
                (Him, Objective, "them"),
                (Her, Objective, "them"),
                (Her, PossessiveDet, "their"),
                (His, PossessiveDet, "their"),
                (His, IndependentPossessive, "theirs"),
                (Hers, IndependentPossessive, "theirs"),
                // "themselves" rather than "themself"
                (Himself, Reflexive, "themselves"),
                (Herself, Reflexive, "themselves"),
            ],
        }
    }

    pub fn entries(&self) -> &[(BinaryForm, GrammaticalRole, &'static str)] {
        &self.entries
    }

    pub fn get(&self, form: BinaryForm, role: GrammaticalRole) -> Option<&'static str> {
        self.entries
            .iter()
            .find(|(f, r, _)| *f == form && *r == role)
            .map(|(_, _, t)| *t)
    }

    /// Roles a form can take, in table order.
    pub fn roles(&self, form: BinaryForm) -> impl Iterator<Item = GrammaticalRole> + '_ {
        self.entries
            .iter()
            .filter(move |(f, _, _)| *f == form)
            .map(|(_, r, _)| *r)
    }
}

/// Lowercase neutral form for a binary `surface` in `role`.
pub fn map_pronoun(surface: &str, role: GrammaticalRole) -> Result<&'static str> {
    let form: BinaryForm = surface.parse()?;
    PronounMap::standard().get(form, role).ok_or_else(|| {
        Error::contract(format!("{surface:?} cannot take the {role:?} role"))
    })
}

/// Replacement for a `'s` clitic whose he/she host became `host`.
pub fn map_clitic(host: &str, role: CliticRole, style: ContractionStyle) -> Result<&'static str> {
    if !matches!(host.to_lowercase().as_str(), "they" | "he" | "she") {
        return Err(Error::contract(format!(
            "clitic host {host:?} is not a rewritten he/she"
        )));
    }
    match (role, style) {
        (CliticRole::Is, ContractionStyle::Preserve) => Ok("'re"),
        (CliticRole::Is, ContractionStyle::Expand) => Ok("are"),
        (CliticRole::Has, ContractionStyle::Preserve) => Ok("'ve"),
        (CliticRole::Has, ContractionStyle::Expand) => Ok("have"),
        (CliticRole::Possessive, _) => Err(Error::contract(
            "possessive 's is left untouched and has no mapping",
        )),
    }
}

/// Gives `replacement` the casing pattern of `original`: all caps, title
/// case, or lowercase.
pub fn match_case(original: &str, replacement: &str) -> String {
    let letters: Vec<char> = original.chars().filter(|c| c.is_alphabetic()).collect();
    let Some(&first) = letters.first() else {
        return replacement.to_lowercase();
    };
    let all_upper = letters.iter().all(|c| c.is_uppercase());
    let starts_with_letter = original.chars().next().is_some_and(char::is_alphabetic);
    if all_upper && (letters.len() > 1 || !starts_with_letter) {
        replacement.to_uppercase()
    } else if first.is_uppercase() {
        let lower = replacement.to_lowercase();
        let mut out = String::with_capacity(lower.len());
        let mut done = false;
        for c in lower.chars() {
            if !done && c.is_alphabetic() {
                out.extend(c.to_uppercase());
                done = true;
            } else {
                out.push(c);
            }
        }
        out
    } else {
        replacement.to_lowercase()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_mappings() {
        use GrammaticalRole::*;
        assert_eq!(map_pronoun("he", Nominative).unwrap(), "they");
        assert_eq!(map_pronoun("She", Nominative).unwrap(), "they");
        assert_eq!(map_pronoun("him", Objective).unwrap(), "them");
        assert_eq!(map_pronoun("her", Objective).unwrap(), "them");
        assert_eq!(map_pronoun("her", PossessiveDet).unwrap(), "their");
        assert_eq!(map_pronoun("his", PossessiveDet).unwrap(), "their");
        assert_eq!(map_pronoun("his", IndependentPossessive).unwrap(), "theirs");
        assert_eq!(map_pronoun("hers", IndependentPossessive).unwrap(), "theirs");
        assert_eq!(map_pronoun("herself", Reflexive).unwrap(), "themselves");
        assert_eq!(map_pronoun("himself", Reflexive).unwrap(), "themselves");
    }

    #[test]
    fn map_is_total_and_never_uses_themself() {
        let map = PronounMap::standard();
        for form in BinaryForm::ALL {
            assert!(map.roles(form).count() >= 1, "{form} unmapped");
        }
        assert!(map.entries().iter().all(|(_, _, t)| *t != "themself"));
    }

    #[test]
    fn non_target_or_wrong_role_is_a_contract_error() {
        assert!(map_pronoun("they", GrammaticalRole::Nominative).is_err());
        assert!(map_pronoun("he", GrammaticalRole::Reflexive).is_err());
    }

    #[test]
    fn clitic_mapping() {
        use ContractionStyle::*;
        assert_eq!(map_clitic("they", CliticRole::Has, Expand).unwrap(), "have");
        assert_eq!(map_clitic("They", CliticRole::Is, Preserve).unwrap(), "'re");
        assert_eq!(map_clitic("they", CliticRole::Is, Expand).unwrap(), "are");
        assert_eq!(map_clitic("they", CliticRole::Has, Preserve).unwrap(), "'ve");
        assert!(map_clitic("they", CliticRole::Possessive, Preserve).is_err());
        assert!(map_clitic("dog", CliticRole::Is, Preserve).is_err());
    }

    #[test]
    fn case_matching() {
        assert_eq!(match_case("He", "they"), "They");
        assert_eq!(match_case("HE", "they"), "THEY");
        assert_eq!(match_case("he", "they"), "they");
        assert_eq!(match_case("'S", "'re"), "'RE");
        assert_eq!(match_case("'s", "are"), "are");
        assert_eq!(match_case("Congressman", "member of congress"), "Member of congress");
        assert_eq!(match_case("I", "we"), "We");
    }
}
