//! Part-of-speech and shallow dependency evidence for disambiguating `her`,
//! `his` and the clitic `'s`.
//!
//! Two backends produce an [`AnnotatedSentence`]: a built-in heuristic
//! tagger driven by closed-class lexicons and suffix rules, and CoNLL-U
//! files produced by an external parser (see [`load_external_annotations`]).

mod conllu;
mod lexicon;
mod roles;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use conllu::{
    load_external_annotations, parse_conllu, read_external_annotations, AnnotationWarning,
    ConlluSentence, ConlluWord, ExternalAnnotations,
};
pub use lexicon::TagLexicon;
pub use roles::{
    classify_clitic_s, classify_her, classify_his, nominal_after, CliticRole, HerRole, HisRole,
    NOMINAL_SCAN_LIMIT,
};

use crate::text::{is_clitic, normalize_clitic, Sentence};

/// Coarse part-of-speech tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Pos {
    Noun,
    Propn,
    Adj,
    /// Finite verb marked for third person singular ("works", "is", "was").
    VerbFin3sg,
    /// Finite non-third-singular present, also used for base forms.
    VerbFinPl,
    VerbPast,
    VerbPart,
    VerbGer,
    Modal,
    Pron,
    Det,
    Adp,
    Adv,
    Conj,
    Punct,
    Num,
    Other,
}

impl Pos {
    pub const ALL: [Pos; 17] = [
        Pos::Noun,
        Pos::Propn,
        Pos::Adj,
        Pos::VerbFin3sg,
        Pos::VerbFinPl,
        Pos::VerbPast,
        Pos::VerbPart,
        Pos::VerbGer,
        Pos::Modal,
        Pos::Pron,
        Pos::Det,
        Pos::Adp,
        Pos::Adv,
        Pos::Conj,
        Pos::Punct,
        Pos::Num,
        Pos::Other,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Pos::Noun => "NOUN",
            Pos::Propn => "PROPN",
            Pos::Adj => "ADJ",
            Pos::VerbFin3sg => "VERB_FIN_3SG",
            Pos::VerbFinPl => "VERB_FIN_PL",
            Pos::VerbPast => "VERB_PAST",
            Pos::VerbPart => "VERB_PART",
            Pos::VerbGer => "VERB_GER",
            Pos::Modal => "MODAL",
            Pos::Pron => "PRON",
            Pos::Det => "DET",
            Pos::Adp => "ADP",
            Pos::Adv => "ADV",
            Pos::Conj => "CONJ",
            Pos::Punct => "PUNCT",
            Pos::Num => "NUM",
            Pos::Other => "OTHER",
        }
    }

    /// Finite verbs and modals, the forms that can carry agreement.
    pub fn is_finite(self) -> bool {
        matches!(
            self,
            Pos::VerbFin3sg | Pos::VerbFinPl | Pos::VerbPast | Pos::Modal
        )
    }

    pub fn is_verb(self) -> bool {
        self.is_finite() || matches!(self, Pos::VerbPart | Pos::VerbGer)
    }

    pub fn is_nominal(self) -> bool {
        matches!(self, Pos::Noun | Pos::Propn | Pos::Num)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePosError(pub String);

impl fmt::Display for ParsePosError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown part-of-speech tag {:?}", self.0)
    }
}

impl std::error::Error for ParsePosError {}

impl FromStr for Pos {
    type Err = ParsePosError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pos::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| ParsePosError(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Nsubj,
    Obj,
    Poss,
    Conj,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TokenAnnotation {
    pub pos: Pos,
    pub head: Option<usize>,
    pub relation: Option<Relation>,
}

impl TokenAnnotation {
    pub fn tag(pos: Pos) -> Self {
        TokenAnnotation {
            pos,
            head: None,
            relation: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum AnnotationSource {
    Builtin,
    External,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnotatedSentence {
    pub sentence: Sentence,
    pub annotations: Vec<TokenAnnotation>,
    pub source: AnnotationSource,
}

impl AnnotatedSentence {
    pub fn len(&self) -> usize {
        self.annotations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.annotations.is_empty()
    }

    pub fn pos(&self, i: usize) -> Pos {
        self.annotations[i].pos
    }

    pub fn tags(&self) -> Vec<Pos> {
        self.annotations.iter().map(|a| a.pos).collect()
    }

    /// Lowercased surface with the apostrophe normalized to ASCII.
    pub fn lower(&self, i: usize) -> String {
        normalize_clitic(&self.sentence.tokens[i].surface)
    }
}

/// Annotates with the built-in tagger.
pub fn annotate(sentence: &Sentence) -> AnnotatedSentence {
    Tagger::builtin().annotate(sentence)
}

const NOMINATIVE: &[&str] = &["i", "you", "he", "she", "it", "we", "they"];
const NON_THIRD_SUBJECTS: &[&str] = &["i", "you", "we", "they"];
const OBJECT_PRONOUNS: &[&str] = &["me", "you", "him", "her", "us", "them", "it"];
/// Verbs taking a bare-infinitive complement after their object ("saw her run").
const BARE_INFINITIVE_VERBS: &[&str] = &[
    "see", "sees", "saw", "seen", "watch", "watches", "watched", "hear", "hears", "heard",
    "make", "makes", "made", "let", "lets", "help", "helps", "helped", "feel", "feels", "felt",
    "notice", "notices", "noticed", "have", "has", "had",
];
const AUXILIARIES: &[&str] = &[
    "have", "has", "had", "'ve", "'d", "having", "is", "are", "was", "were", "be", "been", "being",
    "am", "'re", "'m", "get", "gets", "got", "gotten", "getting",
];
/// Hosts after which `'s` is a verb (is/has) rather than a possessive.
const VERBAL_S_HOSTS: &[&str] = &[
    "he", "she", "it", "that", "there", "here", "what", "who", "where", "how", "this",
    "everyone", "everybody", "someone", "somebody", "nobody", "everything", "something",
    "nothing", "when", "why",
];
pub(crate) const SUBORDINATORS: &[&str] = &[
    "that", "which", "who", "whom", "because", "when", "if", "while", "although", "though",
    "since", "until", "unless", "where", "whereas", "whether", "before", "after",
];
const ADJ_SUFFIXES: &[&str] = &["ous", "ful", "less", "able", "ible", "ical", "ish"];

/// The heuristic tagger.
#[derive(Debug, Clone, Copy)]
pub struct Tagger<'a> {
    lexicon: &'a TagLexicon,
}

impl Tagger<'static> {
    pub fn builtin() -> Self {
        Tagger {
            lexicon: TagLexicon::builtin(),
        }
    }
}

impl<'a> Tagger<'a> {
    pub fn new(lexicon: &'a TagLexicon) -> Self {
        Tagger { lexicon }
    }

    pub fn lexicon(&self) -> &'a TagLexicon {
        self.lexicon
    }

    pub fn annotate(&self, sentence: &Sentence) -> AnnotatedSentence {
        let lowers: Vec<String> = sentence
            .tokens
            .iter()
            .map(|t| normalize_clitic(&t.surface))
            .collect();
        let mut tags = Vec::with_capacity(lowers.len());
        for i in 0..lowers.len() {
            let tag = self.tag_at(i, sentence, &lowers, &tags);
            tags.push(tag);
        }
        let annotations = attach_relations(&tags, &lowers);
        AnnotatedSentence {
            sentence: sentence.clone(),
            annotations,
            source: AnnotationSource::Builtin,
        }
    }

    fn tag_at(&self, i: usize, sentence: &Sentence, lowers: &[String], left: &[Pos]) -> Pos {
        let surface = &sentence.tokens[i].surface;
        let w = lowers[i].as_str();

        if !surface.chars().any(char::is_alphanumeric) {
            return if surface.chars().all(is_punct_char) {
                Pos::Punct
            } else {
                Pos::Other
            };
        }
        if surface.chars().next().is_some_and(|c| c.is_numeric()) {
            return Pos::Num;
        }
        if is_clitic(surface) {
            return match w {
                "'s" if i > 0 && VERBAL_S_HOSTS.contains(&lowers[i - 1].as_str()) => {
                    Pos::VerbFin3sg
                }
                "'s" if i > 0 && lowers[i - 1] == "let" => Pos::Pron,
                "'s" => Pos::Other,
                "n't" => Pos::Adv,
                "'re" | "'ve" | "'m" => Pos::VerbFinPl,
                _ => Pos::Modal,
            };
        }

        let ctx = Context { i, lowers, left };
        if let Some(cands) = self.lexicon.tags(w) {
            return if cands.len() == 1 {
                cands[0]
            } else {
                ctx.disambiguate(cands)
            };
        }

        if i > 0 && !ctx.at_sentence_start() && is_capitalized(surface) {
            return Pos::Propn;
        }
        let len = w.chars().count();
        if len > 4 && w.ends_with("ing") {
            return Pos::VerbGer;
        }
        if len > 3 && w.ends_with("ed") {
            return if ctx.after_auxiliary() {
                Pos::VerbPart
            } else if ctx.noun_context() {
                Pos::Adj
            } else {
                Pos::VerbPast
            };
        }
        if len > 3 && w.ends_with("ly") {
            return Pos::Adv;
        }
        if len > 5 && ADJ_SUFFIXES.iter().any(|s| w.ends_with(s)) {
            return Pos::Adj;
        }
        if len > 2
            && w.ends_with('s')
            && !w.ends_with("ss")
            && !w.ends_with("us")
            && !w.ends_with("is")
            && w.chars().all(|c| c.is_alphabetic() || c == '-')
        {
            return self.tag_s_form(&ctx, w);
        }
        // "her" before an unknown word is more likely a determiner
        let after_her = ctx.prev_skipping_adverbs().is_some_and(|p| lowers[p] == "her");
        if ctx.verb_context() && !after_her {
            return Pos::VerbFinPl;
        }
        Pos::Noun
    }

    /// An unknown word ending in -s: third-singular verb or plural noun.
    fn tag_s_form(&self, ctx: &Context<'_>, w: &str) -> Pos {
        let verb_candidate = deinflect_3sg(w)
            .iter()
            .any(|base| self.lexicon.has(base, Pos::VerbFinPl));
        let Some(p) = ctx.prev_skipping_adverbs() else {
            return Pos::Noun;
        };
        let prev = ctx.lowers[p].as_str();
        let prev_tag = ctx.left[p];
        if matches!(prev, "he" | "she" | "it") {
            return Pos::VerbFin3sg;
        }
        if verb_candidate {
            if matches!(prev, "who" | "that" | "which" | "this") {
                return Pos::VerbFin3sg;
            }
            let singular_noun = prev_tag == Pos::Propn
                || prev_tag == Pos::Noun && (!prev.ends_with('s') || prev.ends_with("ss"));
            if singular_noun {
                return Pos::VerbFin3sg;
            }
            let coordinator = prev_tag == Pos::Conj && matches!(prev, "and" | "or" | "but" | "nor")
                || prev == ",";
            if coordinator && ctx.clause_has_3sg_verb_before(p) && !ctx.plural_noun_before(p) {
                return Pos::VerbFin3sg;
            }
            if prev == "," && ctx.singular_subject_before_parenthetical(p) {
                return Pos::VerbFin3sg;
            }
        }
        Pos::Noun
    }
}

/// Left context available while tagging token `i`.
struct Context<'c> {
    i: usize,
    lowers: &'c [String],
    left: &'c [Pos],
}

impl Context<'_> {
    fn prev_skipping_adverbs(&self) -> Option<usize> {
        (0..self.i).rev().find(|&j| self.left[j] != Pos::Adv)
    }

    fn at_sentence_start(&self) -> bool {
        self.i == 0
            || matches!(
                self.lowers[self.i - 1].as_str(),
                "." | "!" | "?" | "\"" | "'" | ":" | "(" | "..." | "\u{201c}" | "-" | "--"
            )
    }

    fn after_auxiliary(&self) -> bool {
        let Some(p) = self.prev_skipping_adverbs() else {
            return false;
        };
        let prev = self.lowers[p].as_str();
        AUXILIARIES.contains(&prev) || prev == "'s" && self.left[p] == Pos::VerbFin3sg
    }

    fn noun_context(&self) -> bool {
        let Some(p) = self.i.checked_sub(1) else {
            return false;
        };
        let prev = self.lowers[p].as_str();
        match self.left[p] {
            Pos::Det | Pos::Adj | Pos::Num => true,
            Pos::Adp => prev != "to",
            Pos::Pron => matches!(prev, "his" | "her") && !self.verb_context(),
            Pos::Other => prev == "'s",
            _ => false,
        }
    }

    fn verb_context(&self) -> bool {
        let Some(p) = self.prev_skipping_adverbs() else {
            return false;
        };
        let prev = self.lowers[p].as_str();
        if NON_THIRD_SUBJECTS.contains(&prev)
            || self.left[p] == Pos::Modal
            || matches!(prev, "to" | "do" | "did" | "does" | "n't")
        {
            return true;
        }
        OBJECT_PRONOUNS.contains(&prev)
            && p > 0
            && BARE_INFINITIVE_VERBS.contains(&self.lowers[p - 1].as_str())
    }

    fn subject_before(&self) -> bool {
        self.prev_skipping_adverbs().is_some_and(|p| {
            NOMINATIVE.contains(&self.lowers[p].as_str())
                || matches!(self.left[p], Pos::Noun | Pos::Propn)
        })
    }

    fn clause_has_3sg_verb_before(&self, p: usize) -> bool {
        for j in (0..p).rev() {
            let w = self.lowers[j].as_str();
            if is_clause_boundary(w) || SUBORDINATORS.contains(&w) {
                return false;
            }
            if self.left[j] == Pos::VerbFin3sg {
                return true;
            }
            // "she wanted it and works": a past verb with a 3sg pronoun subject
            let pronoun_subject = (0..j)
                .rev()
                .find(|&k| self.left[k] != Pos::Adv)
                .is_some_and(|k| matches!(self.lowers[k].as_str(), "he" | "she" | "it"));
            if self.left[j] == Pos::VerbPast && pronoun_subject {
                return true;
            }
        }
        false
    }

    /// "She , however , knows": the comma at `p` closes a short parenthetical
    /// opened right after a singular subject.
    fn singular_subject_before_parenthetical(&self, p: usize) -> bool {
        let open = (p.saturating_sub(8)..p).rev().find(|&j| self.lowers[j] == ",");
        open.and_then(|q| q.checked_sub(1)).is_some_and(|s| {
            let w = self.lowers[s].as_str();
            matches!(w, "he" | "she" | "it")
                || self.left[s] == Pos::Propn
                || self.left[s] == Pos::Noun && !w.ends_with('s')
        })
    }

    fn plural_noun_before(&self, p: usize) -> bool {
        (0..p)
            .rev()
            .find(|&j| self.left[j] != Pos::Adv)
            .is_some_and(|q| {
                let w = self.lowers[q].as_str();
                self.left[q] == Pos::Noun && w.ends_with('s') && !w.ends_with("ss")
            })
    }

    fn disambiguate(&self, cands: &[Pos]) -> Pos {
        let has = |p: Pos| cands.contains(&p);
        if has(Pos::VerbPart) && self.after_auxiliary() {
            return Pos::VerbPart;
        }
        if self.noun_context() {
            if has(Pos::Noun) {
                return Pos::Noun;
            }
            if has(Pos::Adj) {
                return Pos::Adj;
            }
        }
        if self.verb_context() {
            if let Some(&v) = cands
                .iter()
                .find(|p| matches!(p, Pos::VerbFinPl | Pos::VerbFin3sg))
            {
                return v;
            }
        }
        if self.subject_before() {
            if has(Pos::VerbPast) {
                return Pos::VerbPast;
            }
            if let Some(&v) = cands.iter().find(|p| p.is_finite()) {
                return v;
            }
        }
        cands[0]
    }
}

pub(crate) fn is_clause_boundary(lower: &str) -> bool {
    matches!(lower, "." | "!" | "?" | ";" | ":" | "..." | "(" | ")" | "\"")
}

fn is_punct_char(c: char) -> bool {
    c.is_ascii_punctuation()
        || ('\u{2010}'..='\u{205E}').contains(&c)
        || matches!(c, '\u{00AB}' | '\u{00BB}' | '\u{00BF}' | '\u{00A1}')
}

fn is_capitalized(surface: &str) -> bool {
    let mut letters = surface.chars().filter(|c| c.is_alphabetic());
    let first_upper = letters.next().is_some_and(char::is_uppercase);
    // All-caps words are shouting, not names.
    first_upper && letters.any(char::is_lowercase)
}

/// Candidate base forms for a word ending in -s.
fn deinflect_3sg(w: &str) -> Vec<String> {
    let mut out = vec![w[..w.len() - 1].to_string()];
    if let Some(stem) = w.strip_suffix("es") {
        out.push(stem.to_string());
    }
    if let Some(stem) = w.strip_suffix("ies") {
        out.push(format!("{stem}y"));
    }
    out
}

/// Builtin shallow dependencies: possessive determiners point at their
/// noun, subject pronouns at their verb, coordinated verbs at the first
/// conjunct.
fn attach_relations(tags: &[Pos], lowers: &[String]) -> Vec<TokenAnnotation> {
    let mut out: Vec<TokenAnnotation> = tags.iter().map(|&p| TokenAnnotation::tag(p)).collect();
    for (i, w) in lowers.iter().enumerate() {
        match w.as_str() {
            "her" | "his" => {
                if let Some(j) = nominal_after(tags, lowers, i) {
                    out[i].relation = Some(Relation::Poss);
                    out[i].head = Some(j);
                } else if w == "her" {
                    out[i].relation = Some(Relation::Obj);
                    out[i].head = (0..i).rev().find(|&j| tags[j].is_verb());
                }
            }
            w if NOMINATIVE.contains(&w) => {
                if let Some(j) = (i + 1..tags.len())
                    .find(|&j| tags[j] != Pos::Adv)
                    .filter(|&j| tags[j].is_finite())
                {
                    out[i].relation = Some(Relation::Nsubj);
                    out[i].head = Some(j);
                }
            }
            _ => {}
        }
    }
    let mut first_conjunct: Option<usize> = None;
    for i in 0..tags.len() {
        let w = lowers[i].as_str();
        if is_clause_boundary(w) || SUBORDINATORS.contains(&w) {
            first_conjunct = None;
            continue;
        }
        if !tags[i].is_finite() {
            continue;
        }
        let after_coordinator = (0..i)
            .rev()
            .find(|&j| tags[j] != Pos::Adv)
            .is_some_and(|j| matches!(lowers[j].as_str(), "and" | "or" | "but" | "nor" | ","));
        match first_conjunct {
            Some(head) if after_coordinator => {
                out[i].relation = Some(Relation::Conj);
                out[i].head = Some(head);
            }
            None => first_conjunct = Some(i),
            _ => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::tokenize;

    fn tags(text: &str) -> Vec<Pos> {
        annotate(&tokenize(text)).tags()
    }

    #[test]
    fn third_person_verb_after_pronoun() {
        assert_eq!(tags("He works."), [Pos::Pron, Pos::VerbFin3sg, Pos::Punct]);
    }

    #[test]
    fn determiner_and_default_noun() {
        assert_eq!(tags("the book"), [Pos::Det, Pos::Noun]);
    }

    #[test]
    fn possessive_subject_with_irregular_past() {
        let a = annotate(&tokenize("His car broke."));
        assert_eq!(a.tags(), [Pos::Pron, Pos::Noun, Pos::VerbPast, Pos::Punct]);
        assert_eq!(a.annotations[0].relation, Some(Relation::Poss));
        assert_eq!(a.annotations[0].head, Some(1));
    }

    #[test]
    fn participle_after_clitic_has() {
        assert_eq!(
            tags("He's worked hard."),
            [Pos::Pron, Pos::VerbFin3sg, Pos::VerbPart, Pos::Adv, Pos::Punct]
        );
    }

    #[test]
    fn possessive_clitic_is_not_a_verb() {
        assert_eq!(tags("The dog's bone")[2], Pos::Other);
    }

    #[test]
    fn coordinated_verbs_versus_nouns() {
        assert_eq!(tags("He works and works.")[3], Pos::VerbFin3sg);
        assert_eq!(tags("He buys apples and oranges.")[4], Pos::Noun);
        assert_eq!(tags("He opens the door and walks in.")[5], Pos::VerbFin3sg);
    }

    #[test]
    fn bare_infinitive_after_perception_verb() {
        assert_eq!(tags("He saw her run fast.")[3], Pos::VerbFinPl);
        assert_eq!(tags("I love her work.")[3], Pos::Noun);
    }

    #[test]
    fn suffix_heuristics() {
        assert_eq!(tags("She is singing")[2], Pos::VerbGer);
        assert_eq!(tags("They jumped")[1], Pos::VerbPast);
        assert_eq!(tags("It has jumped")[2], Pos::VerbPart);
        assert_eq!(tags("It moved quickly")[2], Pos::Adv);
        assert_eq!(tags("a dangerous road")[1], Pos::Adj);
        assert_eq!(tags("I met Alice")[2], Pos::Propn);
    }

    #[test]
    fn punctuation_numbers_and_symbols() {
        assert_eq!(tags("3 , 👍"), [Pos::Num, Pos::Punct, Pos::Other]);
    }

    #[test]
    fn subject_relation() {
        let a = annotate(&tokenize("She often works late"));
        assert_eq!(a.annotations[0].relation, Some(Relation::Nsubj));
        assert_eq!(a.annotations[0].head, Some(2));
    }

    #[test]
    fn pos_round_trips_through_strings() {
        for p in Pos::ALL {
            assert_eq!(p.as_str().parse::<Pos>(), Ok(p));
        }
        assert!("VERB".parse::<Pos>().is_err());
    }
}
