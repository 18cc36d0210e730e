//! Lossless tokenization.
//!
//! Tokens follow the usual English conventions of the Moses tokenizer:
//! punctuation is split from words and the contraction clitics `'s`, `n't`,
//! `'re`, `'ve`, `'ll`, `'d` and `'m` become tokens of their own. Unlike
//! Moses, nothing is normalized. Each token remembers the exact whitespace
//! that preceded it, so joining the tokens back together reproduces the
//! input byte for byte.

use serde::{Deserialize, Serialize};

/// The contraction clitics split off by the tokenizer, in ASCII spelling.
pub const CLITICS: [&str; 7] = ["'s", "n't", "'re", "'ve", "'ll", "'d", "'m"];

/// Abbreviations that keep their trailing period.
const NONBREAKING_PREFIXES: &[&str] = &[
    "mr", "mrs", "ms", "mx", "dr", "prof", "st", "jr", "sr", "vs", "etc", "mt", "rev", "gen",
    "capt", "sgt", "lt", "col", "gov", "sen", "rep", "hon", "messrs", "mmes",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    /// Exact characters between the previous token (or the start of the
    /// text) and this one.
    pub leading_whitespace: String,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sentence {
    pub tokens: Vec<Token>,
    pub source_text: String,
    /// Whitespace after the last token.
    pub trailing_whitespace: String,
}

impl Sentence {
    /// Builds a sentence from `(leading_whitespace, surface)` pairs.
    pub fn from_parts<I, W, S>(parts: I, trailing_whitespace: impl Into<String>) -> Self
    where
        I: IntoIterator<Item = (W, S)>,
        W: Into<String>,
        S: Into<String>,
    {
        let tokens: Vec<Token> = parts
            .into_iter()
            .enumerate()
            .map(|(index, (ws, surface))| Token {
                surface: surface.into(),
                leading_whitespace: ws.into(),
                index,
            })
            .collect();
        let trailing_whitespace = trailing_whitespace.into();
        let mut source_text = String::new();
        for t in &tokens {
            source_text.push_str(&t.leading_whitespace);
            source_text.push_str(&t.surface);
        }
        source_text.push_str(&trailing_whitespace);
        Sentence {
            tokens,
            source_text,
            trailing_whitespace,
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn surfaces(&self) -> Vec<&str> {
        self.tokens.iter().map(|t| t.surface.as_str()).collect()
    }

    /// Lowercased surface of token `i`.
    pub fn lower(&self, i: usize) -> String {
        self.tokens[i].surface.to_lowercase()
    }

    /// Space-joined surfaces, the conventional "tokenized" line.
    pub fn tokenized_text(&self) -> String {
        self.surfaces().join(" ")
    }
}

pub fn detokenize(sentence: &Sentence) -> String {
    let mut out = String::with_capacity(sentence.source_text.len());
    for t in &sentence.tokens {
        out.push_str(&t.leading_whitespace);
        out.push_str(&t.surface);
    }
    out.push_str(&sentence.trailing_whitespace);
    out
}

pub fn tokenize(text: &str) -> Sentence {
    let mut tokens = Vec::new();
    let mut pending_ws_start = 0;
    let mut chunk_start: Option<usize> = None;

    for (i, c) in text.char_indices() {
        if c.is_whitespace() {
            if let Some(start) = chunk_start.take() {
                split_chunk(text, pending_ws_start, start, i, &mut tokens);
                pending_ws_start = i;
            }
        } else if chunk_start.is_none() {
            chunk_start = Some(i);
        }
    }
    if let Some(start) = chunk_start {
        split_chunk(text, pending_ws_start, start, text.len(), &mut tokens);
        pending_ws_start = text.len();
    }

    Sentence {
        tokens,
        source_text: text.to_string(),
        trailing_whitespace: text[pending_ws_start..].to_string(),
    }
}

/// Tokenizes one whitespace-free chunk `text[start..end]`; the first token
/// receives `text[ws_start..start]` as its leading whitespace.
fn split_chunk(text: &str, ws_start: usize, start: usize, end: usize, out: &mut Vec<Token>) {
    let chunk = &text[start..end];
    let mut first = true;
    let mut push = |surface: &str, out: &mut Vec<Token>| {
        let leading = if first { &text[ws_start..start] } else { "" };
        first = false;
        out.push(Token {
            surface: surface.to_string(),
            leading_whitespace: leading.to_string(),
            index: out.len(),
        });
    };

    let chars: Vec<(usize, char)> = chunk.char_indices().collect();
    let byte_at = |k: usize| chars.get(k).map_or(chunk.len(), |&(b, _)| b);
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k].1;
        let begin = k;
        if is_word_char(c) {
            k += 1;
            while k < chars.len() {
                let c = chars[k].1;
                if is_word_char(c) || is_joiner(c) {
                    k += 1;
                } else if is_word_connector(&chars, k) {
                    k += 2;
                } else {
                    break;
                }
            }
            // Abbreviations keep their period.
            if k < chars.len() && chars[k].1 == '.' {
                let word = &chunk[byte_at(begin)..byte_at(k)];
                let lower = word.to_lowercase();
                if NONBREAKING_PREFIXES.contains(&lower.as_str()) || word.contains('.') {
                    k += 1;
                }
            }
            let word = &chunk[byte_at(begin)..byte_at(k)];
            for piece in split_clitics(word) {
                push(piece, out);
            }
        } else if is_apostrophe(c) && clitic_at(&chars, k).is_some() {
            let len = clitic_at(&chars, k).unwrap();
            k += len;
            push(&chunk[byte_at(begin)..byte_at(k)], out);
        } else if c.is_ascii_punctuation() {
            k += 1;
            while k < chars.len() && chars[k].1 == c {
                k += 1;
            }
            push(&chunk[byte_at(begin)..byte_at(k)], out);
        } else {
            // Symbols outside ASCII (emoji, dashes, curly quotes) form runs.
            k += 1;
            while k < chars.len() {
                let c = chars[k].1;
                if is_joiner(c) || is_symbol_char(c) {
                    k += 1;
                } else {
                    break;
                }
            }
            push(&chunk[byte_at(begin)..byte_at(k)], out);
        }
    }
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

fn is_symbol_char(c: char) -> bool {
    !c.is_whitespace() && !c.is_alphanumeric() && !c.is_ascii_punctuation() && !is_apostrophe(c)
}

/// Combining marks, variation selectors, zero-width joiners and emoji
/// modifiers stay attached to the preceding character.
fn is_joiner(c: char) -> bool {
    matches!(c,
        '\u{0300}'..='\u{036F}'
        | '\u{0483}'..='\u{0489}'
        | '\u{0591}'..='\u{05BD}'
        | '\u{0610}'..='\u{061A}'
        | '\u{064B}'..='\u{065F}'
        | '\u{0900}'..='\u{0903}'
        | '\u{093A}'..='\u{094F}'
        | '\u{1AB0}'..='\u{1AFF}'
        | '\u{1DC0}'..='\u{1DFF}'
        | '\u{200C}'..='\u{200D}'
        | '\u{20D0}'..='\u{20FF}'
        | '\u{FE00}'..='\u{FE0F}'
        | '\u{FE20}'..='\u{FE2F}'
        | '\u{1F3FB}'..='\u{1F3FF}'
        | '\u{E0020}'..='\u{E007F}'
        | '\u{E0100}'..='\u{E01EF}')
}

pub(crate) fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Hyphens and apostrophes between letters, and periods or commas between
/// digits, stay inside a word. Periods between letters do too ("U.S").
fn is_word_connector(chars: &[(usize, char)], k: usize) -> bool {
    let c = chars[k].1;
    let (Some(&(_, prev)), Some(&(_, next))) = (k.checked_sub(1).map(|p| &chars[p]), chars.get(k + 1))
    else {
        return false;
    };
    match c {
        '-' => is_word_char(prev) && is_word_char(next),
        '\'' | '\u{2019}' => prev.is_alphabetic() && next.is_alphabetic() || prev.is_numeric() && next == 's',
        '.' | ',' if prev.is_numeric() && next.is_numeric() => true,
        '.' => prev.is_alphabetic() && next.is_alphabetic() && chars[..k].iter().rev().take_while(|(_, c)| c.is_alphabetic()).count() == 1,
        _ => false,
    }
}

/// Length in chars of a standalone clitic starting at `k` (an apostrophe),
/// as found in already-tokenized text such as "He 's".
fn clitic_at(chars: &[(usize, char)], k: usize) -> Option<usize> {
    let rest: String = chars[k + 1..]
        .iter()
        .take_while(|(_, c)| c.is_alphanumeric())
        .map(|(_, c)| c.to_ascii_lowercase())
        .collect();
    matches!(rest.as_str(), "s" | "re" | "ve" | "ll" | "d" | "m").then(|| 1 + rest.chars().count())
}

/// Splits trailing clitics off a word: "He's" → ["He", "'s"],
/// "shouldn't've" → ["should", "n't", "'ve"].
fn split_clitics(word: &str) -> Vec<&str> {
    let mut tail = Vec::new();
    let mut host = word;
    while let Some(cut) = clitic_suffix(host) {
        tail.push(&host[cut..]);
        host = &host[..cut];
    }
    let mut pieces = Vec::with_capacity(tail.len() + 1);
    if !host.is_empty() {
        pieces.push(host);
    }
    pieces.extend(tail.into_iter().rev());
    pieces
}

/// Byte offset where a clitic suffix of `word` begins, if the part before it
/// is a non-empty word.
fn clitic_suffix(word: &str) -> Option<usize> {
    let lower = word.to_lowercase().replace('\u{2019}', "'");
    // Lowercasing can change byte lengths; count from the end in chars.
    let suffix_chars = if lower.ends_with("n't") {
        3
    } else {
        ["'s", "'re", "'ve", "'ll", "'d", "'m"]
            .iter()
            .find(|c| lower.ends_with(*c))
            .map(|c| c.len())?
    };
    let cut = word.char_indices().rev().nth(suffix_chars - 1)?.0;
    let host = &word[..cut];
    let last = host.chars().last()?;
    (last.is_alphanumeric()).then_some(cut)
}

/// True for the recognized contraction clitics, in either apostrophe style
/// and any case.
pub fn is_clitic(surface: &str) -> bool {
    let norm = surface.to_lowercase().replace('\u{2019}', "'");
    CLITICS.contains(&norm.as_str())
}

/// Normalizes a clitic to its lowercase ASCII spelling.
pub fn normalize_clitic(surface: &str) -> String {
    surface.to_lowercase().replace('\u{2019}', "'")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surfaces(text: &str) -> Vec<String> {
        tokenize(text).tokens.into_iter().map(|t| t.surface).collect()
    }

    #[test]
    fn splits_clitic_and_final_period() {
        assert_eq!(surfaces("He's here."), ["He", "'s", "here", "."]);
    }

    #[test]
    fn single_word_and_empty_input() {
        assert_eq!(surfaces("Hello"), ["Hello"]);
        assert!(tokenize("").is_empty());
        assert_eq!(tokenize("   ").trailing_whitespace, "   ");
    }

    #[test]
    fn negation_and_other_clitics() {
        assert_eq!(surfaces("doesn't"), ["does", "n't"]);
        assert_eq!(surfaces("can't"), ["ca", "n't"]);
        assert_eq!(surfaces("They'll we'd I'm you're we've"),
            ["They", "'ll", "we", "'d", "I", "'m", "you", "'re", "we", "'ve"]);
        assert_eq!(surfaces("shouldn't've"), ["should", "n't", "'ve"]);
        assert_eq!(surfaces("HE'S"), ["HE", "'S"]);
        assert_eq!(surfaces("She\u{2019}s"), ["She", "\u{2019}s"]);
    }

    #[test]
    fn already_tokenized_clitics_stay_whole() {
        assert_eq!(surfaces("He 's worked hard ."), ["He", "'s", "worked", "hard", "."]);
        assert_eq!(surfaces("do n't"), ["do", "n't"]);
        assert_eq!(surfaces("aren 't"), ["aren", "'", "t"]);
    }

    #[test]
    fn apostrophe_internal_words_are_kept() {
        assert_eq!(surfaces("at five o'clock"), ["at", "five", "o'clock"]);
        assert_eq!(surfaces("'Hello'"), ["'", "Hello", "'"]);
    }

    #[test]
    fn hyphens_numbers_and_abbreviations() {
        assert_eq!(surfaces("a man-made lake"), ["a", "man-made", "lake"]);
        assert_eq!(surfaces("It cost 1,000.50 dollars."), ["It", "cost", "1,000.50", "dollars", "."]);
        assert_eq!(surfaces("Mrs. Smith left..."), ["Mrs.", "Smith", "left", "..."]);
        assert_eq!(surfaces("the U.S. army"), ["the", "U.S.", "army"]);
        assert_eq!(surfaces("wait--what?!"), ["wait", "--", "what", "?", "!"]);
    }

    #[test]
    fn emoji_pass_through_as_single_tokens() {
        assert_eq!(surfaces("nice 👍🏽 ok"), ["nice", "👍🏽", "ok"]);
        assert_eq!(surfaces("hi👨‍👩‍👧!"), ["hi", "👨‍👩‍👧", "!"]);
    }

    #[test]
    fn whitespace_is_recorded_exactly() {
        let s = tokenize("  He  ran .\t");
        assert_eq!(s.tokens[0].leading_whitespace, "  ");
        assert_eq!(s.tokens[1].leading_whitespace, "  ");
        assert_eq!(s.tokens[2].leading_whitespace, " ");
        assert_eq!(s.trailing_whitespace, "\t");
        assert_eq!(detokenize(&s), "  He  ran .\t");
    }

    #[test]
    fn indices_are_positions() {
        let s = tokenize("a b, c");
        for (i, t) in s.tokens.iter().enumerate() {
            assert_eq!(t.index, i);
        }
    }

    #[test]
    fn clitic_recognition() {
        assert!(is_clitic("'s"));
        assert!(is_clitic("N'T"));
        assert!(is_clitic("\u{2019}re"));
        assert!(!is_clitic("o'clock"));
        assert!(!is_clitic("'"));
    }
}
