//! Rule-based rewriting of English text from binary-gendered pronouns and
//! determiners to singular *they*.
//!
//! ```
//! use neutral_rewriter::{rewrite, RewriteOptions};
//!
//! let r = rewrite("She works in a company.", &RewriteOptions::default(), None);
//! assert_eq!(r.text(), "They work in a company.");
//! ```
//!
//! Besides the rewriter the crate carries the supporting pieces: a lossless
//! tokenizer, a heuristic tagger with CoNLL-U input, an optional noun
//! lexicon, word error rate evaluation, and corpus tooling.

pub mod annotate;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod eval;
pub mod nouns;
pub mod rewrite;
pub mod text;

pub use annotate::{annotate, AnnotatedSentence, Pos};
pub use corpus::{balanced_sample, count_forms, generate_parallel, FormCensus};
pub use error::{Error, Result};
pub use eval::{classify_diffs, evaluate, wer, ErrorCategory, EvalOptions, EvalReport};
pub use nouns::{load_lexicon, neutralize_nouns, NounCategory, NounLexicon};
pub use rewrite::{
    rewrite, ContractionStyle, Edit, EditCategory, RewriteOptions, RewriteResult, Rewriter,
};
pub use text::{detokenize, tokenize, Sentence, Token};
