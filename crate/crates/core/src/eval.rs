//! Word error rate and a heuristic classifier for the differences between a
//! system output and its reference.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rewrite::{pluralize_verb, BinaryForm};
use crate::text::{tokenize, Sentence};

/// Word-level Levenshtein distance with unit costs.
pub fn edit_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, x) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, y) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(x != y);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Edit distance divided by the reference length (at least 1).
pub fn wer<T: PartialEq>(hyp: &[T], reference: &[T]) -> f64 {
    edit_distance(hyp, reference) as f64 / reference.len().max(1) as f64
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WerMode {
    /// Words are the tokenizer's tokens.
    #[default]
    Tokenized,
    /// Words are whitespace-separated chunks of the raw line.
    Raw,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalOptions {
    pub mode: WerMode,
    pub case_sensitive: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            mode: WerMode::Tokenized,
            case_sensitive: true,
        }
    }
}

impl EvalOptions {
    pub fn words(&self, line: &str) -> Vec<String> {
        let words: Vec<String> = match self.mode {
            WerMode::Tokenized => tokenize(line).tokens.into_iter().map(|t| t.surface).collect(),
            WerMode::Raw => line.split_whitespace().map(str::to_string).collect(),
        };
        if self.case_sensitive {
            words
        } else {
            words.into_iter().map(|w| w.to_lowercase()).collect()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ErrorCategory {
    /// A third-singular verb where the plural is expected, or the reverse.
    Sva,
    /// A word inserted or dropped.
    Correction,
    /// `'s` read as "is" where "has" was meant, or the reverse.
    ClitS,
    Space,
    /// One they-form in place of another.
    Pos,
    Capitalization,
    /// A binary form left in the output.
    Rule,
    /// An unknown-word token in the output.
    Unk,
    Other,
}

impl ErrorCategory {
    pub const ALL: [ErrorCategory; 9] = [
        ErrorCategory::Sva,
        ErrorCategory::Correction,
        ErrorCategory::ClitS,
        ErrorCategory::Space,
        ErrorCategory::Pos,
        ErrorCategory::Capitalization,
        ErrorCategory::Rule,
        ErrorCategory::Unk,
        ErrorCategory::Other,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCategory::Sva => "SVA",
            ErrorCategory::Correction => "CORRECTION",
            ErrorCategory::ClitS => "CLITIC_S",
            ErrorCategory::Space => "SPACE",
            ErrorCategory::Pos => "POS",
            ErrorCategory::Capitalization => "CAPITALIZATION",
            ErrorCategory::Rule => "RULE",
            ErrorCategory::Unk => "UNK",
            ErrorCategory::Other => "OTHER",
        }
    }
}

impl fmt::Display for ErrorCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A labelled difference. `hyp_span` and `ref_span` are token ranges; an
/// empty range marks an insertion point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffRegion {
    pub category: ErrorCategory,
    pub hyp_span: (usize, usize),
    pub ref_span: (usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Match,
    Change,
}

/// Levenshtein alignment as (hyp index, ref index, op) steps; `None` on one
/// side marks an insertion or deletion.
fn align(h: &[&str], r: &[&str]) -> Vec<(Option<usize>, Option<usize>, Op)> {
    let (n, m) = (h.len(), r.len());
    let mut d = vec![vec![0usize; m + 1]; n + 1];
    for (i, row) in d.iter_mut().enumerate() {
        row[0] = i;
    }
    for (j, cell) in d[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=n {
        for j in 1..=m {
            let sub = d[i - 1][j - 1] + usize::from(h[i - 1] != r[j - 1]);
            d[i][j] = sub.min(d[i - 1][j] + 1).min(d[i][j - 1] + 1);
        }
    }
    let mut steps = Vec::new();
    let (mut i, mut j) = (n, m);
    while i > 0 || j > 0 {
        if i > 0 && j > 0 && d[i][j] == d[i - 1][j - 1] + usize::from(h[i - 1] != r[j - 1]) {
            let op = if h[i - 1] == r[j - 1] { Op::Match } else { Op::Change };
            steps.push((Some(i - 1), Some(j - 1), op));
            i -= 1;
            j -= 1;
        } else if i > 0 && d[i][j] == d[i - 1][j] + 1 {
            steps.push((Some(i - 1), None, Op::Change));
            i -= 1;
        } else {
            steps.push((None, Some(j - 1), Op::Change));
            j -= 1;
        }
    }
    steps.reverse();
    steps
}

const THEY_FORMS: &[&str] = &["they", "them", "their", "theirs", "themselves", "themself"];
const BE_FORMS: &[&str] = &["is", "are", "'s", "'re"];
const HAVE_FORMS: &[&str] = &["has", "have", "'s", "'ve"];

fn label(h: &[&str], r: &[&str]) -> ErrorCategory {
    let lower = |ws: &[&str]| ws.iter().map(|w| w.to_lowercase()).collect::<Vec<_>>();
    let (hl, rl) = (lower(h), lower(r));
    let joined = h.concat();
    if joined.to_lowercase().contains("<unk>") || hl.iter().any(|w| w == "unk") {
        return ErrorCategory::Unk;
    }
    if joined == r.concat() {
        return ErrorCategory::Space;
    }
    if hl == rl {
        return ErrorCategory::Capitalization;
    }
    if h.len() == 1 && r.len() == 1 {
        let (a, b) = (hl[0].as_str(), rl[0].as_str());
        let is_be = |w: &str| BE_FORMS.contains(&w);
        let is_have = |w: &str| HAVE_FORMS.contains(&w) && w != "'s";
        if (is_be(a) && is_have(b)) || (is_have(a) && is_be(b)) {
            return ErrorCategory::ClitS;
        }
    }
    if h.len() == r.len() && !h.is_empty() {
        let sva = hl.iter().zip(&rl).all(|(a, b)| {
            a == b || pluralize_verb(a) == *b || pluralize_verb(b) == *a
        });
        if sva {
            return ErrorCategory::Sva;
        }
    }
    if h.len() == 1
        && r.len() == 1
        && THEY_FORMS.contains(&hl[0].as_str())
        && THEY_FORMS.contains(&rl[0].as_str())
    {
        return ErrorCategory::Pos;
    }
    if hl.iter().any(|w| BinaryForm::from_surface(w).is_some()) {
        return ErrorCategory::Rule;
    }
    if h.is_empty() || r.is_empty() {
        return ErrorCategory::Correction;
    }
    ErrorCategory::Other
}

/// Aligns `hyp` with `reference` and labels every differing region.
/// Tokens that match but carry different leading whitespace form SPACE
/// regions of their own.
pub fn classify_diffs(hyp: &Sentence, reference: &Sentence) -> Vec<DiffRegion> {
    let h = hyp.surfaces();
    let r = reference.surfaces();
    let steps = align(&h, &r);
    let mut regions = Vec::new();
    let mut hi = 0;
    let mut ri = 0;
    let mut k = 0;
    while k < steps.len() {
        let (hs, rs, op) = steps[k];
        if op == Op::Match {
            let (a, b) = (hs.unwrap(), rs.unwrap());
            let ws_differs = a > 0
                && b > 0
                && hyp.tokens[a].leading_whitespace.is_empty()
                    != reference.tokens[b].leading_whitespace.is_empty();
            if ws_differs {
                regions.push(DiffRegion {
                    category: ErrorCategory::Space,
                    hyp_span: (a, a + 1),
                    ref_span: (b, b + 1),
                });
            }
            hi = a + 1;
            ri = b + 1;
            k += 1;
            continue;
        }
        let (h0, r0) = (hi, ri);
        while k < steps.len() && steps[k].2 == Op::Change {
            if let Some(a) = steps[k].0 {
                hi = a + 1;
            }
            if let Some(b) = steps[k].1 {
                ri = b + 1;
            }
            k += 1;
        }
        regions.push(DiffRegion {
            category: label(&h[h0..hi], &r[r0..ri]),
            hyp_span: (h0, hi),
            ref_span: (r0, ri),
        });
    }
    regions
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SentenceStats {
    pub edit_distance: usize,
    pub ref_length: usize,
    pub base_edit_distance: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    /// Source against reference, in percent, micro-averaged.
    pub base_wer: f64,
    /// Hypothesis against reference, in percent, micro-averaged.
    pub system_wer: f64,
    /// Mean of per-sentence WERs, in percent.
    pub base_wer_macro: f64,
    pub system_wer_macro: f64,
    #[serde(rename = "n")]
    pub sentence_count: usize,
    pub options: EvalOptions,
    pub error_counts: BTreeMap<ErrorCategory, usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub per_sentence: Vec<SentenceStats>,
}

impl EvalReport {
    pub fn without_per_sentence(mut self) -> Self {
        self.per_sentence.clear();
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let mode = match self.options.mode {
            WerMode::Tokenized => "tokenized",
            WerMode::Raw => "raw",
        };
        let case = if self.options.case_sensitive { "case-sensitive" } else { "case-insensitive" };
        let _ = writeln!(out, "sentences   {}  ({mode}, {case})", self.sentence_count);
        let _ = writeln!(out, "{:<10}{:>10}{:>10}", "", "micro", "macro");
        let _ = writeln!(out, "{:<10}{:>10.2}{:>10.2}", "base", self.base_wer, self.base_wer_macro);
        let _ = writeln!(out, "{:<10}{:>10.2}{:>10.2}", "system", self.system_wer, self.system_wer_macro);
        if self.error_counts.values().any(|&c| c > 0) {
            let _ = writeln!(out, "errors");
            for (cat, count) in self.error_counts.iter().filter(|(_, &c)| c > 0) {
                let _ = writeln!(out, "  {:<16}{count:>6}", cat.as_str());
            }
        }
        out
    }
}

/// Evaluates line-aligned source, hypothesis and reference texts.
pub fn evaluate_lines<S: AsRef<str> + Sync>(
    source: &[S],
    hypothesis: &[S],
    reference: &[S],
    options: EvalOptions,
) -> Result<EvalReport> {
    if source.len() != reference.len() || hypothesis.len() != reference.len() {
        return Err(Error::contract(format!(
            "unaligned inputs: {} source, {} hypothesis, {} reference lines",
            source.len(),
            hypothesis.len(),
            reference.len()
        )));
    }
    let rows: Vec<(SentenceStats, Vec<ErrorCategory>)> = (0..reference.len())
        .into_par_iter()
        .map(|k| {
            let (s, h, r) = (source[k].as_ref(), hypothesis[k].as_ref(), reference[k].as_ref());
            let rw = options.words(r);
            let stats = SentenceStats {
                edit_distance: edit_distance(&options.words(h), &rw),
                ref_length: rw.len(),
                base_edit_distance: edit_distance(&options.words(s), &rw),
            };
            let cats = if h == r {
                Vec::new()
            } else {
                classify_diffs(&tokenize(h), &tokenize(r))
                    .into_iter()
                    .map(|d| d.category)
                    .collect()
            };
            (stats, cats)
        })
        .collect();

    let n = rows.len();
    let ref_total: usize = rows.iter().map(|(s, _)| s.ref_length).sum();
    let pct = |d: usize| 100.0 * d as f64 / ref_total.max(1) as f64;
    let macro_avg = |f: &dyn Fn(&SentenceStats) -> usize| {
        if n == 0 {
            0.0
        } else {
            rows.iter()
                .map(|(s, _)| 100.0 * f(s) as f64 / s.ref_length.max(1) as f64)
                .sum::<f64>()
                / n as f64
        }
    };
    let mut error_counts: BTreeMap<ErrorCategory, usize> =
        ErrorCategory::ALL.iter().map(|&c| (c, 0)).collect();
    for c in rows.iter().flat_map(|(_, cats)| cats) {
        *error_counts.entry(*c).or_default() += 1;
    }
    Ok(EvalReport {
        base_wer: pct(rows.iter().map(|(s, _)| s.base_edit_distance).sum()),
        system_wer: pct(rows.iter().map(|(s, _)| s.edit_distance).sum()),
        base_wer_macro: macro_avg(&|s| s.base_edit_distance),
        system_wer_macro: macro_avg(&|s| s.edit_distance),
        sentence_count: n,
        options,
        error_counts,
        per_sentence: rows.into_iter().map(|(s, _)| s).collect(),
    })
}

fn read_lines(path: &Path) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(text
        .lines()
        .map(|l| l.strip_suffix('\r').unwrap_or(l).to_string())
        .collect())
}

/// Evaluates three line-aligned files.
pub fn evaluate(
    source: impl AsRef<Path>,
    hypothesis: impl AsRef<Path>,
    reference: impl AsRef<Path>,
    options: EvalOptions,
) -> Result<EvalReport> {
    let (sp, hp, rp) = (source.as_ref(), hypothesis.as_ref(), reference.as_ref());
    let (s, h, r) = (read_lines(sp)?, read_lines(hp)?, read_lines(rp)?);
    for (path, lines) in [(sp, &s), (hp, &h)] {
        if lines.len() != r.len() {
            return Err(Error::Alignment {
                left: path.to_path_buf(),
                left_lines: lines.len(),
                right: rp.to_path_buf(),
                right_lines: r.len(),
            });
        }
    }
    evaluate_lines(&s, &h, &r, options)
}
