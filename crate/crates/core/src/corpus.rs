//! Balanced sampling of sentences containing the binary forms, and
//! generation of gendered/neutral parallel corpora.

use std::collections::{BTreeMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rewrite::{BinaryForm, EditCategory, Rewriter, BATCH_SIZE};
use crate::text::{tokenize, Sentence};

/// Token counts of the eight binary forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormCensus {
    pub counts: BTreeMap<BinaryForm, usize>,
}

impl Default for FormCensus {
    fn default() -> Self {
        FormCensus {
            counts: BinaryForm::ALL.iter().map(|&f| (f, 0)).collect(),
        }
    }
}

impl FormCensus {
    pub fn get(&self, form: BinaryForm) -> usize {
        self.counts[&form]
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn contains(&self, form: BinaryForm) -> bool {
        self.get(form) > 0
    }

    /// Bit `k` set iff `BinaryForm::ALL[k]` occurs.
    fn mask(&self) -> u8 {
        BinaryForm::ALL
            .iter()
            .enumerate()
            .filter(|(_, f)| self.contains(**f))
            .fold(0, |m, (k, _)| m | 1 << k)
    }

    pub fn add(&mut self, other: &FormCensus) {
        for (f, c) in &other.counts {
            *self.counts.get_mut(f).expect("all forms present") += c;
        }
    }
}

/// Case-insensitive token counts of the eight forms in `s`.
pub fn count_forms(s: &Sentence) -> FormCensus {
    let mut census = FormCensus::default();
    for t in &s.tokens {
        if let Some(f) = BinaryForm::from_surface(&t.surface) {
            *census.counts.get_mut(&f).expect("all forms present") += 1;
        }
    }
    census
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Shortfall {
    pub form: BinaryForm,
    pub required: usize,
    pub selected: usize,
    /// Distinct corpus lines containing the form.
    pub available: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sample {
    /// Selected lines, in corpus order.
    pub lines: Vec<String>,
    /// Corpus line numbers (0-based) of the selected lines.
    pub indices: Vec<usize>,
    pub quota: usize,
    /// Selected lines containing each form.
    pub lines_per_form: BTreeMap<BinaryForm, usize>,
    pub shortfall: Vec<Shortfall>,
}

impl Sample {
    pub fn is_complete(&self) -> bool {
        self.shortfall.is_empty()
    }
}

/// Selects up to `n` distinct lines so that each binary form occurs in at
/// least ⌈n/8⌉ of them whenever the corpus allows it.
///
/// Lines are visited in an order shuffled by `seed`; a line is taken while
/// it helps an unmet quota. Once every quota is met, or the corpus runs
/// out, remaining slots are filled with further lines containing any form.
pub fn balanced_sample<S: AsRef<str> + Sync>(corpus: &[S], n: usize, seed: u64) -> Result<Sample> {
    if n < BinaryForm::ALL.len() {
        return Err(Error::contract(format!("sample size {n} is below 8")));
    }
    let quota = n.div_ceil(BinaryForm::ALL.len());

    let mut seen = HashSet::new();
    let candidates: Vec<usize> = (0..corpus.len())
        .filter(|&k| seen.insert(corpus[k].as_ref()))
        .collect();
    let masks: Vec<u8> = candidates
        .par_iter()
        .map(|&k| count_forms(&tokenize(corpus[k].as_ref())).mask())
        .collect();
    let mut order: Vec<usize> = (0..candidates.len()).filter(|&c| masks[c] != 0).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));

    let mut have = [0usize; 8];
    let mut taken = vec![false; candidates.len()];
    let mut chosen = Vec::new();
    let unmet = |have: &[usize; 8]| (0..8).fold(0u8, |m, k| if have[k] < quota { m | 1 << k } else { m });
    for &c in &order {
        let need = unmet(&have);
        if need == 0 || chosen.len() == n {
            break;
        }
        if masks[c] & need != 0 {
            taken[c] = true;
            chosen.push(c);
            (0..8).filter(|k| masks[c] & 1 << k != 0).for_each(|k| have[k] += 1);
        }
    }
    for &c in &order {
        if chosen.len() == n {
            break;
        }
        if !taken[c] {
            taken[c] = true;
            chosen.push(c);
            (0..8).filter(|k| masks[c] & 1 << k != 0).for_each(|k| have[k] += 1);
        }
    }

    let mut indices: Vec<usize> = chosen.iter().map(|&c| candidates[c]).collect();
    indices.sort_unstable();
    let shortfall = BinaryForm::ALL
        .iter()
        .enumerate()
        .filter(|(k, _)| have[*k] < quota)
        .map(|(k, &form)| Shortfall {
            form,
            required: quota,
            selected: have[k],
            available: masks.iter().filter(|&&m| m & 1 << k != 0).count(),
        })
        .collect();
    Ok(Sample {
        lines: indices.iter().map(|&k| corpus[k].as_ref().to_string()).collect(),
        indices,
        quota,
        lines_per_form: BinaryForm::ALL.iter().enumerate().map(|(k, &f)| (f, have[k])).collect(),
        shortfall,
    })
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ParallelStats {
    pub lines: usize,
    pub changed: usize,
    pub unchanged: usize,
    pub edits: BTreeMap<EditCategory, usize>,
}

fn strip_newline(mut line: String) -> String {
    if line.ends_with('\n') {
        line.pop();
        if line.ends_with('\r') {
            line.pop();
        }
    }
    line
}

/// Writes each input line to `out_src` and its rewrite to `out_tgt`.
/// Lines are rewritten in parallel batches; output order is input order.
pub fn generate_parallel<R: BufRead, W1: Write, W2: Write>(
    input: R,
    rewriter: &Rewriter,
    mut out_src: W1,
    mut out_tgt: W2,
) -> Result<ParallelStats> {
    let mut stats = ParallelStats::default();
    let mut lines = input.lines();
    loop {
        let chunk: Vec<String> = lines
            .by_ref()
            .take(BATCH_SIZE)
            .map(|l| l.map(strip_newline))
            .collect::<std::io::Result<_>>()?;
        if chunk.is_empty() {
            break;
        }
        for (src, result) in chunk.iter().zip(rewriter.rewrite_batch(&chunk)) {
            writeln!(out_src, "{src}")?;
            writeln!(out_tgt, "{}", result.text())?;
            stats.lines += 1;
            if result.is_unchanged() {
                stats.unchanged += 1;
            } else {
                stats.changed += 1;
            }
            for e in &result.edits {
                *stats.edits.entry(e.category).or_default() += 1;
            }
        }
    }
    out_src.flush()?;
    out_tgt.flush()?;
    Ok(stats)
}

/// [`generate_parallel`] over files, with paths attached to I/O errors.
pub fn generate_parallel_files(
    input: impl AsRef<Path>,
    rewriter: &Rewriter,
    out_src: impl AsRef<Path>,
    out_tgt: impl AsRef<Path>,
) -> Result<ParallelStats> {
    let (ip, sp, tp) = (input.as_ref(), out_src.as_ref(), out_tgt.as_ref());
    let reader = BufReader::new(File::open(ip).map_err(|e| Error::io(ip, e))?);
    let src = BufWriter::new(File::create(sp).map_err(|e| Error::io(sp, e))?);
    let tgt = BufWriter::new(File::create(tp).map_err(|e| Error::io(tp, e))?);
    generate_parallel(reader, rewriter, src, tgt).map_err(|e| match e {
        Error::Stream(io) => Error::io(ip, io),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rewrite::RewriteOptions;

    #[test]
    fn census() {
        let c = count_forms(&tokenize("He gave her his book ."));
        assert_eq!(c.get(BinaryForm::He), 1);
        assert_eq!(c.get(BinaryForm::Her), 1);
        assert_eq!(c.get(BinaryForm::His), 1);
        assert_eq!(c.total(), 3);
        assert_eq!(count_forms(&tokenize("HERSELF")).get(BinaryForm::Herself), 1);
        assert_eq!(count_forms(&tokenize("They left .")).total(), 0);
    }

    #[test]
    fn unique_cover() {
        let corpus = [
            "he ran", "she ran", "for her", "it is hers", "his cat", "see him", "by himself",
            "by herself",
        ];
        let s = balanced_sample(&corpus, 8, 1).unwrap();
        assert_eq!(s.lines, corpus);
        assert!(s.is_complete());
    }

    #[test]
    fn shortfall_names_missing_forms() {
        let corpus: Vec<String> = (0..200)
            .map(|i| match i % 7 {
                0 => format!("he ran {i}"),
                1 => format!("she ran {i}"),
                2 => format!("for her {i}"),
                3 => format!("his cat {i}"),
                4 => format!("see him {i}"),
                5 => format!("by himself {i}"),
                _ => format!("by herself {i}"),
            })
            .collect();
        let s = balanced_sample(&corpus, 80, 7).unwrap();
        let missing: Vec<_> = s.shortfall.iter().map(|x| x.form).collect();
        assert_eq!(missing, [BinaryForm::Hers]);
        assert_eq!(s.lines.len(), 80);
        assert!(balanced_sample(&corpus, 7, 0).is_err());
    }

    #[test]
    fn parallel_in_memory() {
        let input = "He opened the door.\nThey left.\r\nShe works.\n";
        let (mut src, mut tgt) = (Vec::new(), Vec::new());
        let rw = Rewriter::new(RewriteOptions::default());
        let stats = generate_parallel(input.as_bytes(), &rw, &mut src, &mut tgt).unwrap();
        assert_eq!(String::from_utf8(src).unwrap(), "He opened the door.\nThey left.\nShe works.\n");
        assert_eq!(
            String::from_utf8(tgt).unwrap(),
            "They opened the door.\nThey left.\nThey work.\n"
        );
        assert_eq!((stats.lines, stats.changed, stats.unchanged), (3, 2, 1));
        assert_eq!(stats.edits[&EditCategory::Pronoun], 2);
    }
}
