#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;

pub const TARGET_FORMS: [&str; 8] = ["he", "she", "him", "his", "her", "hers", "himself", "herself"];

const SUBJECTS: &[&str] = &["he", "she"];
const VERBS_3SG: &[&str] = &["works", "reads", "watches", "carries", "goes", "has", "is", "does", "says", "fixes"];
const VERBS_PAST: &[&str] = &["opened", "saw", "took", "wanted", "called", "found"];
const PARTICIPLES: &[&str] = &["worked", "gone", "seen", "taken", "finished", "eaten"];
const ADJECTIVES: &[&str] = &["happy", "tall", "tired", "ready", "late", "here"];
const NOUNS: &[&str] = &["book", "car", "friend", "door", "job", "idea", "dog", "house"];
const OBJECTS: &[&str] = &["him", "her"];
const INDEPENDENT: &[&str] = &["his", "hers"];
const POSSESSIVES: &[&str] = &["his", "her"];
const REFLEXIVES: &[&str] = &["himself", "herself"];
const APOSTROPHES: &[&str] = &["'", "\u{2019}"];

fn pick<'a, R: Rng>(rng: &mut R, xs: &[&'a str]) -> &'a str {
    xs.choose(rng).copied().unwrap()
}

fn vary_case<R: Rng>(rng: &mut R, w: &str) -> String {
    match rng.gen_range(0..6) {
        0 => w.to_uppercase(),
        1 => {
            let mut c = w.chars();
            c.next().map(|f| f.to_uppercase().chain(c).collect()).unwrap_or_default()
        }
        _ => w.to_string(),
    }
}

fn cased<R: Rng>(rng: &mut R, xs: &[&str]) -> String {
    let w = pick(rng, xs);
    vary_case(rng, w)
}

fn capitalize(s: &str) -> String {
    let mut c = s.chars();
    c.next().map(|f| f.to_uppercase().chain(c).collect()).unwrap_or_default()
}

/// One sentence built from templates mixing all eight forms, clitics,
/// coordination and case variants.
pub fn fuzz_sentence<R: Rng>(rng: &mut R) -> String {
    let s = cased(rng, SUBJECTS);
    let o = cased(rng, OBJECTS);
    let p = cased(rng, POSSESSIVES);
    let ind = cased(rng, INDEPENDENT);
    let refl = cased(rng, REFLEXIVES);
    let v = pick(rng, VERBS_3SG);
    let v2 = pick(rng, VERBS_3SG);
    let past = pick(rng, VERBS_PAST);
    let part = pick(rng, PARTICIPLES);
    let adj = pick(rng, ADJECTIVES);
    let n = pick(rng, NOUNS);
    let n2 = pick(rng, NOUNS);
    let ap = pick(rng, APOSTROPHES);
    let body = match rng.gen_range(0..16) {
        0 => format!("{s} {v} {p} {n}."),
        1 => format!("{s} {past} {o} and {v2} {p} {n}."),
        2 => format!("{s}{ap}s {adj}."),
        3 => format!("{s}{ap}s {part} {p} {n}."),
        4 => format!("{s} {ap}s {adj} , and {s} {v} ."),
        5 => format!("I gave it to {o}."),
        6 => format!("The {n} is {ind}."),
        7 => format!("{s} hurt {refl} while {s} {v} ."),
        8 => format!("Does {s} know {o}?"),
        9 => format!("{s} {v} and {v2}, but {p} {n2} {past} {refl}."),
        10 => format!("{s}{ap}ll see {o} and {refl} at {p} {n}."),
        11 => format!("\"{s} isn{ap}t {adj},\" {s} said to {o}."),
        12 => format!("Is {s} {adj} with {ind}?"),
        13 => format!("{s} who {v} {p} {n} {v2} too."),
        14 => format!("Nobody but {o} knew {p} {n} was {ind}."),
        _ => format!("{s}, however, {v} {refl}."),
    };
    capitalize(&body)
}

pub fn fuzz_corpus<R: Rng>(rng: &mut R, n: usize) -> Vec<String> {
    (0..n).map(|_| fuzz_sentence(rng)).collect()
}

/// Independent WER oracle: full-table edit distance filled by memoized
/// recursion from the end of both sequences.
pub fn oracle_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    fn go<T: PartialEq>(a: &[T], b: &[T], i: usize, j: usize, memo: &mut Vec<Vec<Option<usize>>>) -> usize {
        if let Some(v) = memo[i][j] {
            return v;
        }
        let v = if i == a.len() {
            b.len() - j
        } else if j == b.len() {
            a.len() - i
        } else {
            let sub = go(a, b, i + 1, j + 1, memo) + usize::from(a[i] != b[j]);
            let del = go(a, b, i + 1, j, memo) + 1;
            let ins = go(a, b, i, j + 1, memo) + 1;
            sub.min(del).min(ins)
        };
        memo[i][j] = Some(v);
        v
    }
    let mut memo = vec![vec![None; b.len() + 1]; a.len() + 1];
    go(a, b, 0, 0, &mut memo)
}

pub fn oracle_wer<T: PartialEq>(hyp: &[T], reference: &[T]) -> f64 {
    oracle_distance(hyp, reference) as f64 / reference.len().max(1) as f64
}

/// Random text over a mix of ASCII, whitespace, punctuation, apostrophes,
/// combining marks, CJK, emoji and arbitrary scalar values.
pub fn random_utf8<R: Rng>(rng: &mut R, max_len: usize) -> String {
    const POOL: &[char] = &[
        'a', 'b', 'Z', 'e', 's', 't', ' ', ' ', ' ', '\t', '\n', '\r', '.', ',', '!', '?', '-', '\'',
        '\u{2019}', '"', '(', ')', '0', '9', 'é', '\u{301}', '中', '😀', '\u{200d}', '\u{a0}',
        '\u{3000}', '\u{fe0f}', 'ß', 'İ',
    ];
    let len = rng.gen_range(0..=max_len);
    let mut out = String::new();
    for _ in 0..len {
        match rng.gen_range(0..10) {
            0 => loop {
                if let Some(c) = char::from_u32(rng.gen_range(0..0x11_0000)) {
                    out.push(c);
                    break;
                }
            },
            1 | 2 => out.push_str(["he", "She's", "n't", "Mr.", "his", "U.S.", "'re", "3.5"].choose(rng).unwrap()),
            _ => out.push(*POOL.choose(rng).unwrap()),
        }
    }
    out
}
