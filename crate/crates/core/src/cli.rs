//! The `neutral` command line.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::annotate::{load_external_annotations, AnnotatedSentence};
use crate::corpus::{balanced_sample, generate_parallel};
use crate::error::{Error, Result};
use crate::eval::{evaluate, EvalOptions, WerMode};
use crate::nouns::NounLexicon;
use crate::rewrite::{ContractionStyle, RewriteOptions, Rewriter, TitleMap, BATCH_SIZE};

/// Default lexicon path when `--lexicon` is not given.
pub const LEXICON_ENV: &str = "NEUTRAL_LEXICON";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "neutral",
    version,
    about = "Rewrite binary-gendered English into singular-they forms",
    arg_required_else_help = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rewrite lines from a file or standard input.
    Rewrite {
        /// Input file; standard input when absent.
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        rewrite: RewriteArgs,
        /// CoNLL-U annotations, one sentence per input line.
        #[arg(long)]
        conllu: Option<PathBuf>,
        /// Emit one JSON object per line with the output and its edit log.
        #[arg(long)]
        json: bool,
    },
    /// Word error rate of a hypothesis file against a reference.
    Eval {
        source: PathBuf,
        hypothesis: PathBuf,
        reference: PathBuf,
        #[arg(long, value_enum, default_value_t = ModeArg::Tokenized)]
        mode: ModeArg,
        #[arg(long)]
        ignore_case: bool,
        #[arg(long)]
        json: bool,
        /// Include per-sentence statistics in the JSON report.
        #[arg(long)]
        per_sentence: bool,
    },
    /// Draw a sample balanced across the eight binary forms.
    Sample {
        input: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the sample report as JSON on standard output.
        #[arg(long)]
        json: bool,
    },
    /// Write a source/target parallel corpus.
    Parallel {
        input: Option<PathBuf>,
        #[arg(long)]
        src: PathBuf,
        #[arg(long)]
        tgt: PathBuf,
        #[command(flatten)]
        rewrite: RewriteArgs,
    },
}

#[derive(Debug, Args)]
pub struct RewriteArgs {
    /// Also rewrite gendered nouns.
    #[arg(long)]
    pub nouns: bool,
    /// Noun lexicon TSV; defaults to $NEUTRAL_LEXICON or the bundled list.
    #[arg(long, conflicts_with = "paper_exact")]
    pub lexicon: Option<PathBuf>,
    /// Use the unnormalized noun list, number mismatches included.
    #[arg(long)]
    pub paper_exact: bool,
    #[arg(long, value_enum, default_value_t = ContractionArg::Preserve)]
    pub contractions: ContractionArg,
    /// Title replacements TSV (title<TAB>replacement).
    #[arg(long)]
    pub titles: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ContractionArg {
    Preserve,
    Expand,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ModeArg {
    Tokenized,
    Raw,
}

impl RewriteArgs {
    pub fn rewriter(&self) -> Result<Rewriter> {
        let title_map = self.titles.as_ref().map(TitleMap::from_path).transpose()?;
        let options = RewriteOptions {
            neutralize_nouns: self.nouns,
            contraction_style: match self.contractions {
                ContractionArg::Preserve => ContractionStyle::Preserve,
                ContractionArg::Expand => ContractionStyle::Expand,
            },
            title_map,
        };
        let env_path = std::env::var_os(LEXICON_ENV).filter(|p| !p.is_empty()).map(PathBuf::from);
        let rewriter = Rewriter::new(options);
        Ok(if self.paper_exact {
            rewriter.with_lexicon(NounLexicon::paper_exact().clone())
        } else if let Some(path) = self.lexicon.clone().or(env_path) {
            rewriter.with_lexicon(NounLexicon::from_path(path)?)
        } else {
            rewriter
        })
    }
}

fn open_input<'a>(path: Option<&Path>, stdin: &'a mut dyn BufRead) -> Result<Box<dyn BufRead + 'a>> {
    Ok(match path {
        Some(p) => Box::new(BufReader::new(File::open(p).map_err(|e| Error::io(p, e))?)),
        None => Box::new(stdin),
    })
}

fn open_output<'a>(path: Option<&Path>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Error::io(p, e))?)),
        None => Box::new(stdout),
    })
}

fn read_all_lines(input: &mut dyn BufRead) -> Result<Vec<String>> {
    input
        .lines()
        .map(|l| l.map(|l| l.strip_suffix('\r').map(str::to_string).unwrap_or(l)).map_err(Error::from))
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn run_rewrite(
    input: Option<&Path>,
    output: Option<&Path>,
    args: &RewriteArgs,
    conllu: Option<&Path>,
    json: bool,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<()> {
    let rewriter = args.rewriter()?;
    let external = conllu.map(load_external_annotations).transpose()?;
    if let Some(ext) = &external {
        for w in &ext.warnings {
            writeln!(stderr, "warning: {w}")?;
        }
    }
    let mut lines = open_input(input, stdin)?.lines();
    let mut out = open_output(output, stdout)?;
    let mut line_no = 0;
    loop {
        let mut chunk = Vec::with_capacity(BATCH_SIZE);
        for line in lines.by_ref().take(BATCH_SIZE) {
            let line = line?;
            chunk.push(line.strip_suffix('\r').map(str::to_string).unwrap_or(line));
        }
        if chunk.is_empty() {
            break;
        }
        let annotations: Vec<Option<&AnnotatedSentence>> = (0..chunk.len())
            .map(|k| external.as_ref().and_then(|e| e.sentences.get(line_no + k)))
            .collect();
        let results = rewriter.rewrite_batch_annotated(&chunk, &annotations);
        for (k, r) in results.iter().enumerate() {
            for w in &r.warnings {
                writeln!(stderr, "warning: line {}: {w}", line_no + k + 1)?;
            }
            if json {
                writeln!(out, "{}", r.to_json_line())?;
            } else {
                writeln!(out, "{}", r.text())?;
            }
        }
        line_no += chunk.len();
    }
    out.flush()?;
    Ok(())
}

fn dispatch(
    command: Command,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<()> {
    match command {
        Command::Rewrite { input, output, rewrite, conllu, json } => run_rewrite(
            input.as_deref(),
            output.as_deref(),
            &rewrite,
            conllu.as_deref(),
            json,
            stdin,
            stdout,
            stderr,
        ),
        Command::Eval { source, hypothesis, reference, mode, ignore_case, json, per_sentence } => {
            let options = EvalOptions {
                mode: match mode {
                    ModeArg::Tokenized => WerMode::Tokenized,
                    ModeArg::Raw => WerMode::Raw,
                },
                case_sensitive: !ignore_case,
            };
            let mut report = evaluate(&source, &hypothesis, &reference, options)?;
            if !per_sentence {
                report = report.without_per_sentence();
            }
            if json {
                writeln!(stdout, "{}", report.to_json())?;
            } else {
                write!(stdout, "{}", report.to_table())?;
            }
            Ok(())
        }
        Command::Sample { input, output, n, seed, json } => {
            let lines = read_all_lines(&mut *open_input(input.as_deref(), stdin)?)?;
            let sample = balanced_sample(&lines, n, seed)?;
            for s in &sample.shortfall {
                writeln!(
                    stderr,
                    "warning: quota for {:?} not met: {} of {} lines ({} available)",
                    s.form.as_str(),
                    s.selected,
                    s.required,
                    s.available
                )?;
            }
            if json {
                let mut sink = std::io::sink();
                let mut out = open_output(output.as_deref(), &mut sink)?;
                for l in &sample.lines {
                    writeln!(out, "{l}")?;
                }
                out.flush()?;
                writeln!(stdout, "{}", serde_json::to_string_pretty(&SampleReport::from(&sample)).expect("report serializes"))?;
            } else {
                let mut out = open_output(output.as_deref(), stdout)?;
                for l in &sample.lines {
                    writeln!(out, "{l}")?;
                }
                out.flush()?;
            }
            Ok(())
        }
        Command::Parallel { input, src, tgt, rewrite } => {
            let rewriter = rewrite.rewriter()?;
            let reader = open_input(input.as_deref(), stdin)?;
            let s = BufWriter::new(File::create(&src).map_err(|e| Error::io(&src, e))?);
            let t = BufWriter::new(File::create(&tgt).map_err(|e| Error::io(&tgt, e))?);
            let stats = generate_parallel(reader, &rewriter, s, t)?;
            writeln!(stdout, "{}", serde_json::to_string_pretty(&stats).expect("stats serialize"))?;
            Ok(())
        }
    }
}

#[derive(serde::Serialize)]
struct SampleReport<'a> {
    selected: usize,
    quota: usize,
    lines_per_form: &'a std::collections::BTreeMap<crate::rewrite::BinaryForm, usize>,
    shortfall: &'a [crate::corpus::Shortfall],
}

impl<'a> From<&'a crate::corpus::Sample> for SampleReport<'a> {
    fn from(s: &'a crate::corpus::Sample) -> Self {
        SampleReport {
            selected: s.lines.len(),
            quota: s.quota,
            lines_per_form: &s.lines_per_form,
            shortfall: &s.shortfall,
        }
    }
}

/// Runs the command line and returns the process exit status: 0 on
/// success, 1 on a usage error, 2 when input data is missing or malformed.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{rendered}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli.command, stdin, stdout, stderr) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_data_error() {
                EXIT_DATA
            } else {
                EXIT_USAGE
            }
        }
    }
}
