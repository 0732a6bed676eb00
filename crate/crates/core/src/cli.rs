//! Batch command-line front end: summarize, matrices, evaluate.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::evaluation::evaluate_texts;
use crate::ingestion::{parse_document_with, InputFormat, ParseConfig, DEFAULT_COMMENT_SELECTOR};
use crate::linguistic::{PipelineConfig, Stemmer};
use crate::scoring::{dump_matrices, OrderingMode, ScoreVariant, SummarySize};
use crate::{build_matrices, summarize, SummaryOptions};

#[derive(Parser)]
#[command(
    name = "blogsum",
    about = "Title-driven extractive summarization of blog pages",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize one or more blog pages
    Summarize(SummarizeArgs),
    /// Dump the title-sentence and presence factor matrices for one page
    Matrices(MatricesArgs),
    /// Compute precision/recall of a candidate summary against a model summary
    Evaluate(EvaluateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Record,
    Html,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Literal,
    Coverage,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Score,
    Document,
}

#[derive(Clone, Copy, ValueEnum)]
enum StemmerArg {
    Porter,
    None,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputArg {
    Text,
    Record,
    Matrices,
}

#[derive(Args)]
struct PipelineArgs {
    /// Input format; guessed from the file extension when omitted
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Stoplist file (one term per line, # comments); default list when omitted
    #[arg(long)]
    stopwords: Option<PathBuf>,
    /// Lemma lexicon file (surface<TAB>lemma lines); off when omitted
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Stemmer applied after normalization
    #[arg(long, value_enum, default_value = "porter")]
    stemmer: StemmerArg,
    /// CSS selector marking comment regions in HTML input
    #[arg(long, default_value = DEFAULT_COMMENT_SELECTOR)]
    comment_selector: String,
}

#[derive(Args)]
struct SummarizeArgs {
    #[command(flatten)]
    pipeline: PipelineArgs,
    /// Absolute summary length in sentences
    #[arg(long, conflicts_with = "ratio")]
    k: Option<usize>,
    /// Summary length as a fraction of the sentence count (default 0.2)
    #[arg(long)]
    ratio: Option<f64>,
    /// Scoring formula
    #[arg(long, value_enum, default_value = "literal")]
    variant: VariantArg,
    /// Order of the emitted sentences
    #[arg(long, value_enum, default_value = "score")]
    order: OrderArg,
    /// Keep zero-score sentences eligible for selection
    #[arg(long)]
    include_zero: bool,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    output: OutputArg,
    /// Input files
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
}

#[derive(Args)]
struct MatricesArgs {
    #[command(flatten)]
    pipeline: PipelineArgs,
    /// Input file
    input: PathBuf,
}

#[derive(Args)]
struct EvaluateArgs {
    /// Candidate summary file, one sentence per line
    candidate: PathBuf,
    /// Model (reference) summary file, one sentence per line
    #[arg(long)]
    model: PathBuf,
    /// Emit a JSON record instead of the text report
    #[arg(long)]
    record: bool,
}

/// Runs the CLI; returns the process exit code (0 success, 1 any per-file
/// failure, 2 bad invocation).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Summarize(args) => match build_run(&args.pipeline) {
            Ok(run) => {
                // size flags are invocation-level, not per-file
                if let Some(k) = args.k {
                    if k < 1 {
                        eprintln!("invalid summary size: k must be at least 1");
                        return 2;
                    }
                }
                if let Some(r) = args.ratio {
                    if !(r > 0.0 && r <= 1.0) {
                        eprintln!("invalid summary size: ratio {r} not in (0, 1]");
                        return 2;
                    }
                }
                let mut failed = false;
                for input in &args.inputs {
                    if let Err(e) = summarize_one(&run, &args, input, &mut out) {
                        eprintln!("{e}");
                        failed = true;
                    }
                }
                i32::from(failed)
            }
            Err(e) => {
                eprintln!("{e}");
                2
            }
        },
        Command::Matrices(args) => match build_run(&args.pipeline) {
            Ok(run) => match matrices_one(&run, &args.input, &mut out) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("{e}");
                    1
                }
            },
            Err(e) => {
                eprintln!("{e}");
                2
            }
        },
        Command::Evaluate(args) => match evaluate_cmd(&args, &mut out) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("{e}");
                1
            }
        },
    }
}

/// Resolved per-run configuration shared by all inputs of one invocation.
struct RunConfig {
    pipeline: PipelineConfig,
    parse: ParseConfig,
    format: Option<InputFormat>,
}

fn build_run(args: &PipelineArgs) -> Result<RunConfig> {
    let mut pipeline = PipelineConfig::default();
    if let Some(path) = &args.stopwords {
        pipeline.load_stoplist(path)?;
    }
    if let Some(path) = &args.lexicon {
        pipeline.load_lexicon(path)?;
    }
    pipeline.stemmer = match args.stemmer {
        StemmerArg::Porter => Stemmer::Porter,
        StemmerArg::None => Stemmer::None,
    };
    Ok(RunConfig {
        pipeline,
        parse: ParseConfig {
            comment_selector: args.comment_selector.clone(),
        },
        format: args.format.map(|f| match f {
            FormatArg::Plain => InputFormat::Plain,
            FormatArg::Record => InputFormat::Record,
            FormatArg::Html => InputFormat::Html,
        }),
    })
}

fn load_document(run: &RunConfig, path: &Path) -> Result<crate::BlogDocument> {
    let raw = std::fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let format = run.format.unwrap_or_else(|| {
        InputFormat::from_extension(path.extension().and_then(|e| e.to_str()))
    });
    parse_document_with(&raw, format, &path.display().to_string(), &run.parse)
}

#[derive(Serialize)]
struct SentenceRecord {
    index: usize,
    score: String,
    distinct_hits: usize,
    text: String,
}

#[derive(Serialize)]
struct SummaryRecord {
    source_id: String,
    k: usize,
    variant: &'static str,
    sentences: Vec<SentenceRecord>,
}

fn summarize_one(
    run: &RunConfig,
    args: &SummarizeArgs,
    input: &Path,
    out: &mut impl Write,
) -> Result<()> {
    let doc = load_document(run, input)?;
    let variant = match args.variant {
        VariantArg::Literal => ScoreVariant::Literal,
        VariantArg::Coverage => ScoreVariant::Coverage,
    };
    if matches!(args.output, OutputArg::Matrices) {
        return matrices_one(run, input, out);
    }
    let options = SummaryOptions {
        size: match (args.k, args.ratio) {
            (Some(k), _) => SummarySize::Count(k),
            (None, Some(r)) => SummarySize::Ratio(r),
            (None, None) => SummarySize::Ratio(0.2),
        },
        variant,
        ordering: match args.order {
            OrderArg::Score => OrderingMode::Score,
            OrderArg::Document => OrderingMode::Document,
        },
        include_zero: args.include_zero,
    };
    let summary = summarize(&doc, &run.pipeline, &options)?;
    match args.output {
        OutputArg::Text => {
            writeln!(out, "# {}", doc.source_id).ok();
            for s in &summary.selected {
                writeln!(out, "{}", s.sentence.raw_text).ok();
            }
            writeln!(out).ok();
        }
        OutputArg::Record => {
            let record = SummaryRecord {
                source_id: doc.source_id.clone(),
                k: summary.k,
                variant: match variant {
                    ScoreVariant::Literal => "literal",
                    ScoreVariant::Coverage => "coverage",
                },
                sentences: summary
                    .selected
                    .iter()
                    .map(|s| SentenceRecord {
                        index: s.sentence.index,
                        score: s.score.to_string(),
                        distinct_hits: s.distinct_hits,
                        text: s.sentence.raw_text.clone(),
                    })
                    .collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&record).expect("serialize")).ok();
        }
        OutputArg::Matrices => unreachable!(),
    }
    Ok(())
}

fn matrices_one(run: &RunConfig, input: &Path, out: &mut impl Write) -> Result<()> {
    let doc = load_document(run, input)?;
    let (tsm, pfm) = build_matrices(&doc, &run.pipeline)?;
    writeln!(out, "# {}", doc.source_id).ok();
    write!(out, "{}", dump_matrices(&tsm, &pfm)).ok();
    Ok(())
}

fn read_summary_lines(path: &Path) -> Result<Vec<String>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

fn evaluate_cmd(args: &EvaluateArgs, out: &mut impl Write) -> Result<()> {
    let candidate = read_summary_lines(&args.candidate)?;
    let model = read_summary_lines(&args.model)?;
    let report = evaluate_texts(&candidate, &model)?;
    if args.record {
        writeln!(out, "{}", serde_json::to_string(&report).expect("serialize")).ok();
    } else {
        write!(out, "{}", report.to_text()).ok();
    }
    Ok(())
}
