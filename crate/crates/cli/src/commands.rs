use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use uniscript::cka::{load_activations, pairwise_layer_cka, Pooling};
use uniscript::stats::{batch_row_tsv, parse_values, run_batch, BatchConfig, BATCH_TSV_HEADER};
use uniscript::tokenizer::{count_tokens, train_bpe_counts, BpeConfig, TokenCounts, WordCounts};
use uniscript::{
    compare, load_scheme, process_corpus, transliterate_auto_with, transliterate_with, Alternative, DetectReport,
    Error, FilterConfig, MwuConfig, NormalizeOptions, PMethod, SampleGroup, ScriptTag, SubwordVocab,
    TranslitOptions, TransliterationReport,
};

use crate::{Cli, Command, GlobalArgs};

/// Share of malformed records above which `filter` exits with status 2.
pub const MAX_MALFORMED_FRACTION: f64 = 0.10;

/// Lines handed to the parallel tokenizer at once.
const TOKENIZE_BATCH: usize = 1024;

/// Why a subcommand failed; decides the exit status.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments, configuration or unreadable files (exit 1).
    Usage(String),
    /// Input data the command cannot process or that exceeds a threshold (exit 2).
    Data(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidConfig(_) | Error::UnknownScript(_) | Error::UnsupportedScript(_) | Error::Io(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Data(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

#[derive(Debug, clap::Args)]
pub struct TranslitArgs {
    /// Source script: auto, or one of deva, beng, orya, gujr, guru, sinh.
    #[arg(long, default_value = "auto")]
    pub script: String,
    /// Pass danda and double danda through instead of writing "." and "..".
    #[arg(long)]
    pub keep_danda: bool,
    /// Write the JSON transliteration report to FILE.
    #[arg(long, value_name = "FILE")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct FilterArgs {
    /// JSON filter configuration; defaults to the built-in language table.
    #[arg(long, value_name = "FILE")]
    pub config: Option<PathBuf>,
    /// Romanize kept documents (overrides the configuration).
    #[arg(long)]
    pub transliterate: bool,
    /// Write the JSON pipeline report to FILE.
    #[arg(long, value_name = "FILE")]
    pub report: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
pub struct BpeTrainArgs {
    /// Target number of vocabulary pieces.
    #[arg(long)]
    pub vocab_size: usize,
    /// Where to write the vocabulary JSON.
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct TokMetricsArgs {
    /// Vocabulary JSON written by `bpe-train`.
    #[arg(long, value_name = "FILE")]
    pub vocab: PathBuf,
}

#[derive(Debug, clap::Args)]
pub struct MwuArgs {
    /// Group 1 values: one number per line, or a TSV with a header.
    #[arg(long, value_name = "FILE", requires = "group2", conflicts_with = "batch")]
    pub group1: Option<PathBuf>,
    /// Group 2 values, same format as group 1.
    #[arg(long, value_name = "FILE", requires = "group1")]
    pub group2: Option<PathBuf>,
    /// Label for group 1 (default: file stem).
    #[arg(long)]
    pub label1: Option<String>,
    /// Label for group 2 (default: file stem).
    #[arg(long)]
    pub label2: Option<String>,
    /// Batch TSV with columns task, language, seed, model, metric.
    #[arg(long, value_name = "FILE", required_unless_present = "group1")]
    pub batch: Option<PathBuf>,
    /// Model name forming group 1 in batch mode.
    #[arg(long, default_value = uniscript::stats::DEFAULT_GROUP1_LABEL)]
    pub model1: String,
    /// Model name forming group 2 in batch mode.
    #[arg(long, default_value = uniscript::stats::DEFAULT_GROUP2_LABEL)]
    pub model2: String,
    /// Emit batch results as JSON instead of TSV.
    #[arg(long)]
    pub json: bool,
    /// Significance level.
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// p-value method: auto, exact or normal.
    #[arg(long, default_value = "auto")]
    pub method: String,
    /// Alternative hypothesis: two-sided, greater or less.
    #[arg(long, default_value = "two-sided")]
    pub alternative: String,
    /// Disable the continuity correction of the normal approximation.
    #[arg(long)]
    pub no_continuity_correction: bool,
}

#[derive(Debug, clap::Args)]
pub struct CkaArgs {
    /// Activation manifest JSON.
    #[arg(long, value_name = "FILE")]
    pub manifest: PathBuf,
    /// Where to write the CKA table JSON.
    #[arg(long, value_name = "FILE")]
    pub out: PathBuf,
    /// Token pooling for token-level activation files: mean or first-token.
    #[arg(long, default_value = "mean")]
    pub pooling: String,
    /// Also write per-language, per-layer averages as TSV.
    #[arg(long, value_name = "FILE")]
    pub tsv: Option<PathBuf>,
}

pub fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Detect => detect(g),
        Command::Translit(a) => translit(g, a),
        Command::Filter(a) => filter(g, a),
        Command::BpeTrain(a) => bpe_train(g, a),
        Command::TokMetrics(a) => tok_metrics(g, a),
        Command::Mwu(a) => mwu(g, a),
        Command::Cka(a) => cka(g, a),
    }
}

fn open(path: &Path) -> Result<File, Failure> {
    File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_to_string(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn create(path: &Path) -> Result<BufWriter<File>, Failure> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn input(g: &GlobalArgs) -> Result<Box<dyn BufRead>, Failure> {
    Ok(match &g.input {
        Some(p) => Box::new(BufReader::new(open(p)?)),
        None => Box::new(io::stdin().lock()),
    })
}

fn output(g: &GlobalArgs) -> Result<Box<dyn Write>, Failure> {
    Ok(match &g.output {
        Some(p) => Box::new(create(p)?),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn input_name(g: &GlobalArgs) -> String {
    g.input.as_ref().map_or_else(|| "-".to_string(), |p| p.display().to_string())
}

/// Add a `config` entry to a JSON object.
fn with_config(mut v: Value, config: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("config".into(), config);
    }
    v
}

fn write_json(mut w: impl Write, v: &Value) -> Outcome {
    serde_json::to_writer_pretty(&mut w, v).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

/// Strip one trailing "\n" or "\r\n"; returns the line and its terminator.
fn split_terminator(line: &str) -> (&str, &str) {
    if let Some(l) = line.strip_suffix("\r\n") {
        (l, "\r\n")
    } else if let Some(l) = line.strip_suffix('\n') {
        (l, "\n")
    } else {
        (line, "")
    }
}

fn detect(g: &GlobalArgs) -> Outcome {
    let mut inp = input(g)?;
    let mut out = output(g)?;
    let mut line = String::new();
    while inp.read_line(&mut line)? > 0 {
        let (text, _) = split_terminator(&line);
        let rep = DetectReport::for_text(text);
        serde_json::to_writer(&mut out, &rep).map_err(|e| Failure::Usage(e.to_string()))?;
        out.write_all(b"\n")?;
        line.clear();
    }
    out.flush()?;
    Ok(())
}

fn translit(g: &GlobalArgs, a: &TranslitArgs) -> Outcome {
    let opts = TranslitOptions { keep_danda: a.keep_danda };
    let scheme = match a.script.as_str() {
        "auto" => None,
        s => {
            let tag: ScriptTag = s.parse()?;
            Some(load_scheme(tag)?)
        }
    };
    let mut inp = input(g)?;
    let mut out = output(g)?;
    let mut report = TransliterationReport::default();
    let mut line = String::new();
    while inp.read_line(&mut line)? > 0 {
        let (text, end) = split_terminator(&line);
        let (t, rep) = match scheme {
            Some(s) => transliterate_with(text, s, opts),
            None => transliterate_auto_with(text, opts),
        };
        out.write_all(t.as_bytes())?;
        out.write_all(end.as_bytes())?;
        report.merge(&rep);
        line.clear();
    }
    out.flush()?;
    if report.unmapped_total() > 0 {
        log::warn!("{} codepoints had no mapping and were passed through", report.unmapped_total());
    }
    if let Some(path) = &a.report {
        let config = json!({
            "toolkit_version": crate::version(),
            "input": input_name(g),
            "script": a.script,
            "keep_danda": a.keep_danda,
        });
        write_json(create(path)?, &with_config(json!(report), config))?;
    }
    Ok(())
}

fn filter(g: &GlobalArgs, a: &FilterArgs) -> Outcome {
    let mut cfg = match &a.config {
        Some(p) => FilterConfig::from_json(&read_to_string(p)?)
            .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => FilterConfig::default(),
    };
    cfg.transliterate |= a.transliterate;
    let report = process_corpus(input(g)?, output(g)?, &cfg)?;
    let t = report.totals();
    log::info!(
        "{} records: {} emitted, {} script mismatches, {} without script, {} malformed",
        report.records,
        t.emitted,
        t.dropped_script_mismatch,
        t.dropped_empty,
        report.malformed
    );
    if let Some(path) = &a.report {
        let mut v = serde_json::to_value(&report).expect("report serializes");
        if let Value::Object(m) = &mut v {
            m.insert("toolkit_version".into(), json!(crate::version()));
            m.insert("input".into(), json!(input_name(g)));
        }
        write_json(create(path)?, &v)?;
    }
    let frac = report.malformed_fraction();
    if frac > MAX_MALFORMED_FRACTION {
        return Err(Failure::Data(format!(
            "{} of {} records malformed ({:.1}% > {:.0}%)",
            report.malformed,
            report.records,
            100.0 * frac,
            100.0 * MAX_MALFORMED_FRACTION
        )));
    }
    Ok(())
}

fn bpe_train(g: &GlobalArgs, a: &BpeTrainArgs) -> Outcome {
    let cfg = BpeConfig::new(a.vocab_size);
    let mut counts = WordCounts::new(NormalizeOptions::default());
    for line in input(g)?.lines() {
        counts.add_line(&line?);
    }
    let vocab = train_bpe_counts(&counts, &cfg)?;
    let mut w = create(&a.out)?;
    w.write_all(vocab.to_json().as_bytes())?;
    writeln!(w)?;
    w.flush()?;
    let summary = json!({
        "vocab": a.out.display().to_string(),
        "pieces": vocab.len(),
        "distinct_words": counts.distinct_words(),
        "distinct_codepoints": counts.distinct_codepoints(),
        "config": {
            "toolkit_version": crate::version(),
            "input": input_name(g),
            "vocab_size": a.vocab_size,
            "continuation_marker": vocab.continuation_marker(),
        },
    });
    write_json(output(g)?, &summary)
}

fn tok_metrics(g: &GlobalArgs, a: &TokMetricsArgs) -> Outcome {
    let vocab = SubwordVocab::from_json(&read_to_string(&a.vocab)?)
        .map_err(|e| Failure::Usage(format!("{}: {e}", a.vocab.display())))?;
    let mut totals = TokenCounts::default();
    let mut batch = Vec::with_capacity(TOKENIZE_BATCH);
    for line in input(g)?.lines() {
        batch.push(line?);
        if batch.len() == TOKENIZE_BATCH {
            totals.merge(&count_tokens(&batch, &vocab));
            batch.clear();
        }
    }
    totals.merge(&count_tokens(&batch, &vocab));
    let metrics = totals.metrics()?;
    let config = json!({
        "toolkit_version": crate::version(),
        "input": input_name(g),
        "vocab": a.vocab.display().to_string(),
        "vocab_size": vocab.len(),
    });
    write_json(output(g)?, &with_config(json!(metrics), config))
}

fn mwu_config(a: &MwuArgs) -> Result<MwuConfig, Failure> {
    let cfg = MwuConfig {
        alpha: a.alpha,
        alternative: a.alternative.parse::<Alternative>()?,
        p_method: a.method.parse::<PMethod>()?,
        continuity_correction: !a.no_continuity_correction,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn group(path: &Path, label: &Option<String>) -> Result<SampleGroup, Failure> {
    let values = parse_values(&read_to_string(path)?).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    let label = label.clone().unwrap_or_else(|| {
        path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
    });
    Ok(SampleGroup::new(label, values)?)
}

fn mwu(g: &GlobalArgs, a: &MwuArgs) -> Outcome {
    let cfg = mwu_config(a)?;
    if let Some(batch) = &a.batch {
        let bcfg = BatchConfig { group1_model: a.model1.clone(), group2_model: a.model2.clone(), mwu: cfg };
        let rows = run_batch(&read_to_string(batch)?, &bcfg)?;
        let config = json!({ "toolkit_version": crate::version(), "batch": batch.display().to_string(), "batch_config": bcfg });
        let mut out = output(g)?;
        if a.json {
            return write_json(out, &json!({ "config": config, "results": rows }));
        }
        writeln!(out, "# config: {config}")?;
        writeln!(out, "{BATCH_TSV_HEADER}")?;
        for row in &rows {
            writeln!(out, "{}", batch_row_tsv(row))?;
        }
        out.flush()?;
        return Ok(());
    }
    let (p1, p2) = match (&a.group1, &a.group2) {
        (Some(p1), Some(p2)) => (p1, p2),
        _ => return Err(Failure::Usage("either --group1/--group2 or --batch is required".into())),
    };
    let (g1, g2) = (group(p1, &a.label1)?, group(p2, &a.label2)?);
    let result = compare(&g1, &g2, &cfg)?;
    let config = json!({
        "toolkit_version": crate::version(),
        "group1": p1.display().to_string(),
        "group2": p2.display().to_string(),
        "mwu": cfg,
    });
    write_json(output(g)?, &with_config(json!(result), config))
}

fn cka(_g: &GlobalArgs, a: &CkaArgs) -> Outcome {
    let pooling: Pooling = a.pooling.parse()?;
    let (manifest, acts) = load_activations(&a.manifest, pooling)?;
    let table = pairwise_layer_cka(&acts)?;
    for gap in &table.gaps {
        log::warn!("no CKA for {}/{} at layer {}: {}", gap.language_a, gap.language_b, gap.layer, gap.reason);
    }
    let config = json!({
        "toolkit_version": crate::version(),
        "manifest": a.manifest.display().to_string(),
        "pooling": pooling,
        "token_level": manifest.token_level,
        "file_pattern": manifest.file_pattern,
        "n_sentences": manifest.n_sentences,
    });
    write_json(create(&a.out)?, &with_config(json!(table), config))?;
    if let Some(path) = &a.tsv {
        let mut w = create(path)?;
        w.write_all(table.averages_tsv().as_bytes())?;
        w.flush()?;
    }
    log::info!("{} scores, {} gaps written to {}", table.scores.len(), table.gaps.len(), a.out.display());
    Ok(())
}
