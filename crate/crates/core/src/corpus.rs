//! Corpus preparation: normalization, dominant-script filtering by language
//! tag and optional transliteration over JSON Lines documents.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::script::{script_histogram, ScriptTag};
use crate::translit::{transliterate_auto_with, TranslitOptions, TransliterationReport};

/// Header placed in every pipeline report: the normalizer is an approximation.
pub const NORMALIZER_NOTE: &str = "approximate IndicNLP normalization: NFC, control-character removal \
(except newline/tab), whitespace-run collapse, optional nukta canonicalization; \
not a codepoint-for-codepoint replica";

/// Records processed per parallel batch.
pub const BATCH_SIZE: usize = 1024;

/// Malformed examples kept in the report.
const MAX_MALFORMED_EXAMPLES: usize = 20;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct NormalizeOptions {
    /// Rewrite the three NFC-composed nukta letters (U+0929, U+0931, U+0934)
    /// as base + nukta, so every nukta letter has one spelling.
    pub canonical_nukta: bool,
}

/// Normalize text: NFC, drop control characters other than `\n`/`\t`,
/// collapse whitespace runs (to `\n` when the run holds a newline, else a
/// single space) and optionally canonicalize nukta letters. Idempotent.
pub fn normalize(text: &str, opts: &NormalizeOptions) -> String {
    let mut out = String::with_capacity(text.len());
    let mut pending_ws: Option<char> = None;
    for c in text.nfc() {
        if c.is_control() && c != '\n' && c != '\t' {
            continue;
        }
        if c.is_whitespace() {
            if c == '\n' || pending_ws.is_none() {
                pending_ws = Some(if c == '\n' { '\n' } else { ' ' });
            }
            continue;
        }
        if let Some(w) = pending_ws.take() {
            out.push(w);
        }
        out.push(c);
    }
    if let Some(w) = pending_ws {
        out.push(w);
    }
    // Removing a control character can bring a base and a combining mark together.
    let out: String = out.nfc().collect();
    if opts.canonical_nukta {
        let mut s = String::with_capacity(out.len() + 8);
        for c in out.chars() {
            match c {
                '\u{0929}' => s.push_str("\u{0928}\u{093C}"),
                '\u{0931}' => s.push_str("\u{0930}\u{093C}"),
                '\u{0934}' => s.push_str("\u{0933}\u{093C}"),
                _ => s.push(c),
            }
        }
        s
    } else {
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusDocument {
    pub id: String,
    pub lang: String,
    pub text: String,
}

fn default_scripts() -> BTreeMap<String, BTreeSet<ScriptTag>> {
    use ScriptTag::*;
    [
        ("hi", Devanagari),
        ("bn", BengaliAssamese),
        ("mr", Devanagari),
        ("ne", Devanagari),
        ("si", Sinhala),
        ("gu", Gujarati),
        ("pa", Gurmukhi),
        ("or", Oriya),
        ("as", BengaliAssamese),
        ("sa", Devanagari),
        ("bpy", BengaliAssamese),
        ("gom", Devanagari),
        ("bh", Devanagari),
        ("mai", Devanagari),
    ]
    .into_iter()
    .map(|(l, t)| (l.to_string(), BTreeSet::from([t])))
    .collect()
}

/// Filter and transform settings. The default maps the fourteen pretraining
/// languages to their scripts and does not transliterate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterConfig {
    #[serde(default = "default_scripts")]
    pub allowed_scripts_by_lang: BTreeMap<String, BTreeSet<ScriptTag>>,
    #[serde(default)]
    pub transliterate: bool,
    #[serde(default)]
    pub normalization: NormalizeOptions,
    #[serde(default)]
    pub translit: TranslitOptions,
}

impl Default for FilterConfig {
    fn default() -> Self {
        FilterConfig {
            allowed_scripts_by_lang: default_scripts(),
            transliterate: false,
            normalization: NormalizeOptions::default(),
            translit: TranslitOptions::default(),
        }
    }
}

impl FilterConfig {
    pub fn validate(&self) -> Result<()> {
        if self.allowed_scripts_by_lang.is_empty() {
            return Err(Error::InvalidConfig("no languages configured".into()));
        }
        for (lang, scripts) in &self.allowed_scripts_by_lang {
            if scripts.is_empty() {
                return Err(Error::InvalidConfig(format!("language `{lang}` has an empty script set")));
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let cfg: FilterConfig = serde_json::from_str(s)?;
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DropReason {
    ScriptMismatch,
    NoScriptfulText,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FilterDecision {
    Keep,
    Drop(DropReason),
}

/// Keep a document iff its dominant script is allowed for its language.
pub fn filter_document(doc: &CorpusDocument, cfg: &FilterConfig) -> Result<FilterDecision> {
    let allowed = cfg
        .allowed_scripts_by_lang
        .get(&doc.lang)
        .ok_or_else(|| Error::UnknownLanguage(doc.lang.clone()))?;
    Ok(match script_histogram(&doc.text).dominant() {
        None => FilterDecision::Drop(DropReason::NoScriptfulText),
        Some(d) if allowed.contains(&d.tag) => FilterDecision::Keep,
        Some(_) => FilterDecision::Drop(DropReason::ScriptMismatch),
    })
}

/// Normalize and, when configured, transliterate the text of a kept document.
pub fn transform_text(text: &str, cfg: &FilterConfig) -> (String, Option<TransliterationReport>) {
    let norm = normalize(text, &cfg.normalization);
    if cfg.transliterate {
        let (t, rep) = transliterate_auto_with(&norm, cfg.translit);
        (t, Some(rep))
    } else {
        (norm, None)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct LanguageCounts {
    pub ingested: u64,
    pub dropped_script_mismatch: u64,
    /// Documents without any scriptful codepoint.
    pub dropped_empty: u64,
    pub emitted: u64,
}

impl LanguageCounts {
    pub fn reconciles(&self) -> bool {
        self.ingested == self.dropped_script_mismatch + self.dropped_empty + self.emitted
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MalformedExample {
    pub index: usize,
    pub message: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PipelineReport {
    pub normalizer: &'static str,
    pub config: FilterConfig,
    /// Non-blank input lines.
    pub records: u64,
    pub per_language: BTreeMap<String, LanguageCounts>,
    pub bytes_in: u64,
    pub bytes_out: u64,
    pub malformed: u64,
    pub malformed_examples: Vec<MalformedExample>,
    pub transliteration: TransliterationReport,
}

impl PipelineReport {
    fn new(cfg: &FilterConfig) -> Self {
        PipelineReport {
            normalizer: NORMALIZER_NOTE,
            config: cfg.clone(),
            records: 0,
            per_language: BTreeMap::new(),
            bytes_in: 0,
            bytes_out: 0,
            malformed: 0,
            malformed_examples: Vec::new(),
            transliteration: TransliterationReport::default(),
        }
    }

    pub fn malformed_fraction(&self) -> f64 {
        if self.records == 0 {
            0.0
        } else {
            self.malformed as f64 / self.records as f64
        }
    }

    pub fn totals(&self) -> LanguageCounts {
        self.per_language.values().fold(LanguageCounts::default(), |a, c| LanguageCounts {
            ingested: a.ingested + c.ingested,
            dropped_script_mismatch: a.dropped_script_mismatch + c.dropped_script_mismatch,
            dropped_empty: a.dropped_empty + c.dropped_empty,
            emitted: a.emitted + c.emitted,
        })
    }

    fn record_malformed(&mut self, index: usize, message: String) {
        self.malformed += 1;
        if self.malformed_examples.len() < MAX_MALFORMED_EXAMPLES {
            self.malformed_examples.push(MalformedExample { index, message });
        }
    }
}

enum Outcome {
    Malformed(String),
    Filtered {
        doc: CorpusDocument,
        decision: FilterDecision,
        output: Option<(String, Option<TransliterationReport>)>,
    },
}

fn process_line(line: &str, cfg: &FilterConfig) -> Outcome {
    let doc: CorpusDocument = match serde_json::from_str(line) {
        Ok(d) => d,
        Err(e) => return Outcome::Malformed(e.to_string()),
    };
    if doc.id.is_empty() {
        return Outcome::Malformed("empty id".into());
    }
    match filter_document(&doc, cfg) {
        Err(e) => Outcome::Malformed(e.to_string()),
        Ok(decision) => {
            let output = (decision == FilterDecision::Keep).then(|| transform_text(&doc.text, cfg));
            Outcome::Filtered { doc, decision, output }
        }
    }
}

/// Streaming corpus processor. Feed batches of JSONL lines in input order;
/// each batch is processed in parallel and emitted in order.
pub struct CorpusProcessor {
    cfg: FilterConfig,
    report: PipelineReport,
    seen_ids: HashSet<String>,
    next_index: usize,
}

impl CorpusProcessor {
    pub fn new(cfg: FilterConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(CorpusProcessor {
            report: PipelineReport::new(&cfg),
            cfg,
            seen_ids: HashSet::new(),
            next_index: 0,
        })
    }

    /// Process one batch; returns the emitted JSONL records (without newlines).
    pub fn push_batch<S: AsRef<str> + Sync>(&mut self, lines: &[S]) -> Vec<String> {
        let cfg = &self.cfg;
        let outcomes: Vec<Option<Outcome>> = lines
            .par_iter()
            .map(|l| {
                let l = l.as_ref();
                (!l.trim().is_empty()).then(|| process_line(l, cfg))
            })
            .collect();

        let mut emitted = Vec::new();
        for outcome in outcomes {
            let index = self.next_index;
            self.next_index += 1;
            let Some(outcome) = outcome else { continue };
            self.report.records += 1;
            match outcome {
                Outcome::Malformed(msg) => self.report.record_malformed(index, msg),
                Outcome::Filtered { doc, decision, output } => {
                    if !self.seen_ids.insert(doc.id.clone()) {
                        self.report.record_malformed(index, format!("duplicate id `{}`", doc.id));
                        continue;
                    }
                    let counts = self.report.per_language.entry(doc.lang.clone()).or_default();
                    counts.ingested += 1;
                    self.report.bytes_in += doc.text.len() as u64;
                    match decision {
                        FilterDecision::Drop(DropReason::ScriptMismatch) => {
                            counts.dropped_script_mismatch += 1
                        }
                        FilterDecision::Drop(DropReason::NoScriptfulText) => counts.dropped_empty += 1,
                        FilterDecision::Keep => {
                            counts.emitted += 1;
                            let (text, rep) = output.expect("kept documents carry output");
                            if let Some(rep) = rep {
                                self.report.transliteration.merge(&rep);
                            }
                            self.report.bytes_out += text.len() as u64;
                            let rec = CorpusDocument { id: doc.id, lang: doc.lang, text };
                            emitted.push(serde_json::to_string(&rec).expect("document serializes"));
                        }
                    }
                }
            }
        }
        emitted
    }

    pub fn report(&self) -> &PipelineReport {
        &self.report
    }

    pub fn finish(self) -> PipelineReport {
        self.report
    }
}

/// Run the pipeline from a JSONL reader to a JSONL writer.
pub fn process_corpus<R: BufRead, W: Write>(
    input: R,
    mut output: W,
    cfg: &FilterConfig,
) -> Result<PipelineReport> {
    let mut proc = CorpusProcessor::new(cfg.clone())?;
    let mut batch = Vec::with_capacity(BATCH_SIZE);
    let flush = |proc: &mut CorpusProcessor, batch: &mut Vec<String>, out: &mut W| -> Result<()> {
        for rec in proc.push_batch(batch) {
            out.write_all(rec.as_bytes())?;
            out.write_all(b"\n")?;
        }
        batch.clear();
        Ok(())
    };
    for line in input.lines() {
        batch.push(line?);
        if batch.len() == BATCH_SIZE {
            flush(&mut proc, &mut batch, &mut output)?;
        }
    }
    flush(&mut proc, &mut batch, &mut output)?;
    output.flush()?;
    Ok(proc.finish())
}
