//! Linear centered kernel alignment (CKA) between per-layer sentence
//! representations of parallel sentences, with per-language averaging.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    let mut s = CompensatedSum::default();
    for (x, y) in a.iter().zip(b) {
        s.add(x * y);
    }
    s.value()
}

/// Dense row-major matrix of finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} values for a {rows}×{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("matrix"));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!("row {i} has {} columns, expected {cols}", r.len())));
        }
        Matrix::new(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    fn columns(&self) -> Vec<Vec<f64>> {
        (0..self.cols).map(|c| (0..self.rows).map(|r| self.get(r, c)).collect()).collect()
    }

    fn is_zero(&self) -> bool {
        self.data.iter().all(|v| *v == 0.0)
    }
}

/// Subtract each column's mean.
pub fn center_columns(m: &Matrix) -> Result<Matrix> {
    if m.rows < 2 {
        return Err(Error::ShapeMismatch(format!("centering needs at least 2 rows, got {}", m.rows)));
    }
    let means: Vec<f64> = (0..m.cols)
        .map(|c| {
            let mut s = CompensatedSum::default();
            (0..m.rows).for_each(|r| s.add(m.get(r, c)));
            s.value() / m.rows as f64
        })
        .collect();
    let data = m
        .data
        .chunks(m.cols.max(1))
        .flat_map(|row| row.iter().zip(&means).map(|(v, mu)| v - mu))
        .collect();
    Ok(Matrix { rows: m.rows, cols: m.cols, data: if m.cols == 0 { Vec::new() } else { data } })
}

/// ‖AᵀB‖_F² for matrices with equal row counts, through whichever of the
/// feature-space (column dot products) or sample-space (Gram matrix) forms is
/// cheaper.
fn cross_frob_sq(a: &Matrix, b: &Matrix) -> f64 {
    let n = a.rows;
    let mut s = CompensatedSum::default();
    if a.cols * b.cols <= n * (a.cols + b.cols) / 2 {
        let (ca, cb) = (a.columns(), b.columns());
        for x in &ca {
            for y in &cb {
                let d = dot(x, y);
                s.add(d * d);
            }
        }
    } else {
        // Σ_ij (a_i·a_j)(b_i·b_j) over row pairs
        for i in 0..n {
            s.add(dot(a.row(i), a.row(i)) * dot(b.row(i), b.row(i)));
            for j in 0..i {
                s.add(2.0 * dot(a.row(i), a.row(j)) * dot(b.row(i), b.row(j)));
            }
        }
    }
    s.value()
}

/// Linear CKA = ‖YᵀX‖_F² / (‖XᵀX‖_F ‖YᵀY‖_F) after centering both.
pub fn linear_cka(x: &Matrix, y: &Matrix) -> Result<f64> {
    if x.rows != y.rows {
        return Err(Error::ShapeMismatch(format!("row counts differ: {} vs {}", x.rows, y.rows)));
    }
    let xc = center_columns(x)?;
    let yc = center_columns(y)?;
    if xc.is_zero() || yc.is_zero() {
        return Err(Error::Degenerate("matrix is constant after centering"));
    }
    let num = cross_frob_sq(&yc, &xc);
    let den = cross_frob_sq(&xc, &xc).sqrt() * cross_frob_sq(&yc, &yc).sqrt();
    if !den.is_finite() || den <= 0.0 {
        return Err(Error::Degenerate("zero normalizer"));
    }
    Ok(num / den)
}

/// Sentence representations of one language at one layer.
#[derive(Debug, Clone, PartialEq)]
pub struct ActivationMatrix {
    pub language: String,
    pub layer: usize,
    pub data: Matrix,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CkaScore {
    pub language_a: String,
    pub language_b: String,
    pub layer: usize,
    pub score: f64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CkaGap {
    pub language_a: String,
    pub language_b: String,
    pub layer: usize,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LanguageAverage {
    pub language: String,
    pub layer: usize,
    pub mean: f64,
    pub partners: usize,
}

/// Pairwise scores keyed by (language_a < language_b, layer).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CkaTable {
    pub languages: Vec<String>,
    pub layers: Vec<usize>,
    pub scores: Vec<CkaScore>,
    pub gaps: Vec<CkaGap>,
    pub per_language_average: Vec<LanguageAverage>,
}

impl CkaTable {
    /// Score for an unordered language pair at a layer.
    pub fn score(&self, a: &str, b: &str, layer: usize) -> Option<f64> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.scores
            .iter()
            .find(|s| s.language_a == a && s.language_b == b && s.layer == layer)
            .map(|s| s.score)
    }

    /// Per-language, per-layer averages as TSV (with header).
    pub fn averages_tsv(&self) -> String {
        let mut s = String::from("language\tlayer\tmean_cka\tpartners\n");
        for a in &self.per_language_average {
            s += &format!("{}\t{}\t{:.10}\t{}\n", a.language, a.layer, a.mean, a.partners);
        }
        s
    }
}

/// CKA for every unordered language pair and every layer present for both.
/// Pairs missing a layer (or degenerate at it) are listed in `gaps`.
pub fn pairwise_layer_cka(activations: &[ActivationMatrix]) -> Result<CkaTable> {
    let mut index: BTreeMap<(&str, usize), &Matrix> = BTreeMap::new();
    let mut rows = None;
    for a in activations {
        if index.insert((a.language.as_str(), a.layer), &a.data).is_some() {
            return Err(Error::InvalidConfig(format!(
                "duplicate activations for language `{}` layer {}",
                a.language, a.layer
            )));
        }
        match rows {
            None => rows = Some(a.data.rows()),
            Some(r) if r != a.data.rows() => {
                return Err(Error::ShapeMismatch(format!(
                    "language `{}` layer {} has {} rows, expected {r}",
                    a.language,
                    a.layer,
                    a.data.rows()
                )))
            }
            _ => {}
        }
    }
    let languages: Vec<String> = activations
        .iter()
        .map(|a| a.language.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let layers: Vec<usize> = activations.iter().map(|a| a.layer).collect::<BTreeSet<_>>().into_iter().collect();

    let mut jobs = Vec::new();
    for (i, a) in languages.iter().enumerate() {
        for b in &languages[i + 1..] {
            for &layer in &layers {
                jobs.push((a.as_str(), b.as_str(), layer));
            }
        }
    }
    let outcomes: Vec<std::result::Result<CkaScore, CkaGap>> = jobs
        .par_iter()
        .map(|&(a, b, layer)| {
            let gap = |reason: String| CkaGap {
                language_a: a.to_string(),
                language_b: b.to_string(),
                layer,
                reason,
            };
            match (index.get(&(a, layer)), index.get(&(b, layer))) {
                (Some(x), Some(y)) => match linear_cka(x, y) {
                    Ok(score) => Ok(CkaScore { language_a: a.into(), language_b: b.into(), layer, score }),
                    Err(e) => Err(gap(e.to_string())),
                },
                (None, Some(_)) => Err(gap(format!("layer {layer} missing for `{a}`"))),
                (Some(_), None) => Err(gap(format!("layer {layer} missing for `{b}`"))),
                (None, None) => Err(gap(format!("layer {layer} missing for `{a}` and `{b}`"))),
            }
        })
        .collect();
    let mut scores = Vec::new();
    let mut gaps = Vec::new();
    for o in outcomes {
        match o {
            Ok(s) => scores.push(s),
            Err(g) => gaps.push(g),
        }
    }
    let mut table = CkaTable { languages, layers, scores, gaps, per_language_average: Vec::new() };
    table.per_language_average = average_per_language(&table);
    Ok(table)
}

/// Mean score of each language against its available partners, per layer.
pub fn average_per_language(table: &CkaTable) -> Vec<LanguageAverage> {
    let mut acc: BTreeMap<(&str, usize), (CompensatedSum, usize)> = BTreeMap::new();
    for s in &table.scores {
        for lang in [&s.language_a, &s.language_b] {
            let e = acc.entry((lang.as_str(), s.layer)).or_default();
            e.0.add(s.score);
            e.1 += 1;
        }
    }
    acc.into_iter()
        .map(|((language, layer), (sum, partners))| LanguageAverage {
            language: language.to_string(),
            layer,
            mean: sum.value() / partners as f64,
            partners,
        })
        .collect()
}

/// How token-level hidden states become one sentence vector.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pooling {
    #[default]
    Mean,
    FirstToken,
}

impl std::str::FromStr for Pooling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mean" => Ok(Pooling::Mean),
            "first-token" | "first_token" | "first" => Ok(Pooling::FirstToken),
            _ => Err(Error::InvalidConfig(format!("unknown pooling `{s}`"))),
        }
    }
}

fn default_file_pattern() -> String {
    "{language}/layer_{layer}.csv".into()
}

/// Description of a directory of activation files.
///
/// Each `(language, layer)` file is a headerless CSV of reals. With
/// `token_level = false` it has one row per sentence in `sentence_ids`
/// order. With `token_level = true` every row is one (non-padding) token:
/// the first field is the sentence id, the rest the hidden state; rows are
/// pooled per sentence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActivationManifest {
    pub languages: Vec<String>,
    pub layers: Vec<usize>,
    pub n_sentences: usize,
    pub sentence_ids: Vec<String>,
    #[serde(default = "default_file_pattern")]
    pub file_pattern: String,
    #[serde(default)]
    pub token_level: bool,
}

impl ActivationManifest {
    pub fn validate(&self) -> Result<()> {
        if self.sentence_ids.len() != self.n_sentences {
            return Err(Error::InvalidConfig(format!(
                "manifest lists {} sentence ids but n_sentences = {}",
                self.sentence_ids.len(),
                self.n_sentences
            )));
        }
        let unique: BTreeSet<&String> = self.sentence_ids.iter().collect();
        if unique.len() != self.sentence_ids.len() {
            return Err(Error::InvalidConfig("duplicate sentence ids in manifest".into()));
        }
        if self.n_sentences < 2 {
            return Err(Error::InvalidConfig("CKA needs at least 2 sentences".into()));
        }
        Ok(())
    }

    pub fn file_for(&self, dir: &Path, language: &str, layer: usize) -> PathBuf {
        dir.join(
            self.file_pattern
                .replace("{language}", language)
                .replace("{layer}", &layer.to_string()),
        )
    }
}

fn parse_reals(fields: &[&str], what: &str) -> Result<Vec<f64>> {
    fields
        .iter()
        .map(|f| {
            f.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("{what}: `{f}` is not a number")))
        })
        .collect()
}

/// Parse a sentence-level CSV: one row per sentence.
pub fn parse_sentence_csv(text: &str) -> Result<Matrix> {
    let rows: Vec<Vec<f64>> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_reals(&l.split(',').collect::<Vec<_>>(), &format!("line {}", i + 1)))
        .collect::<Result<_>>()?;
    Matrix::from_rows(&rows)
}

/// Pool token rows `(sentence id, hidden state)` into one row per sentence,
/// in `sentence_ids` order.
pub fn pool_tokens(tokens: &[(String, Vec<f64>)], sentence_ids: &[String], pooling: Pooling) -> Result<Matrix> {
    let pos: HashMap<&str, usize> = sentence_ids.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let dim = tokens.first().map_or(0, |t| t.1.len());
    let mut sums = vec![vec![CompensatedSum::default(); dim]; sentence_ids.len()];
    let mut counts = vec![0usize; sentence_ids.len()];
    for (id, v) in tokens {
        let &i = pos
            .get(id.as_str())
            .ok_or_else(|| Error::Parse(format!("token row for unknown sentence id `{id}`")))?;
        if v.len() != dim {
            return Err(Error::ShapeMismatch(format!("token row of sentence `{id}` has {} values, expected {dim}", v.len())));
        }
        if pooling == Pooling::FirstToken && counts[i] > 0 {
            continue;
        }
        counts[i] += 1;
        sums[i].iter_mut().zip(v).for_each(|(s, x)| s.add(*x));
    }
    if let Some(i) = counts.iter().position(|&c| c == 0) {
        return Err(Error::Parse(format!("no token rows for sentence `{}`", sentence_ids[i])));
    }
    let rows: Vec<Vec<f64>> = sums
        .iter()
        .zip(&counts)
        .map(|(s, &c)| s.iter().map(|x| x.value() / c as f64).collect())
        .collect();
    Matrix::from_rows(&rows)
}

/// Parse a token-level CSV (`sentence_id,v1,v2,...`) and pool it.
pub fn parse_token_csv(text: &str, sentence_ids: &[String], pooling: Pooling) -> Result<Matrix> {
    let tokens: Vec<(String, Vec<f64>)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let fields: Vec<&str> = l.split(',').collect();
            let values = parse_reals(&fields[1..], &format!("line {}", i + 1))?;
            Ok((fields[0].trim().to_string(), values))
        })
        .collect::<Result<_>>()?;
    pool_tokens(&tokens, sentence_ids, pooling)
}

/// Load every `(language, layer)` file named by the manifest. Missing files
/// are skipped; the CKA table records the resulting gaps.
pub fn load_activations(manifest_path: &Path, pooling: Pooling) -> Result<(ActivationManifest, Vec<ActivationMatrix>)> {
    let manifest: ActivationManifest = serde_json::from_str(&fs::read_to_string(manifest_path)?)?;
    manifest.validate()?;
    let dir = manifest_path.parent().unwrap_or(Path::new("."));
    let mut out = Vec::new();
    for lang in &manifest.languages {
        for &layer in &manifest.layers {
            let path = manifest.file_for(dir, lang, layer);
            if !path.exists() {
                continue;
            }
            let text = fs::read_to_string(&path)?;
            let ctx = |e: Error| Error::Parse(format!("{}: {e}", path.display()));
            let data = if manifest.token_level {
                parse_token_csv(&text, &manifest.sentence_ids, pooling).map_err(ctx)?
            } else {
                parse_sentence_csv(&text).map_err(ctx)?
            };
            if data.rows() != manifest.n_sentences {
                return Err(Error::ShapeMismatch(format!(
                    "{}: {} rows, manifest has {} sentences",
                    path.display(),
                    data.rows(),
                    manifest.n_sentences
                )));
            }
            out.push(ActivationMatrix { language: lang.clone(), layer, data });
        }
    }
    Ok((manifest, out))
}
