//! Mann-Whitney U test with exact and normal-approximation p-values, plus the
//! effect sizes δ (difference of means), ρ (probability of superiority) and
//! r (|z|/√N) with its small/medium/large classification.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Largest pooled sample size `p_method = auto` sends to the exact test.
pub const AUTO_EXACT_MAX_N: usize = 40;

/// Largest pooled sample size the exact test accepts (counts stay within u128).
pub const EXACT_MAX_N: usize = 100;

pub const DEFAULT_GROUP1_LABEL: &str = "uni-script";
pub const DEFAULT_GROUP2_LABEL: &str = "multi-script";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Alternative {
    #[default]
    TwoSided,
    /// Group 1 tends to be larger.
    Greater,
    /// Group 1 tends to be smaller.
    Less,
}

impl FromStr for Alternative {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "two-sided" | "two_sided" => Ok(Alternative::TwoSided),
            "greater" => Ok(Alternative::Greater),
            "less" => Ok(Alternative::Less),
            _ => Err(Error::InvalidConfig(format!("unknown alternative `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PMethod {
    Exact,
    #[serde(alias = "normal")]
    NormalApprox,
    #[default]
    Auto,
}

impl FromStr for PMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(PMethod::Exact),
            "normal" | "normal_approx" | "normal-approx" => Ok(PMethod::NormalApprox),
            "auto" => Ok(PMethod::Auto),
            _ => Err(Error::InvalidConfig(format!("unknown p-value method `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MwuConfig {
    pub alpha: f64,
    pub alternative: Alternative,
    pub p_method: PMethod,
    /// Shift |U1 − n1n2/2| by 0.5 toward the mean in the normal approximation.
    pub continuity_correction: bool,
}

impl Default for MwuConfig {
    fn default() -> Self {
        MwuConfig {
            alpha: 0.05,
            alternative: Alternative::TwoSided,
            p_method: PMethod::Auto,
            continuity_correction: true,
        }
    }
}

impl MwuConfig {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..1.0).contains(&self.alpha) {
            return Err(Error::InvalidConfig(format!("alpha {} outside [0, 1)", self.alpha)));
        }
        Ok(())
    }
}

/// Labelled metric samples (e.g. scores over random seeds).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleGroup {
    pub label: String,
    pub values: Vec<f64>,
}

impl SampleGroup {
    pub fn new(label: impl Into<String>, values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput("sample group"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("sample group"));
        }
        Ok(SampleGroup { label: label.into(), values })
    }

    pub fn mean(&self) -> f64 {
        mean(&self.values)
    }
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Ascending ranks 1..N; tied values share the mean of their rank span.
pub fn rank_with_ties(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && values[order[j]] == values[order[i]] {
            j += 1;
        }
        // positions i..j hold ranks i+1..=j
        let mid = (i + 1 + j) as f64 / 2.0;
        for &k in &order[i..j] {
            ranks[k] = mid;
        }
        i = j;
    }
    ranks
}

/// Sizes of the groups of tied values in the pooled sample.
fn tie_sizes(pooled: &[f64]) -> Vec<usize> {
    let mut v = pooled.to_vec();
    v.sort_by(f64::total_cmp);
    let mut out = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let mut j = i + 1;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if j - i > 1 {
            out.push(j - i);
        }
        i = j;
    }
    out
}

fn pooled(g1: &[f64], g2: &[f64]) -> Vec<f64> {
    g1.iter().chain(g2.iter()).copied().collect()
}

/// U statistics from the pooled midranks: U1 = R1 − n1(n1+1)/2, U2 = n1n2 − U1.
pub fn mwu_u(g1: &[f64], g2: &[f64]) -> (f64, f64) {
    let n1 = g1.len() as f64;
    let n2 = g2.len() as f64;
    let ranks = rank_with_ties(&pooled(g1, g2));
    let r1: f64 = ranks[..g1.len()].iter().sum();
    let u1 = r1 - n1 * (n1 + 1.0) / 2.0;
    (u1, n1 * n2 - u1)
}

/// Exact p-value as a ratio of arrangement counts.
#[derive(Debug, Clone, Copy, Eq, Serialize)]
pub struct ExactP {
    pub numerator: u128,
    pub denominator: u128,
}

impl ExactP {
    pub fn value(&self) -> f64 {
        self.numerator as f64 / self.denominator as f64
    }
}

impl ExactP {
    /// Lowest-terms form.
    pub fn reduced(&self) -> (u128, u128) {
        let g = gcd(self.numerator, self.denominator);
        (self.numerator / g, self.denominator / g)
    }
}

impl PartialEq for ExactP {
    fn eq(&self, other: &Self) -> bool {
        self.reduced() == other.reduced()
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

impl fmt::Display for ExactP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Null distribution of U for sizes (n1, n2): `counts[u]` arrangements give U = u.
///
/// Uses f(m, n, u) = f(m−1, n, u−n) + f(m, n−1, u): the largest pooled value
/// belongs either to group 1 (beating all n of group 2) or to group 2.
pub fn u_null_counts(n1: usize, n2: usize) -> Vec<u128> {
    // table[n] holds f(m, n, ·) for the current m
    let mut prev: Vec<Vec<u128>> = (0..=n2).map(|_| vec![1u128]).collect(); // m = 0
    for m in 1..=n1 {
        let mut cur: Vec<Vec<u128>> = Vec::with_capacity(n2 + 1);
        cur.push(vec![1u128]); // n = 0
        for n in 1..=n2 {
            let mut f = vec![0u128; m * n + 1];
            for (u, slot) in f.iter_mut().enumerate() {
                let a = if u >= n { prev[n].get(u - n).copied().unwrap_or(0) } else { 0 };
                let b = cur[n - 1].get(u).copied().unwrap_or(0);
                *slot = a + b;
            }
            cur.push(f);
        }
        prev = cur;
    }
    prev.swap_remove(n2)
}

/// Exact p-value of U1 under the no-difference null. Requires tie-free data.
pub fn p_exact(g1: &[f64], g2: &[f64], alternative: Alternative) -> Result<ExactP> {
    if g1.is_empty() || g2.is_empty() {
        return Err(Error::EmptyInput("sample group"));
    }
    let all = pooled(g1, g2);
    if all.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("sample group"));
    }
    if all.len() > EXACT_MAX_N {
        return Err(Error::SampleTooLarge { n: all.len(), max: EXACT_MAX_N });
    }
    if !tie_sizes(&all).is_empty() {
        return Err(Error::TiesPresent);
    }
    let (u1, _) = mwu_u(g1, g2);
    let u1 = u1.round() as usize;
    let counts = u_null_counts(g1.len(), g2.len());
    let total: u128 = counts.iter().sum();
    let le: u128 = counts[..=u1].iter().sum();
    let ge: u128 = counts[u1..].iter().sum();
    let numerator = match alternative {
        Alternative::Greater => ge,
        Alternative::Less => le,
        Alternative::TwoSided => (2 * le.min(ge)).min(total),
    };
    Ok(ExactP { numerator, denominator: total })
}

fn std_normal() -> Normal {
    Normal::new(0.0, 1.0).expect("unit normal")
}

/// Normal approximation with tie-corrected variance; returns (z, p).
pub fn p_normal(
    g1: &[f64],
    g2: &[f64],
    alternative: Alternative,
    continuity_correction: bool,
) -> Result<(f64, f64)> {
    if g1.is_empty() || g2.is_empty() {
        return Err(Error::EmptyInput("sample group"));
    }
    let all = pooled(g1, g2);
    if all.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("sample group"));
    }
    let (n1, n2) = (g1.len() as f64, g2.len() as f64);
    let n = n1 + n2;
    let ties: f64 = tie_sizes(&all).iter().map(|&t| (t * t * t - t) as f64).sum();
    let var = n1 * n2 / 12.0 * ((n + 1.0) - ties / (n * (n - 1.0)));
    if var.is_nan() || var <= 0.0 {
        return Err(Error::Degenerate("all pooled values are identical"));
    }
    let sigma = var.sqrt();
    let (u1, _) = mwu_u(g1, g2);
    let d = u1 - n1 * n2 / 2.0;
    let cc = if continuity_correction { 0.5 } else { 0.0 };
    let phi = std_normal();
    let (z, p) = match alternative {
        Alternative::TwoSided => {
            let z = d.signum() * (d.abs() - cc).max(0.0) / sigma;
            (z, (2.0 * phi.cdf(-z.abs())).min(1.0))
        }
        Alternative::Greater => {
            let z = (d - cc) / sigma;
            (z, phi.cdf(-z))
        }
        Alternative::Less => {
            let z = (d + cc) / sigma;
            (z, phi.cdf(z))
        }
    };
    Ok((z, p))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EffectClass {
    Small,
    Medium,
    Large,
}

/// small: 0 ≤ r ≤ 0.3, medium: 0.3 < r ≤ 0.5, large: r > 0.5.
pub fn classify_r(r: f64) -> EffectClass {
    if r <= 0.3 {
        EffectClass::Small
    } else if r <= 0.5 {
        EffectClass::Medium
    } else {
        EffectClass::Large
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EffectSizes {
    pub delta: f64,
    pub rho: f64,
    pub r: f64,
    pub r_class: EffectClass,
}

/// δ = μ1 − μ2, ρ = U1/(n1n2), r = |z|/√N.
pub fn effect_sizes(g1: &[f64], g2: &[f64], z: f64) -> EffectSizes {
    let (u1, _) = mwu_u(g1, g2);
    let n = (g1.len() + g2.len()) as f64;
    let r = z.abs() / n.sqrt();
    EffectSizes {
        delta: mean(g1) - mean(g2),
        rho: u1 / (g1.len() * g2.len()) as f64,
        r,
        r_class: classify_r(r),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodUsed {
    Exact,
    NormalApprox,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MwuResult {
    pub group1: String,
    pub group2: String,
    pub n1: usize,
    pub n2: usize,
    #[serde(rename = "N")]
    pub n: usize,
    pub mean1: f64,
    pub mean2: f64,
    #[serde(rename = "U1")]
    pub u1: f64,
    #[serde(rename = "U2")]
    pub u2: f64,
    /// Normal-approximation z (with the configured continuity correction).
    pub z: f64,
    pub p_normal: f64,
    /// Exact p when the data are tie-free and small enough.
    pub p_exact: Option<f64>,
    pub p_exact_ratio: Option<String>,
    pub method: MethodUsed,
    pub p_value: f64,
    pub alpha: f64,
    pub alternative: Alternative,
    pub continuity_correction: bool,
    pub reject_h0: bool,
    pub delta: f64,
    pub rho: f64,
    pub r: f64,
    pub r_class: EffectClass,
}

/// Full test: U, p-value by the configured method, decision at α and effect sizes.
pub fn compare(g1: &SampleGroup, g2: &SampleGroup, cfg: &MwuConfig) -> Result<MwuResult> {
    cfg.validate()?;
    let (a, b) = (g1.values.as_slice(), g2.values.as_slice());
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyInput("sample group"));
    }
    let (u1, u2) = mwu_u(a, b);
    let (z, p_norm) = p_normal(a, b, cfg.alternative, cfg.continuity_correction)?;
    let n = a.len() + b.len();
    let tie_free = tie_sizes(&pooled(a, b)).is_empty();
    let exact = match cfg.p_method {
        PMethod::Exact => Some(p_exact(a, b, cfg.alternative)?),
        PMethod::Auto if tie_free && n <= AUTO_EXACT_MAX_N => Some(p_exact(a, b, cfg.alternative)?),
        _ if tie_free && n <= EXACT_MAX_N => p_exact(a, b, cfg.alternative).ok(),
        _ => None,
    };
    let (method, p_value) = match (cfg.p_method, exact) {
        (PMethod::Exact, Some(e)) => (MethodUsed::Exact, e.value()),
        (PMethod::Auto, Some(e)) if n <= AUTO_EXACT_MAX_N => (MethodUsed::Exact, e.value()),
        _ => (MethodUsed::NormalApprox, p_norm),
    };
    let eff = effect_sizes(a, b, z);
    Ok(MwuResult {
        group1: g1.label.clone(),
        group2: g2.label.clone(),
        n1: a.len(),
        n2: b.len(),
        n,
        mean1: mean(a),
        mean2: mean(b),
        u1,
        u2,
        z,
        p_normal: p_norm,
        p_exact: exact.map(|e| e.value()),
        p_exact_ratio: exact.map(|e| e.to_string()),
        method,
        p_value,
        alpha: cfg.alpha,
        alternative: cfg.alternative,
        continuity_correction: cfg.continuity_correction,
        reject_h0: p_value < cfg.alpha,
        delta: eff.delta,
        rho: eff.rho,
        r: eff.r,
        r_class: eff.r_class,
    })
}

/// Parse a group file: one number per line, or a TSV with a header row whose
/// `metric` column (else the last column) holds the values. Blank lines and
/// `#` comments are skipped.
pub fn parse_values(text: &str) -> Result<Vec<f64>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .peekable();
    let mut column: Option<usize> = None;
    if let Some((_, first)) = lines.peek() {
        let cells: Vec<&str> = first.split('\t').collect();
        if cells.iter().any(|c| c.parse::<f64>().is_err()) {
            column = Some(cells.iter().position(|c| *c == "metric").unwrap_or(cells.len() - 1));
            lines.next();
        }
    }
    let mut out = Vec::new();
    for (lineno, l) in lines {
        let cell = match column {
            Some(c) => l.split('\t').nth(c).ok_or_else(|| Error::Parse(format!("line {lineno}: missing column {}", c + 1)))?,
            None => l,
        };
        let v: f64 = cell
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("line {lineno}: `{cell}` is not a number")))?;
        if !v.is_finite() {
            return Err(Error::NonFinite("group file"));
        }
        out.push(v);
    }
    if out.is_empty() {
        return Err(Error::EmptyInput("group file"));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BatchConfig {
    pub group1_model: String,
    pub group2_model: String,
    pub mwu: MwuConfig,
}

impl Default for BatchConfig {
    fn default() -> Self {
        BatchConfig {
            group1_model: DEFAULT_GROUP1_LABEL.into(),
            group2_model: DEFAULT_GROUP2_LABEL.into(),
            mwu: MwuConfig::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchRow {
    pub task: String,
    pub language: String,
    pub result: MwuResult,
}

/// Run one test per (task, language) on a TSV with header columns
/// `task language seed model metric` (any order). Rows come back sorted by key.
pub fn run_batch(tsv: &str, cfg: &BatchConfig) -> Result<Vec<BatchRow>> {
    let mut lines = tsv
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
    let (_, header) = lines.next().ok_or(Error::EmptyInput("batch table"))?;
    let cols: Vec<&str> = header.split('\t').map(str::trim).collect();
    let col = |name: &str| {
        cols.iter()
            .position(|c| *c == name)
            .ok_or_else(|| Error::Parse(format!("batch table header lacks `{name}`")))
    };
    let (ct, cl, cs, cm, cv) = (col("task")?, col("language")?, col("seed")?, col("model")?, col("metric")?);

    type Key = (String, String);
    let mut groups: BTreeMap<Key, (Vec<f64>, Vec<f64>)> = BTreeMap::new();
    let mut seen: HashSet<(String, String, String, String)> = HashSet::new();
    for (i, line) in lines {
        let cells: Vec<&str> = line.split('\t').map(str::trim).collect();
        let get = |c: usize| {
            cells.get(c).copied().ok_or_else(|| Error::Parse(format!("line {}: too few columns", i + 1)))
        };
        let (task, lang, seed, model) = (get(ct)?, get(cl)?, get(cs)?, get(cm)?);
        let value: f64 = get(cv)?
            .parse()
            .map_err(|_| Error::Parse(format!("line {}: metric is not a number", i + 1)))?;
        if !value.is_finite() {
            return Err(Error::NonFinite("batch table"));
        }
        if !seen.insert((task.into(), lang.into(), model.into(), seed.into())) {
            return Err(Error::Parse(format!(
                "line {}: duplicate row for task `{task}`, language `{lang}`, model `{model}`, seed `{seed}`",
                i + 1
            )));
        }
        let entry = groups.entry((task.into(), lang.into())).or_default();
        if model == cfg.group1_model {
            entry.0.push(value);
        } else if model == cfg.group2_model {
            entry.1.push(value);
        }
    }
    let mut rows = Vec::with_capacity(groups.len());
    for ((task, language), (v1, v2)) in groups {
        if v1.is_empty() || v2.is_empty() {
            return Err(Error::Parse(format!(
                "task `{task}`, language `{language}`: need rows for both `{}` and `{}`",
                cfg.group1_model, cfg.group2_model
            )));
        }
        let g1 = SampleGroup::new(cfg.group1_model.clone(), v1)?;
        let g2 = SampleGroup::new(cfg.group2_model.clone(), v2)?;
        let result = compare(&g1, &g2, &cfg.mwu)?;
        rows.push(BatchRow { task, language, result });
    }
    Ok(rows)
}

pub const BATCH_TSV_HEADER: &str =
    "task\tlanguage\tn1\tn2\tmean1\tmean2\tdelta\tU1\tz\tp_value\tmethod\treject_h0\trho\tr\tr_class";

/// One line of the per-(task, language) statistics table.
pub fn batch_row_tsv(row: &BatchRow) -> String {
    let r = &row.result;
    let method = match r.method {
        MethodUsed::Exact => "exact",
        MethodUsed::NormalApprox => "normal_approx",
    };
    let class = match r.r_class {
        EffectClass::Small => "small",
        EffectClass::Medium => "medium",
        EffectClass::Large => "large",
    };
    format!(
        "{}\t{}\t{}\t{}\t{:.4}\t{:.4}\t{:.4}\t{}\t{:.6}\t{:.6e}\t{}\t{}\t{:.4}\t{:.4}\t{}",
        row.task, row.language, r.n1, r.n2, r.mean1, r.mean2, r.delta, r.u1, r.z, r.p_value, method,
        r.reject_h0, r.rho, r.r, class
    )
}
