use thiserror::Error;

use crate::script::ScriptTag;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown script tag `{0}`")]
    UnknownScript(String),
    #[error("no transliteration scheme for script {0}")]
    UnsupportedScript(ScriptTag),
    #[error("language `{0}` is not configured")]
    UnknownLanguage(String),
    #[error("record {index}: {message}")]
    MalformedRecord { index: usize, message: String },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("vocabulary size {requested} is smaller than the {codepoints} distinct codepoints in the corpus")]
    VocabTooSmall { requested: usize, codepoints: usize },
    #[error("corpus contains no words")]
    EmptyCorpus,
    #[error("invalid probability {0}: must lie in (0, 1]")]
    InvalidProbability(f64),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("exact p-value is undefined with tied values; use the normal approximation")]
    TiesPresent,
    #[error("exact p-value supports at most {max} pooled samples, got {n}")]
    SampleTooLarge { n: usize, max: usize },
    #[error("degenerate data: {0}")]
    Degenerate(&'static str),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
