//! Toolkit for studying script effects in Indic language models: script
//! detection, ISO 15919 transliteration, corpus filtering, subword tokenizer
//! metrics, Mann-Whitney U tests with effect sizes, and linear CKA.

pub mod cka;
pub mod corpus;
pub mod error;
pub mod script;
pub mod stats;
pub mod tokenizer;
pub mod translit;

pub use error::{Error, Result};
pub use script::{
    classify_codepoint, dominant_script, script_histogram, DetectReport, Dominance,
    ScriptHistogram, ScriptTag, UNICODE_VERSION,
};
pub use translit::{
    load_scheme, transliterate, transliterate_auto, transliterate_auto_with, transliterate_with,
    Role, TranslitOptions, TransliterationReport, TransliterationScheme,
};
pub use corpus::{
    filter_document, normalize, process_corpus, CorpusDocument, CorpusProcessor, DropReason,
    FilterConfig, FilterDecision, LanguageCounts, NormalizeOptions, PipelineReport,
};
pub use tokenizer::{
    cloze_word_score, corpus_metrics, fertility, required_mask_count, tokenize_word, train_bpe,
    unbroken_ratio, SubwordVocab, TokenizedWord, TokenizerMetrics,
};
pub use stats::{
    compare, effect_sizes, mwu_u, p_exact, p_normal, rank_with_ties, Alternative, EffectClass,
    ExactP, MwuConfig, MwuResult, PMethod, SampleGroup,
};
pub use cka::{
    average_per_language, center_columns, linear_cka, pairwise_layer_cka, ActivationManifest,
    ActivationMatrix, CkaTable, Matrix, Pooling,
};
