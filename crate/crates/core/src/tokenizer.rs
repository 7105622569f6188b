//! Byte-pair-style subword vocabulary with word-internal continuation markers,
//! greedy longest-match tokenization, and tokenizer-quality metrics
//! (fertility, unbroken-word ratio) plus cloze-scoring arithmetic.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::corpus::{normalize, NormalizeOptions};
use crate::error::{Error, Result};

pub const DEFAULT_CONTINUATION_MARKER: &str = "##";

/// Piece emitted for a codepoint the vocabulary cannot encode. It is not part
/// of the vocabulary and has no id.
pub const UNK_PIECE: &str = "[UNK]";

/// Subword vocabulary. Pieces that continue a word carry the continuation
/// marker as a prefix; ids are dense in `0..len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubwordVocab {
    continuation_marker: String,
    pieces: Vec<String>,
    ids: HashMap<String, u32>,
    /// Longest piece in codepoints, marker excluded.
    max_piece_chars: usize,
}

#[derive(Serialize, Deserialize)]
struct VocabFile {
    continuation_marker: String,
    pieces: Vec<String>,
}

impl SubwordVocab {
    pub fn from_pieces(continuation_marker: &str, pieces: Vec<String>) -> Result<Self> {
        if continuation_marker.is_empty() {
            return Err(Error::InvalidConfig("continuation marker must be non-empty".into()));
        }
        let mut vocab = SubwordVocab {
            continuation_marker: continuation_marker.to_string(),
            pieces: Vec::with_capacity(pieces.len()),
            ids: HashMap::with_capacity(pieces.len()),
            max_piece_chars: 0,
        };
        for p in pieces {
            if !vocab.insert(p.clone()) {
                return Err(Error::InvalidConfig(format!("duplicate piece `{p}`")));
            }
        }
        Ok(vocab)
    }

    /// Add a piece at the next id; returns false if it was already present.
    pub fn insert(&mut self, piece: String) -> bool {
        if piece.is_empty() || piece == self.continuation_marker || self.ids.contains_key(&piece) {
            return false;
        }
        let chars = piece.strip_prefix(self.continuation_marker.as_str()).unwrap_or(&piece).chars().count();
        self.max_piece_chars = self.max_piece_chars.max(chars);
        self.ids.insert(piece.clone(), self.pieces.len() as u32);
        self.pieces.push(piece);
        true
    }

    pub fn continuation_marker(&self) -> &str {
        &self.continuation_marker
    }

    pub fn pieces(&self) -> &[String] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn id(&self, piece: &str) -> Option<u32> {
        self.ids.get(piece).copied()
    }

    pub fn piece(&self, id: u32) -> Option<&str> {
        self.pieces.get(id as usize).map(String::as_str)
    }

    pub fn contains(&self, piece: &str) -> bool {
        self.ids.contains_key(piece)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&VocabFile {
            continuation_marker: self.continuation_marker.clone(),
            pieces: self.pieces.clone(),
        })
        .expect("vocab serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: VocabFile = serde_json::from_str(s)?;
        Self::from_pieces(&f.continuation_marker, f.pieces)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BpeConfig {
    pub vocab_size: usize,
    pub continuation_marker: String,
    pub normalization: NormalizeOptions,
}

impl BpeConfig {
    pub fn new(vocab_size: usize) -> Self {
        BpeConfig {
            vocab_size,
            continuation_marker: DEFAULT_CONTINUATION_MARKER.to_string(),
            normalization: NormalizeOptions::default(),
        }
    }
}

/// Whitespace-delimited word frequencies of a corpus.
#[derive(Debug, Clone, Default)]
pub struct WordCounts {
    counts: HashMap<String, u64>,
    normalization: NormalizeOptions,
}

impl WordCounts {
    pub fn new(normalization: NormalizeOptions) -> Self {
        WordCounts { counts: HashMap::new(), normalization }
    }

    pub fn add_line(&mut self, line: &str) {
        for w in normalize(line, &self.normalization).split_whitespace() {
            *self.counts.entry(w.to_string()).or_default() += 1;
        }
    }

    pub fn distinct_words(&self) -> usize {
        self.counts.len()
    }

    pub fn distinct_codepoints(&self) -> usize {
        self.counts.keys().flat_map(|w| w.chars()).collect::<HashSet<_>>().len()
    }
}

/// Train a vocabulary of at most `vocab_size` pieces on whitespace-delimited words.
pub fn train_bpe<I, S>(lines: I, vocab_size: usize) -> Result<SubwordVocab>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let cfg = BpeConfig::new(vocab_size);
    let mut counts = WordCounts::new(cfg.normalization);
    lines.into_iter().for_each(|l| counts.add_line(l.as_ref()));
    train_bpe_counts(&counts, &cfg)
}

type PairKey = (Reverse<u64>, String, String);

struct Trainer<'a> {
    marker: &'a str,
    pieces: Vec<String>,
    ids: HashMap<String, u32>,
    words: Vec<(Vec<u32>, u64)>,
    pair_counts: HashMap<(u32, u32), u64>,
    pair_words: HashMap<(u32, u32), HashSet<usize>>,
    queue: BTreeSet<PairKey>,
}

impl Trainer<'_> {
    fn key(&self, pair: (u32, u32), count: u64) -> PairKey {
        (
            Reverse(count),
            self.pieces[pair.0 as usize].clone(),
            self.pieces[pair.1 as usize].clone(),
        )
    }

    fn adjust(&mut self, pair: (u32, u32), delta: i64, word: usize) {
        let old = self.pair_counts.get(&pair).copied().unwrap_or(0);
        let new = (old as i64 + delta) as u64;
        if old > 0 {
            let k = self.key(pair, old);
            self.queue.remove(&k);
        }
        if new > 0 {
            self.pair_counts.insert(pair, new);
            let k = self.key(pair, new);
            self.queue.insert(k);
            if delta > 0 {
                self.pair_words.entry(pair).or_default().insert(word);
            }
        } else {
            self.pair_counts.remove(&pair);
            self.pair_words.remove(&pair);
        }
    }

    fn add_word_pairs(&mut self, w: usize, sign: i64) {
        let (syms, freq) = (self.words[w].0.clone(), self.words[w].1 as i64);
        for p in syms.windows(2) {
            self.adjust((p[0], p[1]), sign * freq, w);
        }
    }

    fn merged_piece(&self, l: u32, r: u32) -> String {
        let right = &self.pieces[r as usize];
        format!("{}{}", self.pieces[l as usize], &right[self.marker.len()..])
    }
}

/// Train from precomputed word counts.
///
/// The initial alphabet holds every codepoint in its positional form (bare at
/// word start, marker-prefixed inside a word). The most frequent adjacent
/// pair, weighted by word frequency, is merged until the vocabulary reaches
/// `vocab_size` or no pair occurs at least twice; ties go to the
/// lexicographically smallest `(left, right)` pair.
pub fn train_bpe_counts(counts: &WordCounts, cfg: &BpeConfig) -> Result<SubwordVocab> {
    if cfg.continuation_marker.is_empty() {
        return Err(Error::InvalidConfig("continuation marker must be non-empty".into()));
    }
    if counts.counts.is_empty() {
        return Err(Error::EmptyCorpus);
    }
    let codepoints = counts.distinct_codepoints();
    if cfg.vocab_size < codepoints {
        return Err(Error::VocabTooSmall { requested: cfg.vocab_size, codepoints });
    }
    let marker = cfg.continuation_marker.as_str();
    let positional = |i: usize, c: char| if i == 0 { c.to_string() } else { format!("{marker}{c}") };

    let mut alphabet: BTreeSet<String> = BTreeSet::new();
    for w in counts.counts.keys() {
        for (i, c) in w.chars().enumerate() {
            alphabet.insert(positional(i, c));
        }
    }
    let pieces: Vec<String> = alphabet.into_iter().collect();
    let ids: HashMap<String, u32> = pieces.iter().enumerate().map(|(i, p)| (p.clone(), i as u32)).collect();

    // Sorted word order keeps training independent of hash iteration order.
    let mut entries: Vec<(&String, &u64)> = counts.counts.iter().collect();
    entries.sort_unstable();
    let words: Vec<(Vec<u32>, u64)> = entries
        .into_iter()
        .map(|(w, f)| (w.chars().enumerate().map(|(i, c)| ids[&positional(i, c)]).collect(), *f))
        .collect();

    let mut t = Trainer {
        marker,
        pieces,
        ids,
        words,
        pair_counts: HashMap::new(),
        pair_words: HashMap::new(),
        queue: BTreeSet::new(),
    };
    for w in 0..t.words.len() {
        t.add_word_pairs(w, 1);
    }

    while t.pieces.len() < cfg.vocab_size {
        let Some((Reverse(best), left, right)) = t.queue.first().cloned() else { break };
        if best < 2 {
            break;
        }
        let (l, r) = (t.ids[&left], t.ids[&right]);
        let merged = t.merged_piece(l, r);
        let m = match t.ids.get(&merged) {
            Some(&id) => id,
            None => {
                let id = t.pieces.len() as u32;
                t.ids.insert(merged.clone(), id);
                t.pieces.push(merged);
                id
            }
        };
        let mut affected: Vec<usize> = t.pair_words.get(&(l, r)).map(|s| s.iter().copied().collect()).unwrap_or_default();
        affected.sort_unstable();
        for w in affected {
            t.add_word_pairs(w, -1);
            let syms = &t.words[w].0;
            let mut next = Vec::with_capacity(syms.len());
            let mut i = 0;
            while i < syms.len() {
                if i + 1 < syms.len() && syms[i] == l && syms[i + 1] == r {
                    next.push(m);
                    i += 2;
                } else {
                    next.push(syms[i]);
                    i += 1;
                }
            }
            t.words[w].0 = next;
            t.add_word_pairs(w, 1);
        }
    }

    SubwordVocab::from_pieces(marker, t.pieces)
}

/// A word and its pieces; unknown codepoints appear as [`UNK_PIECE`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TokenizedWord {
    pub word: String,
    pub pieces: Vec<String>,
    pub unk_pieces: usize,
}

impl TokenizedWord {
    pub fn is_unbroken(&self) -> bool {
        self.pieces.len() == 1 && self.unk_pieces == 0
    }

    pub fn has_unk(&self) -> bool {
        self.unk_pieces > 0
    }

    /// Concatenate pieces with continuation markers stripped.
    pub fn detokenize(&self, marker: &str) -> String {
        self.pieces
            .iter()
            .enumerate()
            .map(|(i, p)| if i == 0 { p.as_str() } else { p.strip_prefix(marker).unwrap_or(p) })
            .collect()
    }
}

/// Greedy longest-match tokenization: the first piece is matched bare, the
/// rest in marker-prefixed space. A codepoint no piece covers becomes one
/// [`UNK_PIECE`].
pub fn tokenize_word(word: &str, vocab: &SubwordVocab) -> TokenizedWord {
    let chars: Vec<(usize, char)> = word.char_indices().collect();
    let marker = vocab.continuation_marker.as_str();
    let mut pieces = Vec::new();
    let mut unk = 0;
    let mut pos = 0;
    let mut cand = String::new();
    while pos < chars.len() {
        let start = chars[pos].0;
        let longest = vocab.max_piece_chars.min(chars.len() - pos);
        let mut matched = None;
        for len in (1..=longest).rev() {
            let end = chars.get(pos + len).map_or(word.len(), |c| c.0);
            cand.clear();
            if pos > 0 {
                cand.push_str(marker);
            }
            cand.push_str(&word[start..end]);
            if vocab.contains(&cand) {
                matched = Some(len);
                break;
            }
        }
        match matched {
            Some(len) => {
                pieces.push(cand.clone());
                pos += len;
            }
            None => {
                pieces.push(UNK_PIECE.to_string());
                unk += 1;
                pos += 1;
            }
        }
    }
    TokenizedWord { word: word.to_string(), pieces, unk_pieces: unk }
}

/// Number of mask tokens a cloze candidate needs: one per subword piece.
pub fn required_mask_count(word: &str, vocab: &SubwordVocab) -> usize {
    tokenize_word(word, vocab).pieces.len()
}

/// Score of a cloze candidate: the product of its per-piece probabilities.
pub fn cloze_word_score(piece_probabilities: &[f64]) -> Result<f64> {
    if piece_probabilities.is_empty() {
        return Err(Error::EmptyInput("piece probabilities"));
    }
    let mut score = 1.0;
    for &p in piece_probabilities {
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::InvalidProbability(p));
        }
        score *= p;
    }
    Ok(score)
}

/// Additive word/piece tallies; merge is associative.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TokenCounts {
    pub words: u64,
    pub pieces: u64,
    pub unbroken: u64,
    pub unk_words: u64,
}

impl TokenCounts {
    pub fn add_word(&mut self, t: &TokenizedWord) {
        self.words += 1;
        self.pieces += t.pieces.len() as u64;
        self.unbroken += t.is_unbroken() as u64;
        self.unk_words += t.has_unk() as u64;
    }

    pub fn merge(&mut self, other: &TokenCounts) {
        self.words += other.words;
        self.pieces += other.pieces;
        self.unbroken += other.unbroken;
        self.unk_words += other.unk_words;
    }

    pub fn metrics(&self) -> Result<TokenizerMetrics> {
        if self.words == 0 {
            return Err(Error::EmptyCorpus);
        }
        Ok(TokenizerMetrics {
            fertility: self.pieces as f64 / self.words as f64,
            unbroken_ratio: self.unbroken as f64 / self.words as f64,
            words: self.words,
            pieces: self.pieces,
            unk_words: self.unk_words,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TokenizerMetrics {
    pub fertility: f64,
    pub unbroken_ratio: f64,
    pub words: u64,
    pub pieces: u64,
    pub unk_words: u64,
}

/// Tally pieces over the normalized, whitespace-split words of `lines`.
pub fn count_tokens<S: AsRef<str> + Sync>(lines: &[S], vocab: &SubwordVocab) -> TokenCounts {
    let opts = NormalizeOptions::default();
    lines
        .par_iter()
        .map(|l| {
            let mut c = TokenCounts::default();
            for w in normalize(l.as_ref(), &opts).split_whitespace() {
                c.add_word(&tokenize_word(w, vocab));
            }
            c
        })
        .reduce(TokenCounts::default, |mut a, b| {
            a.merge(&b);
            a
        })
}

pub fn corpus_metrics<S: AsRef<str> + Sync>(lines: &[S], vocab: &SubwordVocab) -> Result<TokenizerMetrics> {
    count_tokens(lines, vocab).metrics()
}

/// Average number of pieces per word.
pub fn fertility<S: AsRef<str> + Sync>(lines: &[S], vocab: &SubwordVocab) -> Result<f64> {
    corpus_metrics(lines, vocab).map(|m| m.fertility)
}

/// Share of words that are a single known piece.
pub fn unbroken_ratio<S: AsRef<str> + Sync>(lines: &[S], vocab: &SubwordVocab) -> Result<f64> {
    corpus_metrics(lines, vocab).map(|m| m.unbroken_ratio)
}
