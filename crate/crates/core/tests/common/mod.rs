//! Helpers shared by the integration tests.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use uniscript::{ScriptTag, TransliterationScheme};

/// Script-neutral codepoints mixed into fuzzed strings.
pub const NEUTRAL: &[char] = &[
    ' ', ' ', '\n', ',', '.', '?', '1', '7', '\u{0964}', '\u{0965}', '\u{200C}', '\u{200D}', '-',
];

/// Every codepoint (or codepoint pair, for nukta letters) the scheme maps.
pub fn mapped_units(s: &TransliterationScheme) -> Vec<String> {
    let mut v: Vec<String> = Vec::new();
    let one = |c: char| c.to_string();
    v.extend(s.independent_vowels().into_iter().map(|(c, _)| one(c)));
    v.extend(s.consonants().into_iter().map(|(c, _)| one(c)));
    v.extend(s.vowel_signs().into_iter().map(|(c, _)| one(c)));
    v.extend(s.modifiers().into_iter().map(|(c, _)| one(c)));
    v.extend(s.signs().into_iter().map(|(c, _)| one(c)));
    v.extend(s.digits().into_iter().map(|(c, _)| one(c)));
    v.push(one(s.virama()));
    v.extend(s.nukta().map(one));
    v.extend(s.geminator().map(one));
    if let Some(n) = s.nukta() {
        v.extend(s.nukta_consonants().into_iter().map(|(c, _)| format!("{c}{n}")));
    }
    v
}

/// Seeded generator of strings over a scheme's mapped alphabet plus neutral
/// characters. Consonants are favoured so that syllables actually form.
pub struct Fuzzer {
    rng: ChaCha8Rng,
    consonants: Vec<char>,
    units: Vec<String>,
}

impl Fuzzer {
    pub fn new(scheme: &TransliterationScheme, seed: u64) -> Self {
        Fuzzer {
            rng: ChaCha8Rng::seed_from_u64(seed),
            consonants: scheme.consonants().into_iter().map(|(c, _)| c).collect(),
            units: mapped_units(scheme),
        }
    }

    pub fn string(&mut self, max_len: usize) -> String {
        let len = self.rng.random_range(0..=max_len);
        let mut s = String::new();
        for _ in 0..len {
            match self.rng.random_range(0..10) {
                0..=3 => s.push(self.consonants[self.rng.random_range(0..self.consonants.len())]),
                4..=7 => s.push_str(&self.units[self.rng.random_range(0..self.units.len())]),
                _ => s.push(NEUTRAL[self.rng.random_range(0..NEUTRAL.len())]),
            }
        }
        s
    }
}

pub fn seed_for(tag: ScriptTag) -> u64 {
    0x0001_5919_0000 + tag as u64
}

/// True when every codepoint is Latin or script-neutral.
pub fn is_latin_output(s: &str) -> bool {
    s.chars()
        .all(|c| matches!(uniscript::classify_codepoint(c), ScriptTag::Latin | ScriptTag::Neutral))
}

/// Words and expected romanizations from a golden TSV.
pub fn golden(tsv: &str) -> Vec<(&str, &str)> {
    tsv.lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_once('\t').expect("two columns"))
        .collect()
}
