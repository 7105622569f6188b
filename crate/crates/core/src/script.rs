//! Codepoint and text classification by writing script.
//!
//! Classification is block based: each of the six Brahmic tags owns a fixed
//! set of Unicode blocks, and a handful of script-neutral ranges (whitespace,
//! ASCII digits and punctuation, general punctuation, combining diacritics)
//! never count toward dominance.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Version of the Unicode block layout the tables below were frozen from.
pub const UNICODE_VERSION: &str = "15.1.0";

/// Writing-script tag. The declaration order is the tie-break order used by
/// [`ScriptHistogram::dominant`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ScriptTag {
    #[serde(alias = "deva")]
    Devanagari,
    #[serde(alias = "Bengali-Assamese", alias = "Bengali", alias = "beng")]
    BengaliAssamese,
    #[serde(alias = "orya", alias = "Odia")]
    Oriya,
    #[serde(alias = "gujr")]
    Gujarati,
    #[serde(alias = "guru")]
    Gurmukhi,
    #[serde(alias = "sinh")]
    Sinhala,
    #[serde(alias = "latn")]
    Latin,
    #[serde(alias = "zyyy")]
    Other,
    #[serde(alias = "zinh")]
    Neutral,
}

impl ScriptTag {
    pub const ALL: [ScriptTag; 9] = [
        ScriptTag::Devanagari,
        ScriptTag::BengaliAssamese,
        ScriptTag::Oriya,
        ScriptTag::Gujarati,
        ScriptTag::Gurmukhi,
        ScriptTag::Sinhala,
        ScriptTag::Latin,
        ScriptTag::Other,
        ScriptTag::Neutral,
    ];

    pub const BRAHMIC: [ScriptTag; 6] = [
        ScriptTag::Devanagari,
        ScriptTag::BengaliAssamese,
        ScriptTag::Oriya,
        ScriptTag::Gujarati,
        ScriptTag::Gurmukhi,
        ScriptTag::Sinhala,
    ];

    pub fn is_brahmic(self) -> bool {
        (self as usize) < 6
    }

    fn index(self) -> usize {
        self as usize
    }

    /// ISO 15924 code, used on the command line.
    pub fn code(self) -> &'static str {
        match self {
            ScriptTag::Devanagari => "deva",
            ScriptTag::BengaliAssamese => "beng",
            ScriptTag::Oriya => "orya",
            ScriptTag::Gujarati => "gujr",
            ScriptTag::Gurmukhi => "guru",
            ScriptTag::Sinhala => "sinh",
            ScriptTag::Latin => "latn",
            ScriptTag::Other => "zyyy",
            ScriptTag::Neutral => "zinh",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScriptTag::Devanagari => "Devanagari",
            ScriptTag::BengaliAssamese => "BengaliAssamese",
            ScriptTag::Oriya => "Oriya",
            ScriptTag::Gujarati => "Gujarati",
            ScriptTag::Gurmukhi => "Gurmukhi",
            ScriptTag::Sinhala => "Sinhala",
            ScriptTag::Latin => "Latin",
            ScriptTag::Other => "Other",
            ScriptTag::Neutral => "Neutral",
        }
    }
}

impl fmt::Display for ScriptTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScriptTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        ScriptTag::ALL
            .iter()
            .copied()
            .find(|t| t.code() == lower || t.name().to_ascii_lowercase() == lower)
            .or(match lower.as_str() {
                "bengali-assamese" | "bengali" | "assamese" => Some(ScriptTag::BengaliAssamese),
                "odia" => Some(ScriptTag::Oriya),
                _ => None,
            })
            .ok_or_else(|| Error::UnknownScript(s.to_string()))
    }
}

type Range = (u32, u32);

const DEVANAGARI: &[Range] = &[(0x0900, 0x097F), (0xA8E0, 0xA8FF), (0x11B00, 0x11B5F)];
const BENGALI: &[Range] = &[(0x0980, 0x09FF)];
const GURMUKHI: &[Range] = &[(0x0A00, 0x0A7F)];
const GUJARATI: &[Range] = &[(0x0A80, 0x0AFF)];
const ORIYA: &[Range] = &[(0x0B00, 0x0B7F)];
const SINHALA: &[Range] = &[(0x0D80, 0x0DFF), (0x111E0, 0x111FF)];

// Latin letters beyond ASCII: Latin-1 letters, Extended-A/B, IPA, Extended Additional.
const LATIN_EXTRA: &[Range] = &[
    (0x00C0, 0x00D6),
    (0x00D8, 0x00F6),
    (0x00F8, 0x024F),
    (0x0250, 0x02AF),
    (0x1E00, 0x1EFF),
    (0x2C60, 0x2C7F),
    (0xA720, 0xA7FF),
];

const NEUTRAL_RANGES: &[Range] = &[
    (0x00A0, 0x00BF),
    (0x00D7, 0x00D7),
    (0x00F7, 0x00F7),
    (0x02B0, 0x02FF), // spacing modifier letters
    (0x0300, 0x036F), // combining diacritical marks
    (0x0964, 0x0965), // danda, double danda
    (0x1AB0, 0x1AFF),
    (0x1DC0, 0x1DFF),
    (0x2000, 0x206F), // general punctuation incl. ZWNJ/ZWJ
    (0x3000, 0x3000),
    (0xFEFF, 0xFEFF),
];

/// Brahmic block table, in tag order.
pub const BRAHMIC_BLOCKS: [(ScriptTag, &[(u32, u32)]); 6] = [
    (ScriptTag::Devanagari, DEVANAGARI),
    (ScriptTag::BengaliAssamese, BENGALI),
    (ScriptTag::Oriya, ORIYA),
    (ScriptTag::Gujarati, GUJARATI),
    (ScriptTag::Gurmukhi, GURMUKHI),
    (ScriptTag::Sinhala, SINHALA),
];

fn in_ranges(cp: u32, ranges: &[Range]) -> bool {
    ranges.iter().any(|&(lo, hi)| lo <= cp && cp <= hi)
}

/// Classify a single codepoint.
pub fn classify_codepoint(c: char) -> ScriptTag {
    let cp = c as u32;
    if c.is_ascii() {
        return if c.is_ascii_alphabetic() {
            ScriptTag::Latin
        } else {
            ScriptTag::Neutral
        };
    }
    if in_ranges(cp, NEUTRAL_RANGES) || c.is_whitespace() || c.is_control() {
        return ScriptTag::Neutral;
    }
    for (tag, ranges) in BRAHMIC_BLOCKS {
        if in_ranges(cp, ranges) {
            return tag;
        }
    }
    if in_ranges(cp, LATIN_EXTRA) {
        return ScriptTag::Latin;
    }
    ScriptTag::Other
}

/// Per-tag codepoint counts for a text.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ScriptHistogram {
    counts: [u64; 9],
}

/// Dominant script with the tie flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Dominance {
    pub tag: ScriptTag,
    pub tie: bool,
}

impl ScriptHistogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, c: char) {
        self.counts[classify_codepoint(c).index()] += 1;
    }

    pub fn count(&self, tag: ScriptTag) -> u64 {
        self.counts[tag.index()]
    }

    pub fn total_scriptful(&self) -> u64 {
        ScriptTag::ALL
            .iter()
            .filter(|t| **t != ScriptTag::Neutral)
            .map(|t| self.count(*t))
            .sum()
    }

    pub fn has_brahmic(&self) -> bool {
        ScriptTag::BRAHMIC.iter().any(|t| self.count(*t) > 0)
    }

    /// Non-zero counts in tag order.
    pub fn nonzero(&self) -> impl Iterator<Item = (ScriptTag, u64)> + '_ {
        ScriptTag::ALL
            .iter()
            .map(|t| (*t, self.count(*t)))
            .filter(|(_, n)| *n > 0)
    }

    /// Plurality winner over non-neutral tags; ties go to the earliest tag.
    pub fn dominant(&self) -> Option<Dominance> {
        let mut best: Option<(ScriptTag, u64)> = None;
        let mut tie = false;
        for tag in ScriptTag::ALL {
            if tag == ScriptTag::Neutral {
                continue;
            }
            let n = self.count(tag);
            if n == 0 {
                continue;
            }
            match best {
                Some((_, m)) if n == m => tie = true,
                Some((_, m)) if n < m => {}
                _ => {
                    best = Some((tag, n));
                    tie = false;
                }
            }
        }
        best.map(|(tag, _)| Dominance { tag, tie })
    }

    pub fn merge(&mut self, other: &ScriptHistogram) {
        for (a, b) in self.counts.iter_mut().zip(other.counts.iter()) {
            *a += b;
        }
    }
}

impl Serialize for ScriptHistogram {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(None)?;
        for (tag, n) in self.nonzero() {
            map.serialize_entry(tag.name(), &n)?;
        }
        map.end()
    }
}

pub fn script_histogram(text: &str) -> ScriptHistogram {
    let mut h = ScriptHistogram::new();
    text.chars().for_each(|c| h.add(c));
    h
}

pub fn dominant_script(text: &str) -> Option<ScriptTag> {
    script_histogram(text).dominant().map(|d| d.tag)
}

/// Serializable summary produced by the `detect` command.
#[derive(Debug, Clone, Serialize)]
pub struct DetectReport {
    pub counts: ScriptHistogram,
    pub total_scriptful: u64,
    pub dominant: Option<ScriptTag>,
    pub tie: bool,
}

impl DetectReport {
    pub fn for_text(text: &str) -> Self {
        let counts = script_histogram(text);
        let dom = counts.dominant();
        DetectReport {
            total_scriptful: counts.total_scriptful(),
            dominant: dom.map(|d| d.tag),
            tie: dom.is_some_and(|d| d.tie),
            counts,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn classify_examples() {
        assert_eq!(classify_codepoint('\u{0915}'), ScriptTag::Devanagari);
        assert_eq!(classify_codepoint(' '), ScriptTag::Neutral);
        assert_eq!(classify_codepoint('\u{0995}'), ScriptTag::BengaliAssamese);
        assert_eq!(classify_codepoint('\u{0A15}'), ScriptTag::Gurmukhi);
        assert_eq!(classify_codepoint('\u{0A95}'), ScriptTag::Gujarati);
        assert_eq!(classify_codepoint('\u{0B15}'), ScriptTag::Oriya);
        assert_eq!(classify_codepoint('\u{0D9A}'), ScriptTag::Sinhala);
        assert_eq!(classify_codepoint('x'), ScriptTag::Latin);
        assert_eq!(classify_codepoint('ṁ'), ScriptTag::Latin);
        assert_eq!(classify_codepoint('7'), ScriptTag::Neutral);
        assert_eq!(classify_codepoint('!'), ScriptTag::Neutral);
        assert_eq!(classify_codepoint('\u{200C}'), ScriptTag::Neutral);
        assert_eq!(classify_codepoint('\u{200D}'), ScriptTag::Neutral);
        assert_eq!(classify_codepoint('\u{0325}'), ScriptTag::Neutral);
        assert_eq!(classify_codepoint('ж'), ScriptTag::Other);
        assert_eq!(classify_codepoint('中'), ScriptTag::Other);
    }

    #[test]
    fn combining_signs_belong_to_their_block() {
        // virama, vowel sign, anusvara
        for c in ['\u{094D}', '\u{0940}', '\u{0902}'] {
            assert_eq!(classify_codepoint(c), ScriptTag::Devanagari);
        }
        assert_eq!(classify_codepoint('\u{09CD}'), ScriptTag::BengaliAssamese);
    }

    #[test]
    fn blocks_are_disjoint() {
        for (i, (_, a)) in BRAHMIC_BLOCKS.iter().enumerate() {
            for (_, b) in BRAHMIC_BLOCKS.iter().skip(i + 1) {
                for &(lo1, hi1) in a.iter() {
                    for &(lo2, hi2) in b.iter() {
                        assert!(hi1 < lo2 || hi2 < lo1);
                    }
                }
            }
        }
    }

    #[test]
    fn histogram_examples() {
        let h = script_histogram("");
        assert_eq!(h.total_scriptful(), 0);
        assert!(ScriptTag::ALL.iter().all(|t| h.count(*t) == 0));

        let h = script_histogram("कabc");
        assert_eq!(h.count(ScriptTag::Devanagari), 1);
        assert_eq!(h.count(ScriptTag::Latin), 3);
        assert_eq!(h.total_scriptful(), 4);

        let h = script_histogram("क ক");
        assert_eq!(h.count(ScriptTag::Devanagari), 1);
        assert_eq!(h.count(ScriptTag::BengaliAssamese), 1);
        assert_eq!(h.count(ScriptTag::Neutral), 1);
        assert_eq!(h.total_scriptful(), 2);
    }

    #[test]
    fn dominant_examples() {
        assert_eq!(dominant_script("हिंदी text"), Some(ScriptTag::Devanagari));
        assert_eq!(dominant_script("12345 !!"), None);
        let d = script_histogram("कক").dominant().unwrap();
        assert_eq!(d.tag, ScriptTag::Devanagari);
        assert!(d.tie);
        let d = script_histogram("ककক").dominant().unwrap();
        assert!(!d.tie);
    }

    #[test]
    fn tie_flag_clears_when_a_later_tag_wins_outright() {
        // Devanagari and Bengali tie at 1, Latin wins with 2.
        let d = script_histogram("कকab").dominant().unwrap();
        assert_eq!(d, Dominance { tag: ScriptTag::Latin, tie: false });
    }

    #[test]
    fn parse_tags() {
        assert_eq!("deva".parse::<ScriptTag>().unwrap(), ScriptTag::Devanagari);
        assert_eq!("Bengali-Assamese".parse::<ScriptTag>().unwrap(), ScriptTag::BengaliAssamese);
        assert!("klingon".parse::<ScriptTag>().is_err());
        let t: ScriptTag = serde_json::from_str("\"Bengali-Assamese\"").unwrap();
        assert_eq!(t, ScriptTag::BengaliAssamese);
    }

    #[test]
    fn detect_report_json() {
        let r = DetectReport::for_text("कক");
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["dominant"], "Devanagari");
        assert_eq!(v["tie"], true);
        assert_eq!(v["counts"]["BengaliAssamese"], 1);
    }

    #[test]
    fn classify_is_total_over_all_scalars() {
        let mut seen = 0u32;
        for cp in 0..=0x10FFFFu32 {
            if let Some(c) = char::from_u32(cp) {
                let _ = classify_codepoint(c);
                seen += 1;
            }
        }
        assert_eq!(seen, 0x110000 - 0x800);
    }

    proptest! {
        #[test]
        fn scriptful_total_matches_counts(s in "\\PC{0,64}") {
            let h = script_histogram(&s);
            let sum: u64 = ScriptTag::ALL.iter()
                .filter(|t| **t != ScriptTag::Neutral)
                .map(|t| h.count(*t)).sum();
            prop_assert_eq!(sum, h.total_scriptful());
            prop_assert_eq!(h.total_scriptful() + h.count(ScriptTag::Neutral), s.chars().count() as u64);
        }

        #[test]
        fn dominance_ignores_appended_neutral(s in "\\PC{0,32}", pad in "[ 0-9.,;!?\t]{0,16}") {
            let appended = format!("{s}{pad}");
            prop_assert_eq!(dominant_script(&s), dominant_script(&appended));
        }
    }
}
