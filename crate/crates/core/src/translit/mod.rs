//! Rule-based ISO 15919 romanization of Brahmic-script text.
//!
//! The engine scans NFC codepoints left to right. A consonant takes the
//! following vowel sign, or is closed by a virama, or receives the inherent
//! vowel `a`. Codepoints a scheme does not map pass through unchanged and are
//! tallied in the [`TransliterationReport`] when they carry a script.

mod scheme;
mod tables;

use std::collections::BTreeMap;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use unicode_normalization::UnicodeNormalization;

pub use scheme::{load_scheme, Role, TransliterationScheme};

use crate::script::{classify_codepoint, ScriptTag};

const ZWNJ: char = '\u{200C}';
const ZWJ: char = '\u{200D}';
const DANDA: char = '\u{0964}';
const DOUBLE_DANDA: char = '\u{0965}';

/// Consonants that form an aspirate with a following `h`; a dead one before
/// `h` is written with a `_` separator.
const ASPIRABLE: &[&str] = &["k", "g", "c", "j", "ṭ", "ḍ", "t", "d", "p", "b"];

/// Gurmukhi tippi before a nasal letter writes that nasal doubled (ਸੰਨ → sanna).
const TIPPI: char = '\u{0A70}';
const TIPPI_NASALS: &[&str] = &["m", "n"];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct TranslitOptions {
    /// Leave danda / double danda as they are instead of mapping to `.` / `..`.
    pub keep_danda: bool,
}

/// Counts collected during one transliteration call.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransliterationReport {
    pub chars_in: u64,
    pub chars_out: u64,
    unmapped: BTreeMap<char, u64>,
}

impl TransliterationReport {
    /// Unmapped codepoints with their (positive) counts, ascending by codepoint.
    pub fn unmapped(&self) -> Vec<(char, u64)> {
        self.unmapped.iter().map(|(c, n)| (*c, *n)).collect()
    }

    pub fn unmapped_total(&self) -> u64 {
        self.unmapped.values().sum()
    }

    pub fn merge(&mut self, other: &TransliterationReport) {
        self.chars_in += other.chars_in;
        self.chars_out += other.chars_out;
        for (c, n) in &other.unmapped {
            *self.unmapped.entry(*c).or_default() += n;
        }
    }

    fn tally(&mut self, c: char) {
        *self.unmapped.entry(c).or_default() += 1;
    }
}

#[derive(Serialize)]
struct UnmappedEntry {
    codepoint: String,
    char: char,
    count: u64,
}

impl Serialize for TransliterationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let unmapped: Vec<UnmappedEntry> = self
            .unmapped
            .iter()
            .map(|(c, n)| UnmappedEntry {
                codepoint: format!("U+{:04X}", *c as u32),
                char: *c,
                count: *n,
            })
            .collect();
        let mut s = serializer.serialize_struct("TransliterationReport", 3)?;
        s.serialize_field("chars_in", &self.chars_in)?;
        s.serialize_field("chars_out", &self.chars_out)?;
        s.serialize_field("unmapped", &unmapped)?;
        s.end()
    }
}

/// How the engine picks a scheme for each codepoint.
#[derive(Clone, Copy)]
enum Resolver<'a> {
    Fixed(&'a TransliterationScheme),
    Auto,
}

impl<'a> Resolver<'a> {
    fn role(self, c: char) -> Option<(&'a TransliterationScheme, Role)> {
        let scheme = match self {
            Resolver::Fixed(s) => s,
            Resolver::Auto => {
                let tag = classify_codepoint(c);
                if !tag.is_brahmic() {
                    return None;
                }
                load_scheme(tag).ok()?
            }
        };
        scheme.role(c).map(|r| (scheme, r))
    }
}

/// Tail of the output relevant to the separator rules.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Tail {
    None,
    /// Output ends in a bare `a` (inherent vowel or the letter a).
    VowelA,
    /// Output ends in a consonant closed by a virama.
    Dead(&'static str),
}

/// Transliterate with a fixed scheme; other scripts pass through.
pub fn transliterate(
    text: &str,
    scheme: &TransliterationScheme,
) -> (String, TransliterationReport) {
    transliterate_with(text, scheme, TranslitOptions::default())
}

pub fn transliterate_with(
    text: &str,
    scheme: &TransliterationScheme,
    opts: TranslitOptions,
) -> (String, TransliterationReport) {
    run(text, Resolver::Fixed(scheme), opts)
}

/// Transliterate mixed-script text, applying each Brahmic script's own scheme
/// to its runs.
pub fn transliterate_auto(text: &str) -> (String, TransliterationReport) {
    transliterate_auto_with(text, TranslitOptions::default())
}

pub fn transliterate_auto_with(text: &str, opts: TranslitOptions) -> (String, TransliterationReport) {
    run(text, Resolver::Auto, opts)
}

fn first_letter(s: &str) -> &str {
    let mut end = 0;
    for (i, c) in s.char_indices() {
        if i > 0 && classify_codepoint(c) != ScriptTag::Neutral {
            break;
        }
        end = i + c.len_utf8();
    }
    &s[..end]
}

fn run(text: &str, resolver: Resolver<'_>, opts: TranslitOptions) -> (String, TransliterationReport) {
    let chars: Vec<char> = text.nfc().collect();
    let mut report = TransliterationReport {
        chars_in: chars.len() as u64,
        ..Default::default()
    };
    let mut out = String::with_capacity(text.len() + text.len() / 2);
    let mut tail = Tail::None;
    let mut geminate = false;
    let mut i = 0;

    while i < chars.len() {
        let c = chars[i];
        i += 1;
        let Some((scheme, role)) = resolver.role(c) else {
            match c {
                ZWJ | ZWNJ => continue,
                DANDA if !opts.keep_danda => out.push('.'),
                DOUBLE_DANDA if !opts.keep_danda => out.push_str(".."),
                _ => {
                    let tag = classify_codepoint(c);
                    if tag != ScriptTag::Neutral && tag != ScriptTag::Latin {
                        report.tally(c);
                    }
                    out.push(c);
                }
            }
            tail = Tail::None;
            geminate = false;
            continue;
        };

        match role {
            Role::Consonant(mut base) => {
                if let Some(n) = scheme.nukta() {
                    if chars.get(i) == Some(&n) {
                        i += 1;
                        match scheme.nukta_consonant(c) {
                            Some(m) => base = m,
                            None => report.tally(n),
                        }
                    }
                }
                if base.starts_with('h') {
                    if let Tail::Dead(prev) = tail {
                        if ASPIRABLE.contains(&prev) {
                            out.push('_');
                        }
                    }
                }
                if geminate {
                    out.push_str(first_letter(base));
                    geminate = false;
                }
                out.push_str(base);
                match chars.get(i).and_then(|&n| scheme.role(n)) {
                    Some(Role::VowelSign(v)) => {
                        out.push_str(v);
                        i += 1;
                        tail = Tail::None;
                    }
                    Some(Role::Virama) => {
                        i += 1;
                        tail = Tail::Dead(base);
                    }
                    _ => {
                        out.push('a');
                        tail = Tail::VowelA;
                    }
                }
            }
            Role::IndependentVowel(v) => {
                if tail == Tail::VowelA && (v == "i" || v == "u") {
                    out.push(':');
                }
                out.push_str(v);
                tail = if v == "a" { Tail::VowelA } else { Tail::None };
                geminate = false;
            }
            Role::VowelSign(v) => {
                out.push_str(v);
                tail = Tail::None;
            }
            Role::Modifier(m) => {
                let next = chars.get(i).and_then(|&n| scheme.role(n));
                if c == TIPPI && matches!(next, Some(Role::Consonant(v)) if TIPPI_NASALS.contains(&v)) {
                    geminate = true;
                } else {
                    out.push_str(m);
                }
                tail = Tail::None;
            }
            Role::Sign(s) => {
                out.push_str(s);
                tail = Tail::None;
                geminate = false;
            }
            Role::Digit(d) => {
                out.push(d);
                tail = Tail::None;
                geminate = false;
            }
            Role::Geminator => geminate = true,
            // stray virama or nukta without a consonant
            Role::Virama | Role::Nukta => {}
        }
    }

    let out: String = out.nfc().collect();
    report.chars_out = out.chars().count() as u64;
    (out, report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deva(s: &str) -> String {
        transliterate(s, load_scheme(ScriptTag::Devanagari).unwrap()).0
    }

    #[test]
    fn load_scheme_examples() {
        let s = load_scheme(ScriptTag::Devanagari).unwrap();
        assert_eq!(s.role('\u{0915}'), Some(Role::Consonant("k")));
        assert_eq!(s.role('\u{0940}'), Some(Role::VowelSign("ī")));
        assert_eq!(s.virama(), '\u{094D}');
        assert!(matches!(
            load_scheme(ScriptTag::Latin),
            Err(crate::Error::UnsupportedScript(ScriptTag::Latin))
        ));
        assert!(load_scheme(ScriptTag::Neutral).is_err());
        assert!(load_scheme(ScriptTag::Other).is_err());
        assert_eq!(load_scheme(ScriptTag::Gurmukhi).unwrap().virama(), '\u{0A4D}');
        for tag in ScriptTag::BRAHMIC {
            assert_eq!(load_scheme(tag).unwrap().script(), tag);
        }
    }

    #[test]
    fn abugida_cases() {
        assert_eq!(deva("क"), "ka");
        assert_eq!(deva("क्"), "k");
        assert_eq!(deva("की"), "kī");
        assert_eq!(deva("क्ष"), "kṣa");
        assert_eq!(deva("हिंदी"), "hiṁdī");
        assert_eq!(deva(""), "");
    }

    #[test]
    fn passthrough_of_latin() {
        let (out, rep) = transliterate("hello, 123", load_scheme(ScriptTag::Devanagari).unwrap());
        assert_eq!(out, "hello, 123");
        assert!(rep.unmapped().is_empty());
        assert_eq!(rep.chars_in, 10);
        assert_eq!(rep.chars_out, 10);
    }

    #[test]
    fn auto_examples() {
        assert_eq!(transliterate_auto("हिंदी and বাংলা").0, "hiṁdī and bāṁlā");
        assert_eq!(transliterate_auto("plain ascii!").0, "plain ascii!");
        assert_eq!(transliterate_auto("१२३").0, "123");
    }

    #[test]
    fn nukta_letters() {
        // precomposed and decomposed spellings agree
        assert_eq!(deva("\u{095B}"), "za");
        assert_eq!(deva("\u{091C}\u{093C}"), "za");
        assert_eq!(deva("ज़िंदगी"), "ziṁdagī");
        assert_eq!(deva("\u{0929}"), "ṉa");
        // nukta on a consonant without a nukta form: base mapping, nukta reported
        let (out, rep) = deva_report("\u{0915}\u{093C}");
        assert_eq!(out, "qa");
        assert!(rep.unmapped().is_empty());
        let (out, rep) = deva_report("\u{092E}\u{093C}");
        assert_eq!(out, "ma");
        assert_eq!(rep.unmapped(), vec![('\u{093C}', 1)]);
    }

    fn deva_report(s: &str) -> (String, TransliterationReport) {
        transliterate(s, load_scheme(ScriptTag::Devanagari).unwrap())
    }

    #[test]
    fn separators() {
        assert_eq!(deva("कइ"), "ka:i");
        assert_eq!(deva("अउ"), "a:u");
        assert_eq!(deva("कऐ"), "kaai");
        assert_eq!(deva("काइ"), "kāi");
        assert_eq!(deva("क्ह"), "k_ha");
        assert_eq!(deva("स्ह"), "sha");
    }

    #[test]
    fn joiners_dropped_and_danda() {
        assert_eq!(deva("क्\u{200D}ष"), "kṣa");
        assert_eq!(deva("क्\u{200C}ष"), "kṣa");
        assert_eq!(deva("राम। सीता॥"), "rāma. sītā..");
        let s = load_scheme(ScriptTag::Devanagari).unwrap();
        let (out, rep) = transliterate_with("राम।", s, TranslitOptions { keep_danda: true });
        assert_eq!(out, "rāma।");
        assert!(rep.unmapped().is_empty());
    }

    #[test]
    fn modifiers_and_signs() {
        assert_eq!(deva("दुःख"), "duḥkha");
        assert_eq!(deva("चाँद"), "cām̐da");
        assert_eq!(deva("ॐ"), "ōṁ");
        assert_eq!(deva("सोऽहम्"), "sō’ham");
    }

    #[test]
    fn gurmukhi_addak_geminates() {
        let g = load_scheme(ScriptTag::Gurmukhi).unwrap();
        assert_eq!(transliterate("ਪੱਕਾ", g).0, "pakkā");
        assert_eq!(transliterate("ਅੱਖ", g).0, "akkha");
        assert_eq!(transliterate("ਸਿੰਘ", g).0, "siṁgha");
        assert_eq!(transliterate("ਸੰਨ", g).0, "sanna");
        assert_eq!(transliterate("ਘੰਮ", g).0, "ghamma");
        assert_eq!(transliterate("ਸੰਤ", g).0, "saṁta");
        assert_eq!(transliterate("ਡ੍ਹ", g).0, "ḍ_ha");
        assert_eq!(transliterate("ੜ੍ਹ", g).0, "ṛha");
    }

    #[test]
    fn bengali_khanda_ta_and_assamese_letters() {
        let b = load_scheme(ScriptTag::BengaliAssamese).unwrap();
        assert_eq!(transliterate("উৎসব", b).0, "utsaba");
        assert_eq!(transliterate("ৰাজ্য", b).0, "rājya");
        assert_eq!(transliterate("অসমীয়া", b).0, "asamīẏā");
    }

    #[test]
    fn fixed_scheme_reports_foreign_brahmic() {
        let (out, rep) = deva_report("ক");
        assert_eq!(out, "ক");
        assert_eq!(rep.unmapped(), vec![('ক', 1)]);
        let (_, rep) = deva_report("中文 text");
        assert_eq!(rep.unmapped_total(), 2);
    }

    #[test]
    fn known_unmapped_passes_through() {
        let (out, rep) = deva_report("\u{0904}");
        assert_eq!(out, "\u{0904}");
        assert_eq!(rep.unmapped(), vec![('\u{0904}', 1)]);
    }

    #[test]
    fn stray_marks() {
        assert_eq!(deva("ि"), "i");
        assert_eq!(deva("्"), "");
        assert_eq!(deva("ं"), "ṁ");
    }

    #[test]
    fn report_merge_and_json() {
        let (_, mut a) = deva_report("\u{0904}क");
        let (_, b) = deva_report("\u{0904}\u{0971}");
        a.merge(&b);
        assert_eq!(a.unmapped(), vec![('\u{0904}', 2), ('\u{0971}', 1)]);
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(v["unmapped"][0]["codepoint"], "U+0904");
        assert_eq!(v["unmapped"][0]["count"], 2);
    }

    #[test]
    fn output_is_nfc_even_with_trailing_combining_marks() {
        // consonant + U+0301: the combining acute lands on the inherent a
        let (out, _) = transliterate_auto("क\u{0301}");
        assert_eq!(out, "ká");
        assert_eq!(transliterate_auto(&out).0, out);
    }
}
