mod common;

use std::collections::BTreeSet;

use common::{golden, is_latin_output, seed_for, Fuzzer};
use unicode_normalization::{is_nfc, UnicodeNormalization};
use uniscript::{
    classify_codepoint, load_scheme, transliterate, transliterate_auto, ScriptTag, TransliterationScheme,
};

const GOLDEN_DEVA: &str = include_str!("data/golden_devanagari.tsv");
const GOLDEN_BENG: &str = include_str!("data/golden_bengali_assamese.tsv");
const UCD_ASSIGNED: &str = include_str!("data/ucd_assigned.txt");

fn check_golden(tsv: &str, tag: ScriptTag) {
    let rows = golden(tsv);
    assert!(rows.len() >= 20);
    let scheme = load_scheme(tag).unwrap();
    for (word, want) in rows {
        let (got, report) = transliterate(word, scheme);
        assert_eq!(got.as_bytes(), want.as_bytes(), "{word}");
        assert!(report.unmapped().is_empty(), "{word}");
        assert_eq!(transliterate_auto(word).0, want, "{word} (auto)");
    }
}

#[test]
fn golden_devanagari() {
    check_golden(GOLDEN_DEVA, ScriptTag::Devanagari);
}

#[test]
fn golden_bengali_assamese() {
    check_golden(GOLDEN_BENG, ScriptTag::BengaliAssamese);
}

#[test]
fn every_assigned_codepoint_is_mapped_or_listed() {
    let mut seen = BTreeSet::new();
    for line in UCD_ASSIGNED.lines().filter(|l| !l.starts_with('#')) {
        let mut parts = line.split_whitespace();
        let tag: ScriptTag = parts.next().unwrap().parse().unwrap();
        seen.insert(tag);
        let scheme = load_scheme(tag).unwrap();
        for hex in parts {
            let c = char::from_u32(u32::from_str_radix(hex, 16).unwrap()).unwrap();
            let mapped = scheme.is_mapped(c);
            let unmapped = scheme.is_known_unmapped(c);
            let neutral = classify_codepoint(c) == ScriptTag::Neutral;
            assert!(
                [mapped, unmapped, neutral].iter().filter(|b| **b).count() == 1,
                "U+{:04X} in {tag}: mapped={mapped} known_unmapped={unmapped} neutral={neutral}",
                c as u32
            );
        }
    }
    assert_eq!(seen.len(), 6);
    // extended blocks are listed wholesale
    let deva = load_scheme(ScriptTag::Devanagari).unwrap();
    for cp in (0xA8E0..=0xA8FF).chain(0x11B00..=0x11B5F) {
        assert!(deva.is_known_unmapped(char::from_u32(cp).unwrap()));
    }
    let sinh = load_scheme(ScriptTag::Sinhala).unwrap();
    for cp in 0x111E0..=0x111FF {
        assert!(sinh.is_known_unmapped(char::from_u32(cp).unwrap()));
    }
}

const VOWEL_LETTERS: &str = "aeiouāēīōūæǣöȫŭô";

fn base_letters(s: &str) -> Vec<char> {
    s.nfd().filter(|c| !('\u{0300}'..='\u{036F}').contains(c)).collect()
}

fn values(s: &TransliterationScheme) -> Vec<&'static str> {
    let mut v = Vec::new();
    v.extend(s.independent_vowels().into_iter().map(|p| p.1));
    v.extend(s.consonants().into_iter().map(|p| p.1));
    v.extend(s.nukta_consonants().into_iter().map(|p| p.1));
    v.extend(s.vowel_signs().into_iter().map(|p| p.1));
    v.extend(s.modifiers().into_iter().map(|p| p.1));
    v.extend(s.signs().into_iter().map(|p| p.1));
    v
}

#[test]
fn scheme_values_are_nfc_latin() {
    for tag in ScriptTag::BRAHMIC {
        let s = load_scheme(tag).unwrap();
        for v in values(s) {
            assert!(is_nfc(v), "{tag}: {v:?} not NFC");
            assert!(is_latin_output(v), "{tag}: {v:?}");
        }
        let digits: String = s.digits().into_iter().map(|p| p.1).collect();
        assert_eq!(digits, "0123456789", "{tag}");
    }
}

#[test]
fn consonants_carry_no_vowel_and_signs_start_with_one() {
    for tag in ScriptTag::BRAHMIC {
        let s = load_scheme(tag).unwrap();
        for (c, v) in s.consonants().into_iter().chain(s.nukta_consonants()) {
            let last = *base_letters(v).last().unwrap();
            assert!(!VOWEL_LETTERS.contains(last), "{tag} U+{:04X} → {v}", c as u32);
        }
        for (c, v) in s.vowel_signs() {
            let b = base_letters(v);
            let vocalic = matches!(b.first(), Some('r' | 'l')) && v.nfd().any(|m| m == '\u{0325}');
            assert!(VOWEL_LETTERS.contains(b[0]) || vocalic, "{tag} U+{:04X} → {v}", c as u32);
        }
    }
}

#[test]
fn spec_examples() {
    let deva = load_scheme(ScriptTag::Devanagari).unwrap();
    let (out, rep) = transliterate("hello, 123", deva);
    assert_eq!(out, "hello, 123");
    assert!(rep.unmapped().is_empty());
    assert_eq!(transliterate("१२३", deva).0, "123");
    assert_eq!(transliterate_auto("हिंदी and বাংলা").0, "hiṁdī and bāṁlā");
    assert!(load_scheme(ScriptTag::Latin).is_err());
    assert_eq!(load_scheme(ScriptTag::Gurmukhi).unwrap().virama(), '\u{0A4D}');
}

#[test]
fn fuzzed_output_is_latin_and_idempotent() {
    for tag in ScriptTag::BRAHMIC {
        let scheme = load_scheme(tag).unwrap();
        let mut fz = Fuzzer::new(scheme, seed_for(tag) ^ 0xA5);
        for _ in 0..2000 {
            let s = fz.string(24);
            let (out, rep) = transliterate(&s, scheme);
            assert!(is_latin_output(&out), "{tag}: {s:?} → {out:?}");
            // only a nukta on a consonant lacking a nukta form is lossy
            assert!(
                rep.unmapped().iter().all(|(c, _)| Some(*c) == scheme.nukta()),
                "{tag}: {s:?} {:?}",
                rep.unmapped()
            );
            assert!(is_nfc(&out));
            assert_eq!(transliterate(&out, scheme).0, out);
            assert_eq!(transliterate_auto(&out).0, out);
            assert_eq!(transliterate_auto(&s).0, out, "{tag}: auto differs on {s:?}");
        }
    }
}

#[test]
fn line_by_line_equals_whole_text() {
    for tag in ScriptTag::BRAHMIC {
        let scheme = load_scheme(tag).unwrap();
        let mut fz = Fuzzer::new(scheme, seed_for(tag) ^ 0x5A);
        let text: Vec<String> = (0..200).map(|_| fz.string(30).replace('\n', " ")).collect();
        let whole = transliterate(&text.join("\n"), scheme).0;
        let parts: Vec<String> = text.iter().map(|l| transliterate(l, scheme).0).collect();
        assert_eq!(whole, parts.join("\n"));
    }
}

#[test]
fn mixed_script_text_uses_each_scheme() {
    let text = "ਪੰਜਾਬੀ, ગુજરાતી, ଓଡ଼ିଆ, සිංහල";
    let (out, rep) = transliterate_auto(text);
    assert!(is_latin_output(&out), "{out}");
    assert!(rep.unmapped().is_empty());
    assert_eq!(out, "paṁjābī, gujarātī, ōṛiā, siṁhala");
}
