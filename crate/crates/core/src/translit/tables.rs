//! Frozen ISO 15919 tables for the six supported Brahmic scripts.
//!
//! Keys are NFC codepoints. Precomposed nukta letters that NFC decomposes are
//! reached through `nukta_consonants`, keyed by the base consonant.

use super::scheme::RawScheme;
use crate::script::ScriptTag;

pub(super) static DEVANAGARI: RawScheme = RawScheme {
    script: ScriptTag::Devanagari,
    block: (0x0900, 0x097F),
    virama: '\u{094D}',
    nukta: Some('\u{093C}'),
    geminator: None,
    independent_vowels: &[
        ('\u{0905}', "a"),
        ('\u{0906}', "ā"),
        ('\u{0907}', "i"),
        ('\u{0908}', "ī"),
        ('\u{0909}', "u"),
        ('\u{090A}', "ū"),
        ('\u{090B}', "r\u{0325}"),
        ('\u{090C}', "l\u{0325}"),
        ('\u{090D}', "æ"),
        ('\u{090E}', "e"),
        ('\u{090F}', "ē"),
        ('\u{0910}', "ai"),
        ('\u{0911}', "ô"),
        ('\u{0912}', "o"),
        ('\u{0913}', "ō"),
        ('\u{0914}', "au"),
        ('\u{0960}', "r\u{0325}\u{0304}"),
        ('\u{0961}', "l\u{0325}\u{0304}"),
        ('\u{0972}', "æ"),
        ('\u{0973}', "ö"),
        ('\u{0974}', "ȫ"),
        ('\u{0976}', "ŭ"),
        ('\u{0977}', "ŭ\u{0304}"),
    ],
    consonants: &[
        ('\u{0915}', "k"),
        ('\u{0916}', "kh"),
        ('\u{0917}', "g"),
        ('\u{0918}', "gh"),
        ('\u{0919}', "ṅ"),
        ('\u{091A}', "c"),
        ('\u{091B}', "ch"),
        ('\u{091C}', "j"),
        ('\u{091D}', "jh"),
        ('\u{091E}', "ñ"),
        ('\u{091F}', "ṭ"),
        ('\u{0920}', "ṭh"),
        ('\u{0921}', "ḍ"),
        ('\u{0922}', "ḍh"),
        ('\u{0923}', "ṇ"),
        ('\u{0924}', "t"),
        ('\u{0925}', "th"),
        ('\u{0926}', "d"),
        ('\u{0927}', "dh"),
        ('\u{0928}', "n"),
        ('\u{0929}', "ṉ"),
        ('\u{092A}', "p"),
        ('\u{092B}', "ph"),
        ('\u{092C}', "b"),
        ('\u{092D}', "bh"),
        ('\u{092E}', "m"),
        ('\u{092F}', "y"),
        ('\u{0930}', "r"),
        ('\u{0931}', "ṟ"),
        ('\u{0932}', "l"),
        ('\u{0933}', "ḷ"),
        ('\u{0934}', "ḻ"),
        ('\u{0935}', "v"),
        ('\u{0936}', "ś"),
        ('\u{0937}', "ṣ"),
        ('\u{0938}', "s"),
        ('\u{0939}', "h"),
        ('\u{0979}', "z\u{0308}"),
    ],
    nukta_consonants: &[
        ('\u{0928}', "ṉ"),
        ('\u{0930}', "ṟ"),
        ('\u{0933}', "ḻ"),
        ('\u{0915}', "q"),
        ('\u{0916}', "k\u{035F}h"),
        ('\u{0917}', "ġ"),
        ('\u{091C}', "z"),
        ('\u{0921}', "ṛ"),
        ('\u{0922}', "ṛh"),
        ('\u{092B}', "f"),
        ('\u{092F}', "ẏ"),
    ],
    vowel_signs: &[
        ('\u{093A}', "ö"),
        ('\u{093B}', "ȫ"),
        ('\u{093E}', "ā"),
        ('\u{093F}', "i"),
        ('\u{0940}', "ī"),
        ('\u{0941}', "u"),
        ('\u{0942}', "ū"),
        ('\u{0943}', "r\u{0325}"),
        ('\u{0944}', "r\u{0325}\u{0304}"),
        ('\u{0945}', "æ"),
        ('\u{0946}', "e"),
        ('\u{0947}', "ē"),
        ('\u{0948}', "ai"),
        ('\u{0949}', "ô"),
        ('\u{094A}', "o"),
        ('\u{094B}', "ō"),
        ('\u{094C}', "au"),
        ('\u{094E}', "ē"),
        ('\u{0955}', "ǣ"),
        ('\u{0956}', "ŭ"),
        ('\u{0957}', "ŭ\u{0304}"),
        ('\u{0962}', "l\u{0325}"),
        ('\u{0963}', "l\u{0325}\u{0304}"),
    ],
    modifiers: &[
        ('\u{0901}', "m\u{0310}"),
        ('\u{0902}', "ṁ"),
        ('\u{0903}', "ḥ"),
        ('\u{0951}', "\u{030D}"),
        ('\u{0952}', "\u{0331}"),
    ],
    signs: &[
        ('\u{093D}', "’"),
        ('\u{0950}', "ōṁ"),
        ('\u{097D}', "ʔ"),
    ],
    digits: &[
        ('\u{0966}', '0'),
        ('\u{0967}', '1'),
        ('\u{0968}', '2'),
        ('\u{0969}', '3'),
        ('\u{096A}', '4'),
        ('\u{096B}', '5'),
        ('\u{096C}', '6'),
        ('\u{096D}', '7'),
        ('\u{096E}', '8'),
        ('\u{096F}', '9'),
    ],
    known_unmapped: &[
        (0x0900, 0x0900),
        (0x0904, 0x0904),
        (0x094F, 0x094F),
        (0x0953, 0x0953),
        (0x0954, 0x0954),
        (0x0970, 0x0970),
        (0x0971, 0x0971),
        (0x0975, 0x0975),
        (0x0978, 0x0978),
        (0x097A, 0x097A),
        (0x097B, 0x097B),
        (0x097C, 0x097C),
        (0x097E, 0x097E),
        (0x097F, 0x097F),
        (0xA8E0, 0xA8FF),
        (0x11B00, 0x11B5F),
    ],
};

pub(super) static BENGALI: RawScheme = RawScheme {
    script: ScriptTag::BengaliAssamese,
    block: (0x0980, 0x09FF),
    virama: '\u{09CD}',
    nukta: Some('\u{09BC}'),
    geminator: None,
    independent_vowels: &[
        ('\u{0985}', "a"),
        ('\u{0986}', "ā"),
        ('\u{0987}', "i"),
        ('\u{0988}', "ī"),
        ('\u{0989}', "u"),
        ('\u{098A}', "ū"),
        ('\u{098B}', "r\u{0325}"),
        ('\u{098C}', "l\u{0325}"),
        ('\u{098F}', "ē"),
        ('\u{0990}', "ai"),
        ('\u{0993}', "ō"),
        ('\u{0994}', "au"),
        ('\u{09E0}', "r\u{0325}\u{0304}"),
        ('\u{09E1}', "l\u{0325}\u{0304}"),
    ],
    consonants: &[
        ('\u{0995}', "k"),
        ('\u{0996}', "kh"),
        ('\u{0997}', "g"),
        ('\u{0998}', "gh"),
        ('\u{0999}', "ṅ"),
        ('\u{099A}', "c"),
        ('\u{099B}', "ch"),
        ('\u{099C}', "j"),
        ('\u{099D}', "jh"),
        ('\u{099E}', "ñ"),
        ('\u{099F}', "ṭ"),
        ('\u{09A0}', "ṭh"),
        ('\u{09A1}', "ḍ"),
        ('\u{09A2}', "ḍh"),
        ('\u{09A3}', "ṇ"),
        ('\u{09A4}', "t"),
        ('\u{09A5}', "th"),
        ('\u{09A6}', "d"),
        ('\u{09A7}', "dh"),
        ('\u{09A8}', "n"),
        ('\u{09AA}', "p"),
        ('\u{09AB}', "ph"),
        ('\u{09AC}', "b"),
        ('\u{09AD}', "bh"),
        ('\u{09AE}', "m"),
        ('\u{09AF}', "y"),
        ('\u{09B0}', "r"),
        ('\u{09B2}', "l"),
        ('\u{09B6}', "ś"),
        ('\u{09B7}', "ṣ"),
        ('\u{09B8}', "s"),
        ('\u{09B9}', "h"),
        ('\u{09F0}', "r"),
        ('\u{09F1}', "v"),
    ],
    nukta_consonants: &[
        ('\u{09A1}', "ṛ"),
        ('\u{09A2}', "ṛh"),
        ('\u{09AF}', "ẏ"),
    ],
    vowel_signs: &[
        ('\u{09BE}', "ā"),
        ('\u{09BF}', "i"),
        ('\u{09C0}', "ī"),
        ('\u{09C1}', "u"),
        ('\u{09C2}', "ū"),
        ('\u{09C3}', "r\u{0325}"),
        ('\u{09C4}', "r\u{0325}\u{0304}"),
        ('\u{09C7}', "ē"),
        ('\u{09C8}', "ai"),
        ('\u{09CB}', "ō"),
        ('\u{09CC}', "au"),
        ('\u{09E2}', "l\u{0325}"),
        ('\u{09E3}', "l\u{0325}\u{0304}"),
    ],
    modifiers: &[
        ('\u{0981}', "m\u{0310}"),
        ('\u{0982}', "ṁ"),
        ('\u{0983}', "ḥ"),
    ],
    signs: &[
        ('\u{09BD}', "’"),
        ('\u{09CE}', "t"),
    ],
    digits: &[
        ('\u{09E6}', '0'),
        ('\u{09E7}', '1'),
        ('\u{09E8}', '2'),
        ('\u{09E9}', '3'),
        ('\u{09EA}', '4'),
        ('\u{09EB}', '5'),
        ('\u{09EC}', '6'),
        ('\u{09ED}', '7'),
        ('\u{09EE}', '8'),
        ('\u{09EF}', '9'),
    ],
    known_unmapped: &[
        (0x0980, 0x0980),
        (0x09D7, 0x09D7),
        (0x09F2, 0x09F2),
        (0x09F3, 0x09F3),
        (0x09F4, 0x09F4),
        (0x09F5, 0x09F5),
        (0x09F6, 0x09F6),
        (0x09F7, 0x09F7),
        (0x09F8, 0x09F8),
        (0x09F9, 0x09F9),
        (0x09FA, 0x09FA),
        (0x09FB, 0x09FB),
        (0x09FC, 0x09FC),
        (0x09FD, 0x09FD),
        (0x09FE, 0x09FE),
    ],
};

pub(super) static ORIYA: RawScheme = RawScheme {
    script: ScriptTag::Oriya,
    block: (0x0B00, 0x0B7F),
    virama: '\u{0B4D}',
    nukta: Some('\u{0B3C}'),
    geminator: None,
    independent_vowels: &[
        ('\u{0B05}', "a"),
        ('\u{0B06}', "ā"),
        ('\u{0B07}', "i"),
        ('\u{0B08}', "ī"),
        ('\u{0B09}', "u"),
        ('\u{0B0A}', "ū"),
        ('\u{0B0B}', "r\u{0325}"),
        ('\u{0B0C}', "l\u{0325}"),
        ('\u{0B0F}', "ē"),
        ('\u{0B10}', "ai"),
        ('\u{0B13}', "ō"),
        ('\u{0B14}', "au"),
        ('\u{0B60}', "r\u{0325}\u{0304}"),
        ('\u{0B61}', "l\u{0325}\u{0304}"),
    ],
    consonants: &[
        ('\u{0B15}', "k"),
        ('\u{0B16}', "kh"),
        ('\u{0B17}', "g"),
        ('\u{0B18}', "gh"),
        ('\u{0B19}', "ṅ"),
        ('\u{0B1A}', "c"),
        ('\u{0B1B}', "ch"),
        ('\u{0B1C}', "j"),
        ('\u{0B1D}', "jh"),
        ('\u{0B1E}', "ñ"),
        ('\u{0B1F}', "ṭ"),
        ('\u{0B20}', "ṭh"),
        ('\u{0B21}', "ḍ"),
        ('\u{0B22}', "ḍh"),
        ('\u{0B23}', "ṇ"),
        ('\u{0B24}', "t"),
        ('\u{0B25}', "th"),
        ('\u{0B26}', "d"),
        ('\u{0B27}', "dh"),
        ('\u{0B28}', "n"),
        ('\u{0B2A}', "p"),
        ('\u{0B2B}', "ph"),
        ('\u{0B2C}', "b"),
        ('\u{0B2D}', "bh"),
        ('\u{0B2E}', "m"),
        ('\u{0B2F}', "y"),
        ('\u{0B30}', "r"),
        ('\u{0B32}', "l"),
        ('\u{0B33}', "ḷ"),
        ('\u{0B35}', "v"),
        ('\u{0B36}', "ś"),
        ('\u{0B37}', "ṣ"),
        ('\u{0B38}', "s"),
        ('\u{0B39}', "h"),
        ('\u{0B5F}', "ẏ"),
        ('\u{0B71}', "v"),
    ],
    nukta_consonants: &[
        ('\u{0B21}', "ṛ"),
        ('\u{0B22}', "ṛh"),
    ],
    vowel_signs: &[
        ('\u{0B3E}', "ā"),
        ('\u{0B3F}', "i"),
        ('\u{0B40}', "ī"),
        ('\u{0B41}', "u"),
        ('\u{0B42}', "ū"),
        ('\u{0B43}', "r\u{0325}"),
        ('\u{0B44}', "r\u{0325}\u{0304}"),
        ('\u{0B47}', "ē"),
        ('\u{0B48}', "ai"),
        ('\u{0B4B}', "ō"),
        ('\u{0B4C}', "au"),
        ('\u{0B62}', "l\u{0325}"),
        ('\u{0B63}', "l\u{0325}\u{0304}"),
    ],
    modifiers: &[
        ('\u{0B01}', "m\u{0310}"),
        ('\u{0B02}', "ṁ"),
        ('\u{0B03}', "ḥ"),
    ],
    signs: &[
        ('\u{0B3D}', "’"),
    ],
    digits: &[
        ('\u{0B66}', '0'),
        ('\u{0B67}', '1'),
        ('\u{0B68}', '2'),
        ('\u{0B69}', '3'),
        ('\u{0B6A}', '4'),
        ('\u{0B6B}', '5'),
        ('\u{0B6C}', '6'),
        ('\u{0B6D}', '7'),
        ('\u{0B6E}', '8'),
        ('\u{0B6F}', '9'),
    ],
    known_unmapped: &[
        (0x0B55, 0x0B55),
        (0x0B56, 0x0B56),
        (0x0B57, 0x0B57),
        (0x0B70, 0x0B70),
        (0x0B72, 0x0B72),
        (0x0B73, 0x0B73),
        (0x0B74, 0x0B74),
        (0x0B75, 0x0B75),
        (0x0B76, 0x0B76),
        (0x0B77, 0x0B77),
    ],
};

pub(super) static GUJARATI: RawScheme = RawScheme {
    script: ScriptTag::Gujarati,
    block: (0x0A80, 0x0AFF),
    virama: '\u{0ACD}',
    nukta: Some('\u{0ABC}'),
    geminator: None,
    independent_vowels: &[
        ('\u{0A85}', "a"),
        ('\u{0A86}', "ā"),
        ('\u{0A87}', "i"),
        ('\u{0A88}', "ī"),
        ('\u{0A89}', "u"),
        ('\u{0A8A}', "ū"),
        ('\u{0A8B}', "r\u{0325}"),
        ('\u{0A8C}', "l\u{0325}"),
        ('\u{0A8D}', "æ"),
        ('\u{0A8F}', "ē"),
        ('\u{0A90}', "ai"),
        ('\u{0A91}', "ô"),
        ('\u{0A93}', "ō"),
        ('\u{0A94}', "au"),
        ('\u{0AE0}', "r\u{0325}\u{0304}"),
        ('\u{0AE1}', "l\u{0325}\u{0304}"),
    ],
    consonants: &[
        ('\u{0A95}', "k"),
        ('\u{0A96}', "kh"),
        ('\u{0A97}', "g"),
        ('\u{0A98}', "gh"),
        ('\u{0A99}', "ṅ"),
        ('\u{0A9A}', "c"),
        ('\u{0A9B}', "ch"),
        ('\u{0A9C}', "j"),
        ('\u{0A9D}', "jh"),
        ('\u{0A9E}', "ñ"),
        ('\u{0A9F}', "ṭ"),
        ('\u{0AA0}', "ṭh"),
        ('\u{0AA1}', "ḍ"),
        ('\u{0AA2}', "ḍh"),
        ('\u{0AA3}', "ṇ"),
        ('\u{0AA4}', "t"),
        ('\u{0AA5}', "th"),
        ('\u{0AA6}', "d"),
        ('\u{0AA7}', "dh"),
        ('\u{0AA8}', "n"),
        ('\u{0AAA}', "p"),
        ('\u{0AAB}', "ph"),
        ('\u{0AAC}', "b"),
        ('\u{0AAD}', "bh"),
        ('\u{0AAE}', "m"),
        ('\u{0AAF}', "y"),
        ('\u{0AB0}', "r"),
        ('\u{0AB2}', "l"),
        ('\u{0AB3}', "ḷ"),
        ('\u{0AB5}', "v"),
        ('\u{0AB6}', "ś"),
        ('\u{0AB7}', "ṣ"),
        ('\u{0AB8}', "s"),
        ('\u{0AB9}', "h"),
        ('\u{0AF9}', "z\u{0308}"),
    ],
    nukta_consonants: &[
        ('\u{0A9C}', "z"),
        ('\u{0AAB}', "f"),
    ],
    vowel_signs: &[
        ('\u{0ABE}', "ā"),
        ('\u{0ABF}', "i"),
        ('\u{0AC0}', "ī"),
        ('\u{0AC1}', "u"),
        ('\u{0AC2}', "ū"),
        ('\u{0AC3}', "r\u{0325}"),
        ('\u{0AC4}', "r\u{0325}\u{0304}"),
        ('\u{0AC5}', "æ"),
        ('\u{0AC7}', "ē"),
        ('\u{0AC8}', "ai"),
        ('\u{0AC9}', "ô"),
        ('\u{0ACB}', "ō"),
        ('\u{0ACC}', "au"),
        ('\u{0AE2}', "l\u{0325}"),
        ('\u{0AE3}', "l\u{0325}\u{0304}"),
    ],
    modifiers: &[
        ('\u{0A81}', "m\u{0310}"),
        ('\u{0A82}', "ṁ"),
        ('\u{0A83}', "ḥ"),
    ],
    signs: &[
        ('\u{0ABD}', "’"),
        ('\u{0AD0}', "ōṁ"),
    ],
    digits: &[
        ('\u{0AE6}', '0'),
        ('\u{0AE7}', '1'),
        ('\u{0AE8}', '2'),
        ('\u{0AE9}', '3'),
        ('\u{0AEA}', '4'),
        ('\u{0AEB}', '5'),
        ('\u{0AEC}', '6'),
        ('\u{0AED}', '7'),
        ('\u{0AEE}', '8'),
        ('\u{0AEF}', '9'),
    ],
    known_unmapped: &[
        (0x0AF0, 0x0AF0),
        (0x0AF1, 0x0AF1),
        (0x0AFA, 0x0AFA),
        (0x0AFB, 0x0AFB),
        (0x0AFC, 0x0AFC),
        (0x0AFD, 0x0AFD),
        (0x0AFE, 0x0AFE),
        (0x0AFF, 0x0AFF),
    ],
};

pub(super) static GURMUKHI: RawScheme = RawScheme {
    script: ScriptTag::Gurmukhi,
    block: (0x0A00, 0x0A7F),
    virama: '\u{0A4D}',
    nukta: Some('\u{0A3C}'),
    geminator: Some('\u{0A71}'),
    independent_vowels: &[
        ('\u{0A05}', "a"),
        ('\u{0A06}', "ā"),
        ('\u{0A07}', "i"),
        ('\u{0A08}', "ī"),
        ('\u{0A09}', "u"),
        ('\u{0A0A}', "ū"),
        ('\u{0A0F}', "ē"),
        ('\u{0A10}', "ai"),
        ('\u{0A13}', "ō"),
        ('\u{0A14}', "au"),
    ],
    consonants: &[
        ('\u{0A15}', "k"),
        ('\u{0A16}', "kh"),
        ('\u{0A17}', "g"),
        ('\u{0A18}', "gh"),
        ('\u{0A19}', "ṅ"),
        ('\u{0A1A}', "c"),
        ('\u{0A1B}', "ch"),
        ('\u{0A1C}', "j"),
        ('\u{0A1D}', "jh"),
        ('\u{0A1E}', "ñ"),
        ('\u{0A1F}', "ṭ"),
        ('\u{0A20}', "ṭh"),
        ('\u{0A21}', "ḍ"),
        ('\u{0A22}', "ḍh"),
        ('\u{0A23}', "ṇ"),
        ('\u{0A24}', "t"),
        ('\u{0A25}', "th"),
        ('\u{0A26}', "d"),
        ('\u{0A27}', "dh"),
        ('\u{0A28}', "n"),
        ('\u{0A2A}', "p"),
        ('\u{0A2B}', "ph"),
        ('\u{0A2C}', "b"),
        ('\u{0A2D}', "bh"),
        ('\u{0A2E}', "m"),
        ('\u{0A2F}', "y"),
        ('\u{0A30}', "r"),
        ('\u{0A32}', "l"),
        ('\u{0A35}', "v"),
        ('\u{0A38}', "s"),
        ('\u{0A39}', "h"),
        ('\u{0A5C}', "ṛ"),
    ],
    nukta_consonants: &[
        ('\u{0A32}', "ḷ"),
        ('\u{0A38}', "ś"),
        ('\u{0A16}', "k\u{035F}h"),
        ('\u{0A17}', "ġ"),
        ('\u{0A1C}', "z"),
        ('\u{0A2B}', "f"),
    ],
    vowel_signs: &[
        ('\u{0A3E}', "ā"),
        ('\u{0A3F}', "i"),
        ('\u{0A40}', "ī"),
        ('\u{0A41}', "u"),
        ('\u{0A42}', "ū"),
        ('\u{0A47}', "ē"),
        ('\u{0A48}', "ai"),
        ('\u{0A4B}', "ō"),
        ('\u{0A4C}', "au"),
    ],
    modifiers: &[
        ('\u{0A01}', "m\u{0310}"),
        ('\u{0A02}', "ṁ"),
        ('\u{0A03}', "ḥ"),
        ('\u{0A70}', "ṁ"),
    ],
    signs: &[
        ('\u{0A74}', "ōṁ"),
    ],
    digits: &[
        ('\u{0A66}', '0'),
        ('\u{0A67}', '1'),
        ('\u{0A68}', '2'),
        ('\u{0A69}', '3'),
        ('\u{0A6A}', '4'),
        ('\u{0A6B}', '5'),
        ('\u{0A6C}', '6'),
        ('\u{0A6D}', '7'),
        ('\u{0A6E}', '8'),
        ('\u{0A6F}', '9'),
    ],
    known_unmapped: &[
        (0x0A51, 0x0A51),
        (0x0A72, 0x0A72),
        (0x0A73, 0x0A73),
        (0x0A75, 0x0A75),
        (0x0A76, 0x0A76),
    ],
};

pub(super) static SINHALA: RawScheme = RawScheme {
    script: ScriptTag::Sinhala,
    block: (0x0D80, 0x0DFF),
    virama: '\u{0DCA}',
    nukta: None,
    geminator: None,
    independent_vowels: &[
        ('\u{0D85}', "a"),
        ('\u{0D86}', "ā"),
        ('\u{0D87}', "æ"),
        ('\u{0D88}', "ǣ"),
        ('\u{0D89}', "i"),
        ('\u{0D8A}', "ī"),
        ('\u{0D8B}', "u"),
        ('\u{0D8C}', "ū"),
        ('\u{0D8D}', "r\u{0325}"),
        ('\u{0D8E}', "r\u{0325}\u{0304}"),
        ('\u{0D8F}', "l\u{0325}"),
        ('\u{0D90}', "l\u{0325}\u{0304}"),
        ('\u{0D91}', "e"),
        ('\u{0D92}', "ē"),
        ('\u{0D93}', "ai"),
        ('\u{0D94}', "o"),
        ('\u{0D95}', "ō"),
        ('\u{0D96}', "au"),
    ],
    consonants: &[
        ('\u{0D9A}', "k"),
        ('\u{0D9B}', "kh"),
        ('\u{0D9C}', "g"),
        ('\u{0D9D}', "gh"),
        ('\u{0D9E}', "ṅ"),
        ('\u{0D9F}', "n\u{0306}g"),
        ('\u{0DA0}', "c"),
        ('\u{0DA1}', "ch"),
        ('\u{0DA2}', "j"),
        ('\u{0DA3}', "jh"),
        ('\u{0DA4}', "ñ"),
        ('\u{0DA5}', "jñ"),
        ('\u{0DA6}', "n\u{0306}j"),
        ('\u{0DA7}', "ṭ"),
        ('\u{0DA8}', "ṭh"),
        ('\u{0DA9}', "ḍ"),
        ('\u{0DAA}', "ḍh"),
        ('\u{0DAB}', "ṇ"),
        ('\u{0DAC}', "n\u{0306}ḍ"),
        ('\u{0DAD}', "t"),
        ('\u{0DAE}', "th"),
        ('\u{0DAF}', "d"),
        ('\u{0DB0}', "dh"),
        ('\u{0DB1}', "n"),
        ('\u{0DB3}', "n\u{0306}d"),
        ('\u{0DB4}', "p"),
        ('\u{0DB5}', "ph"),
        ('\u{0DB6}', "b"),
        ('\u{0DB7}', "bh"),
        ('\u{0DB8}', "m"),
        ('\u{0DB9}', "m\u{0306}b"),
        ('\u{0DBA}', "y"),
        ('\u{0DBB}', "r"),
        ('\u{0DBD}', "l"),
        ('\u{0DC0}', "v"),
        ('\u{0DC1}', "ś"),
        ('\u{0DC2}', "ṣ"),
        ('\u{0DC3}', "s"),
        ('\u{0DC4}', "h"),
        ('\u{0DC5}', "ḷ"),
        ('\u{0DC6}', "f"),
    ],
    nukta_consonants: &[
    ],
    vowel_signs: &[
        ('\u{0DCF}', "ā"),
        ('\u{0DD0}', "æ"),
        ('\u{0DD1}', "ǣ"),
        ('\u{0DD2}', "i"),
        ('\u{0DD3}', "ī"),
        ('\u{0DD4}', "u"),
        ('\u{0DD6}', "ū"),
        ('\u{0DD8}', "r\u{0325}"),
        ('\u{0DD9}', "e"),
        ('\u{0DDA}', "ē"),
        ('\u{0DDB}', "ai"),
        ('\u{0DDC}', "o"),
        ('\u{0DDD}', "ō"),
        ('\u{0DDE}', "au"),
        ('\u{0DDF}', "l\u{0325}"),
        ('\u{0DF2}', "r\u{0325}\u{0304}"),
        ('\u{0DF3}', "l\u{0325}\u{0304}"),
    ],
    modifiers: &[
        ('\u{0D81}', "m\u{0310}"),
        ('\u{0D82}', "ṁ"),
        ('\u{0D83}', "ḥ"),
    ],
    signs: &[
    ],
    digits: &[
        ('\u{0DE6}', '0'),
        ('\u{0DE7}', '1'),
        ('\u{0DE8}', '2'),
        ('\u{0DE9}', '3'),
        ('\u{0DEA}', '4'),
        ('\u{0DEB}', '5'),
        ('\u{0DEC}', '6'),
        ('\u{0DED}', '7'),
        ('\u{0DEE}', '8'),
        ('\u{0DEF}', '9'),
    ],
    known_unmapped: &[
        (0x0DF4, 0x0DF4),
        (0x111E0, 0x111FF),
    ],
};
