use std::collections::HashMap;
use std::sync::OnceLock;

use unicode_normalization::char::decompose_canonical;

use super::tables;
use crate::error::{Error, Result};
use crate::script::ScriptTag;

/// Static form of a scheme, as frozen in `tables.rs`.
pub(super) struct RawScheme {
    pub script: ScriptTag,
    pub block: (u32, u32),
    pub virama: char,
    pub nukta: Option<char>,
    pub geminator: Option<char>,
    pub independent_vowels: &'static [(char, &'static str)],
    pub consonants: &'static [(char, &'static str)],
    pub nukta_consonants: &'static [(char, &'static str)],
    pub vowel_signs: &'static [(char, &'static str)],
    pub modifiers: &'static [(char, &'static str)],
    pub signs: &'static [(char, &'static str)],
    pub digits: &'static [(char, char)],
    pub known_unmapped: &'static [(u32, u32)],
}

/// What a codepoint does inside its scheme.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    IndependentVowel(&'static str),
    Consonant(&'static str),
    VowelSign(&'static str),
    Virama,
    Nukta,
    /// Anusvara, visarga, candrabindu and similar marks appended to the syllable.
    Modifier(&'static str),
    /// Stand-alone signs without vowel behaviour (avagraha, om, khanda ta).
    Sign(&'static str),
    Digit(char),
    /// Gurmukhi addak: doubles the following consonant.
    Geminator,
}

/// ISO 15919 romanization scheme for one Brahmic script. Immutable once loaded.
#[derive(Debug)]
pub struct TransliterationScheme {
    script: ScriptTag,
    block: (u32, u32),
    virama: char,
    nukta: Option<char>,
    geminator: Option<char>,
    roles: HashMap<char, Role>,
    nukta_consonants: HashMap<char, &'static str>,
    known_unmapped: &'static [(u32, u32)],
}

impl TransliterationScheme {
    fn build(raw: &'static RawScheme) -> Self {
        let mut roles = HashMap::new();
        let mut put = |c: char, r: Role| {
            let prev = roles.insert(c, r);
            debug_assert!(prev.is_none(), "duplicate key {c:?}");
        };
        raw.independent_vowels.iter().for_each(|&(c, v)| put(c, Role::IndependentVowel(v)));
        raw.consonants.iter().for_each(|&(c, v)| put(c, Role::Consonant(v)));
        raw.vowel_signs.iter().for_each(|&(c, v)| put(c, Role::VowelSign(v)));
        raw.modifiers.iter().for_each(|&(c, v)| put(c, Role::Modifier(v)));
        raw.signs.iter().for_each(|&(c, v)| put(c, Role::Sign(v)));
        raw.digits.iter().for_each(|&(c, d)| put(c, Role::Digit(d)));
        put(raw.virama, Role::Virama);
        if let Some(n) = raw.nukta {
            put(n, Role::Nukta);
        }
        if let Some(g) = raw.geminator {
            put(g, Role::Geminator);
        }
        TransliterationScheme {
            script: raw.script,
            block: raw.block,
            virama: raw.virama,
            nukta: raw.nukta,
            geminator: raw.geminator,
            roles,
            nukta_consonants: raw.nukta_consonants.iter().copied().collect(),
            known_unmapped: raw.known_unmapped,
        }
    }

    pub fn script(&self) -> ScriptTag {
        self.script
    }

    pub fn virama(&self) -> char {
        self.virama
    }

    pub fn nukta(&self) -> Option<char> {
        self.nukta
    }

    pub fn geminator(&self) -> Option<char> {
        self.geminator
    }

    /// Main Unicode block of the script (inclusive bounds).
    pub fn block(&self) -> (u32, u32) {
        self.block
    }

    pub fn role(&self, c: char) -> Option<Role> {
        self.roles.get(&c).copied()
    }

    /// Romanization of `base` followed by a nukta, when one is defined.
    pub fn nukta_consonant(&self, base: char) -> Option<&'static str> {
        self.nukta_consonants.get(&base).copied()
    }

    fn entries(&self, pick: fn(Role) -> Option<&'static str>) -> Vec<(char, &'static str)> {
        let mut v: Vec<_> = self
            .roles
            .iter()
            .filter_map(|(c, r)| pick(*r).map(|s| (*c, s)))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn independent_vowels(&self) -> Vec<(char, &'static str)> {
        self.entries(|r| match r {
            Role::IndependentVowel(s) => Some(s),
            _ => None,
        })
    }

    pub fn consonants(&self) -> Vec<(char, &'static str)> {
        self.entries(|r| match r {
            Role::Consonant(s) => Some(s),
            _ => None,
        })
    }

    pub fn vowel_signs(&self) -> Vec<(char, &'static str)> {
        self.entries(|r| match r {
            Role::VowelSign(s) => Some(s),
            _ => None,
        })
    }

    pub fn modifiers(&self) -> Vec<(char, &'static str)> {
        self.entries(|r| match r {
            Role::Modifier(s) => Some(s),
            _ => None,
        })
    }

    pub fn signs(&self) -> Vec<(char, &'static str)> {
        self.entries(|r| match r {
            Role::Sign(s) => Some(s),
            _ => None,
        })
    }

    pub fn digits(&self) -> Vec<(char, char)> {
        let mut v: Vec<_> = self
            .roles
            .iter()
            .filter_map(|(c, r)| match r {
                Role::Digit(d) => Some((*c, *d)),
                _ => None,
            })
            .collect();
        v.sort_unstable();
        v
    }

    pub fn nukta_consonants(&self) -> Vec<(char, &'static str)> {
        let mut v: Vec<_> = self.nukta_consonants.iter().map(|(c, s)| (*c, *s)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_known_unmapped(&self, c: char) -> bool {
        let cp = c as u32;
        self.known_unmapped.iter().any(|&(lo, hi)| lo <= cp && cp <= hi)
    }

    /// True when the scheme produces output for `c`, either directly or, for a
    /// precomposed nukta letter, through its canonical decomposition.
    pub fn is_mapped(&self, c: char) -> bool {
        if self.roles.contains_key(&c) {
            return true;
        }
        let mut parts = Vec::with_capacity(2);
        decompose_canonical(c, |d| parts.push(d));
        matches!(parts.as_slice(), [base, n] if Some(*n) == self.nukta && self.nukta_consonants.contains_key(base))
    }
}

static SCHEMES: OnceLock<[TransliterationScheme; 6]> = OnceLock::new();

fn schemes() -> &'static [TransliterationScheme; 6] {
    SCHEMES.get_or_init(|| {
        [
            TransliterationScheme::build(&tables::DEVANAGARI),
            TransliterationScheme::build(&tables::BENGALI),
            TransliterationScheme::build(&tables::ORIYA),
            TransliterationScheme::build(&tables::GUJARATI),
            TransliterationScheme::build(&tables::GURMUKHI),
            TransliterationScheme::build(&tables::SINHALA),
        ]
    })
}

/// Built-in ISO 15919 scheme for a Brahmic script.
pub fn load_scheme(script: ScriptTag) -> Result<&'static TransliterationScheme> {
    if !script.is_brahmic() {
        return Err(Error::UnsupportedScript(script));
    }
    Ok(&schemes()[script as usize])
}
