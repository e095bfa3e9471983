//! English verb inflection.
//!
//! Forward rules produce the regular inflections of a lemma; the reverse
//! direction recovers `(lemma, feature)` analyses from an inflected token,
//! consulting the lexicon's irregular index first.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::lexicon::{Lexicon, NounPhrase};

/// Grammatical number, which drives auxiliary agreement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Number {
    Singular,
    Plural,
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Number::Singular => "singular",
            Number::Plural => "plural",
        })
    }
}

/// The five verb forms a lemma inflects into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MorphFeature {
    Base,
    ThirdSingular,
    Past,
    PastParticiple,
    PresentParticiple,
}

impl MorphFeature {
    pub const ALL: [MorphFeature; 5] = [
        MorphFeature::Base,
        MorphFeature::ThirdSingular,
        MorphFeature::Past,
        MorphFeature::PastParticiple,
        MorphFeature::PresentParticiple,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MorphFeature::Base => "base",
            MorphFeature::ThirdSingular => "third_singular",
            MorphFeature::Past => "past",
            MorphFeature::PastParticiple => "past_participle",
            MorphFeature::PresentParticiple => "present_participle",
        }
    }
}

impl fmt::Display for MorphFeature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphError {
    #[error("cannot inflect an empty lemma")]
    EmptyLemma,
}

fn is_vowel(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'i' | 'o' | 'u')
}

fn consonant_y(word: &str) -> bool {
    let mut rev = word.chars().rev();
    match (rev.next(), rev.next()) {
        (Some('y'), Some(prev)) => !is_vowel(prev),
        _ => false,
    }
}

fn sibilant_end(word: &str) -> bool {
    ["s", "x", "z", "ch", "sh"]
        .iter()
        .any(|s| word.ends_with(s))
}

/// Applies the regular spelling rules for `feature` to `lemma`.
pub fn regular_inflect(lemma: &str, feature: MorphFeature) -> Result<String, MorphError> {
    if lemma.is_empty() {
        return Err(MorphError::EmptyLemma);
    }
    let stem_y = || &lemma[..lemma.len() - 1];
    Ok(match feature {
        MorphFeature::Base => lemma.to_string(),
        MorphFeature::Past | MorphFeature::PastParticiple => {
            if lemma.ends_with('e') {
                format!("{lemma}d")
            } else if consonant_y(lemma) {
                format!("{}ied", stem_y())
            } else {
                format!("{lemma}ed")
            }
        }
        MorphFeature::PresentParticiple => {
            if lemma.ends_with('e') && !lemma.ends_with("ee") && lemma.len() > 1 {
                format!("{}ing", &lemma[..lemma.len() - 1])
            } else {
                format!("{lemma}ing")
            }
        }
        MorphFeature::ThirdSingular => {
            if sibilant_end(lemma) {
                format!("{lemma}es")
            } else if consonant_y(lemma) {
                format!("{}ies", stem_y())
            } else {
                format!("{lemma}s")
            }
        }
    })
}

/// Whether a suffix-stripped stem most likely lost a final "e".
fn wants_final_e(stem: &str) -> bool {
    let chars: Vec<char> = stem.chars().collect();
    let n = chars.len();
    if n == 0 {
        return false;
    }
    let last = chars[n - 1];
    if matches!(last, 'c' | 'v' | 'u') || (last == 'z' && (n < 2 || chars[n - 2] != 'z')) {
        return true;
    }
    if is_vowel(last) || matches!(last, 'w' | 'x' | 'y') || n < 2 || !is_vowel(chars[n - 2]) {
        return false;
    }
    // single vowel between consonants, and the only vowel group in the stem
    if n >= 3 && is_vowel(chars[n - 3]) {
        return false;
    }
    let groups = chars
        .iter()
        .enumerate()
        .filter(|&(i, &c)| is_vowel(c) && (i == 0 || !is_vowel(chars[i - 1])))
        .count();
    groups == 1
}

fn plausible_stem(stem: &str) -> bool {
    stem.chars().count() >= 2
        && stem.chars().all(|c| c.is_ascii_lowercase())
        && stem.chars().any(|c| is_vowel(c) || c == 'y')
}

fn e_candidates(stem: &str) -> Vec<String> {
    // "agre" + e, "us" + e
    if stem.ends_with('e') || wants_final_e(stem) {
        vec![format!("{stem}e"), stem.to_string()]
    } else {
        vec![stem.to_string(), format!("{stem}e")]
    }
}

fn first_regenerating(
    candidates: Vec<String>,
    feature: MorphFeature,
    token: &str,
) -> Option<String> {
    candidates.into_iter().find(|lemma| {
        plausible_stem(lemma) && regular_inflect(lemma, feature).as_deref() == Ok(token)
    })
}

/// Regular verbs whose lemma ends in "ee".
const EE_VERBS: &[&str] = &[
    "agree",
    "disagree",
    "free",
    "guarantee",
    "decree",
    "referee",
    "flee",
];

/// Reverse application of the regular rules: at most one lemma per
/// feature, each regenerating `token` exactly. Base is not included.
pub fn regular_analyses(token: &str) -> Vec<(String, MorphFeature)> {
    let mut out = Vec::new();
    if let Some(stem) = token.strip_suffix("ed") {
        let candidates = match token.strip_suffix("ied") {
            Some(s) => vec![format!("{s}y")],
            // "need", "feed", "speed" are lemmas, not "nee" + "d"
            None if token.ends_with("eed") => EE_VERBS
                .iter()
                .filter(|v| format!("{v}d") == token)
                .map(|v| v.to_string())
                .collect(),
            None => e_candidates(stem),
        };
        if let Some(lemma) = first_regenerating(candidates, MorphFeature::Past, token) {
            out.push((lemma.clone(), MorphFeature::Past));
            out.push((lemma, MorphFeature::PastParticiple));
        }
    }
    if let Some(stem) = token.strip_suffix("ing") {
        if let Some(lemma) =
            first_regenerating(e_candidates(stem), MorphFeature::PresentParticiple, token)
        {
            out.push((lemma, MorphFeature::PresentParticiple));
        }
    }
    if !token.ends_with("ss") {
        if let Some(stem) = token.strip_suffix('s') {
            let mut candidates = Vec::new();
            if let Some(s) = token.strip_suffix("ies") {
                candidates.push(format!("{s}y"));
            }
            match token.strip_suffix("es") {
                Some(s) if sibilant_end(s) && !wants_final_e(s) => {
                    candidates.push(s.to_string());
                    candidates.push(stem.to_string());
                }
                Some(s) if sibilant_end(s) => {
                    candidates.push(stem.to_string());
                    candidates.push(s.to_string());
                }
                _ => candidates.push(stem.to_string()),
            }
            if let Some(lemma) = first_regenerating(candidates, MorphFeature::ThirdSingular, token)
            {
                out.push((lemma, MorphFeature::ThirdSingular));
            }
        }
    }
    out
}

/// Where an analysis of a verb token came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnalysisSource {
    Lexicon,
    Regular,
    /// Unknown token taken as a bare base form.
    Fallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Analysis {
    pub source: AnalysisSource,
    pub lemma: String,
    pub feature: MorphFeature,
}

/// All analyses of `token`. A form listed in the lexicon is analysed by its
/// entries alone. Otherwise the regular rules are reversed, skipping lemmas
/// that have an entry (they inflect by the entry, not by rule), and the
/// token itself is always a candidate base form.
pub fn analyze_verb_token(lexicon: &Lexicon, token: &str) -> Vec<Analysis> {
    let token = token.to_lowercase();
    let mut out: Vec<Analysis> = lexicon
        .inflection_candidates(&token)
        .map(|(lemma, feature)| Analysis {
            source: AnalysisSource::Lexicon,
            lemma: lemma.to_string(),
            feature,
        })
        .collect();
    if !out.is_empty() {
        return out;
    }
    for (lemma, feature) in regular_analyses(&token) {
        if lexicon.verb(&lemma).is_some() {
            continue;
        }
        out.push(Analysis {
            source: AnalysisSource::Regular,
            lemma,
            feature,
        });
    }
    if !token.is_empty() {
        out.push(Analysis {
            source: AnalysisSource::Fallback,
            lemma: token,
            feature: MorphFeature::Base,
        });
    }
    out
}

/// Candidate `(lemma, feature)` analyses of a verb token.
pub fn classify_verb_token(lexicon: &Lexicon, token: &str) -> BTreeSet<(String, MorphFeature)> {
    analyze_verb_token(lexicon, token)
        .into_iter()
        .map(|a| (a.lemma, a.feature))
        .collect()
}

/// Past participle of `lemma`: the lexicon entry when there is one,
/// the regular "-ed" form otherwise.
pub fn participle_of(lexicon: &Lexicon, lemma: &str) -> String {
    match lexicon.verb(lemma) {
        Some(entry) => entry.past_participle.clone(),
        None => regular_inflect(lemma, MorphFeature::PastParticiple)
            .unwrap_or_else(|_| lemma.to_string()),
    }
}

pub fn np_number(np: &NounPhrase) -> Number {
    np.number
}
