//! Pronoun group, article set and verb lexicon.
//!
//! The thirteen personal pronouns form a cyclic group with the bare noun as
//! identity: `I = a^1 ... they = a^6`, their objective forms carry the
//! negated exponent, and `noun = a^0`. Inversion swaps case.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::morphology::{regular_inflect, MorphFeature, Number};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseRole {
    Subjective,
    Objective,
    Neutral,
}

impl fmt::Display for CaseRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseRole::Subjective => "subjective",
            CaseRole::Objective => "objective",
            CaseRole::Neutral => "neutral",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Person {
    First,
    Second,
    Third,
}

impl fmt::Display for Person {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Person::First => "first",
            Person::Second => "second",
            Person::Third => "third",
        })
    }
}

/// One element `a^exponent` of the pronoun group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PronounElement {
    pub surface: &'static str,
    pub exponent: i8,
    pub case_role: CaseRole,
    pub person: Person,
    pub number: Number,
}

const fn element(
    surface: &'static str,
    exponent: i8,
    case_role: CaseRole,
    person: Person,
    number: Number,
) -> PronounElement {
    PronounElement {
        surface,
        exponent,
        case_role,
        person,
        number,
    }
}

use CaseRole::*;
use Number::*;
use Person::*;

/// The group table, in column order.
pub const PRONOUN_TABLE: [PronounElement; 13] = [
    element("i", 1, Subjective, First, Singular),
    element("we", 2, Subjective, First, Plural),
    element("you", 3, Subjective, Second, Plural),
    element("he", 4, Subjective, Third, Singular),
    element("she", 5, Subjective, Third, Singular),
    element("they", 6, Subjective, Third, Plural),
    element("them", -6, Objective, Third, Plural),
    element("her", -5, Objective, Third, Singular),
    element("him", -4, Objective, Third, Singular),
    element("you", -3, Objective, Second, Plural),
    element("us", -2, Objective, First, Plural),
    element("me", -1, Objective, First, Singular),
    element("noun", 0, Neutral, Third, Singular),
];

/// The identity element `a^0`, standing for any noun.
pub const NOUN_ELEMENT: PronounElement = PRONOUN_TABLE[12];

impl PronounElement {
    pub fn is_identity(&self) -> bool {
        self.exponent == 0
    }

    /// Surface as written in running text ("I" is always capitalised).
    pub fn display_surface(&self) -> &'static str {
        if self.surface == "i" {
            "I"
        } else {
            self.surface
        }
    }

    /// The element of the same person and number in the given case.
    pub fn in_case(&self, role: CaseRole) -> PronounElement {
        let magnitude = self.exponent.abs();
        let exponent = match role {
            Subjective => magnitude,
            Objective => -magnitude,
            Neutral => self.exponent,
        };
        pronoun_by_exponent(exponent).unwrap_or(*self)
    }
}

impl fmt::Display for PronounElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (a^{})", self.surface, self.exponent)
    }
}

pub fn pronoun_by_exponent(exponent: i8) -> Option<PronounElement> {
    PRONOUN_TABLE
        .iter()
        .copied()
        .find(|p| p.exponent == exponent)
}

/// Looks a token up among the twelve pronouns. An ambiguous surface ("you")
/// resolves to its subjective element.
pub fn lookup_pronoun(token: &str) -> Option<PronounElement> {
    let token = token.to_lowercase();
    PRONOUN_TABLE
        .iter()
        .filter(|p| !p.is_identity())
        .find(|p| p.surface == token)
        .copied()
}

/// Like [`lookup_pronoun`], preferring the element with the given case role
/// when the surface has more than one.
pub fn lookup_pronoun_as(token: &str, role: CaseRole) -> Option<PronounElement> {
    let token = token.to_lowercase();
    let mut hits = PRONOUN_TABLE
        .iter()
        .filter(|p| !p.is_identity() && p.surface == token);
    let first = hits.next().copied()?;
    if first.case_role == role {
        return Some(first);
    }
    Some(hits.find(|p| p.case_role == role).copied().unwrap_or(first))
}

/// `f(a^i) = a^-i`.
pub fn invert_pronoun(p: PronounElement) -> PronounElement {
    pronoun_by_exponent(-p.exponent).expect("pronoun table is closed under negation")
}

/// Writes the pronoun table as `surface<TAB>exponent<TAB>case<TAB>person<TAB>number` rows.
pub fn dump_pronouns<W: Write>(mut out: W) -> io::Result<()> {
    writeln!(out, "# surface\texponent\tcase_role\tperson\tnumber")?;
    for p in PRONOUN_TABLE.iter() {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            p.surface, p.exponent, p.case_role, p.person, p.number
        )?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NpKind {
    Pronoun(PronounElement),
    Nominal,
}

/// A subject or object: a single pronoun, or an optional determiner
/// followed by one or more noun tokens.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NounPhrase {
    pub kind: NpKind,
    pub determiner: Option<String>,
    pub head_tokens: Vec<String>,
    pub number: Number,
}

impl NounPhrase {
    pub fn pronoun(p: PronounElement) -> Self {
        NounPhrase {
            kind: NpKind::Pronoun(p),
            determiner: None,
            head_tokens: vec![p.surface.to_string()],
            number: p.number,
        }
    }

    pub fn as_pronoun(&self) -> Option<PronounElement> {
        match self.kind {
            NpKind::Pronoun(p) => Some(p),
            NpKind::Nominal => None,
        }
    }

    pub fn is_nominal(&self) -> bool {
        matches!(self.kind, NpKind::Nominal)
    }

    /// Group exponent; nominal phrases are the identity.
    pub fn exponent(&self) -> i8 {
        self.as_pronoun().map_or(0, |p| p.exponent)
    }

    /// Determiner followed by head tokens.
    pub fn tokens(&self) -> Vec<&str> {
        self.determiner
            .iter()
            .chain(self.head_tokens.iter())
            .map(String::as_str)
            .collect()
    }

    pub fn text(&self) -> String {
        self.tokens().join(" ")
    }
}

impl fmt::Display for NounPhrase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text())
    }
}

/// Joins an optional article with noun tokens into a nominal phrase.
pub fn compound_np(
    lexicon: &Lexicon,
    determiner: Option<&str>,
    head: &[&str],
    number: Number,
) -> Result<NounPhrase, LexiconError> {
    if head.is_empty() {
        return Err(LexiconError::EmptyNounPhrase);
    }
    let determiner = match determiner {
        Some(d) if lexicon.is_article(d) => Some(d.to_lowercase()),
        Some(d) => return Err(LexiconError::NotAnArticle(d.to_string())),
        None => None,
    };
    Ok(NounPhrase {
        kind: NpKind::Nominal,
        determiner,
        head_tokens: head.iter().map(|t| t.to_string()).collect(),
        number,
    })
}

/// Pronouns invert by case; nominal phrases are self-inverse.
pub fn np_invert(np: &NounPhrase) -> NounPhrase {
    match np.kind {
        NpKind::Pronoun(p) => NounPhrase::pronoun(invert_pronoun(p)),
        NpKind::Nominal => np.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbLemmaEntry {
    pub lemma: String,
    pub past: String,
    pub past_participle: String,
    pub present_participle: String,
    pub third_singular: String,
    pub regular: bool,
}

impl VerbLemmaEntry {
    pub fn form(&self, feature: MorphFeature) -> &str {
        match feature {
            MorphFeature::Base => &self.lemma,
            MorphFeature::ThirdSingular => &self.third_singular,
            MorphFeature::Past => &self.past,
            MorphFeature::PastParticiple => &self.past_participle,
            MorphFeature::PresentParticiple => &self.present_participle,
        }
    }

    fn compute_regular(&mut self) {
        self.regular = MorphFeature::ALL
            .iter()
            .all(|&f| regular_inflect(&self.lemma, f).ok().as_deref() == Some(self.form(f)));
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("failed to read lexicon: {0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: duplicate lemma `{lemma}`")]
    DuplicateLemma { line: usize, lemma: String },
    #[error("`{0}` is not an article")]
    NotAnArticle(String),
    #[error("noun phrase has no head tokens")]
    EmptyNounPhrase,
}

const DEFAULT_ARTICLES: &[&str] = &[
    "the", "a", "an", "this", "that", "these", "those", "my", "our", "your", "his", "her", "their",
    "its",
];

const DEFAULT_INVARIANT_NOUNS: &[&str] = &[
    "news",
    "series",
    "species",
    "means",
    "physics",
    "mathematics",
    "economics",
    "bus",
    "glass",
    "class",
    "boss",
    "grass",
    "dress",
    "address",
    "business",
    "process",
    "lens",
    "chaos",
    "bias",
    "gas",
    "atlas",
    "canvas",
    "census",
    "virus",
    "status",
    "campus",
    "bonus",
    "thesis",
    "analysis",
    "crisis",
    "basis",
    "kiss",
    "mess",
    "chess",
    "princess",
    "actress",
    "witness",
    "success",
    "access",
    "progress",
    "congress",
    "compass",
    "fortress",
];

const BUILTIN_VERBS: &str = include_str!("../data/verbs.tsv");

/// Immutable after construction; share freely across threads.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    verbs: BTreeMap<String, VerbLemmaEntry>,
    inflection_index: HashMap<String, BTreeSet<(String, MorphFeature)>>,
    articles: BTreeSet<String>,
    invariant_nouns: BTreeSet<String>,
}

impl Lexicon {
    /// No verbs; default articles and invariant nouns.
    pub fn empty() -> Self {
        Lexicon {
            articles: DEFAULT_ARTICLES.iter().map(|s| s.to_string()).collect(),
            invariant_nouns: DEFAULT_INVARIANT_NOUNS
                .iter()
                .map(|s| s.to_string())
                .collect(),
            ..Default::default()
        }
    }

    /// The shipped verb table.
    pub fn builtin() -> Self {
        Self::load(BUILTIN_VERBS.as_bytes()).expect("built-in verb table is well formed")
    }

    /// Reads a verb table. Rows are
    /// `lemma<TAB>past<TAB>past_participle<TAB>present_participle<TAB>third_singular`;
    /// `@article<TAB>word` and `@invariant<TAB>noun` extend the article set and
    /// the invariant-noun list. `#` starts a comment line.
    pub fn load<R: BufRead>(verb_source: R) -> Result<Self, LexiconError> {
        let mut lexicon = Self::empty();
        for (idx, line) in verb_source.lines().enumerate() {
            let line_no = idx + 1;
            let line = line?;
            let line = line.trim_end_matches('\r');
            if line.trim().is_empty() || line.trim_start().starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
            let malformed = |reason: String| LexiconError::Malformed {
                line: line_no,
                reason,
            };
            if let Some(directive) = fields[0].strip_prefix('@') {
                if fields.len() != 2 || !is_word(fields[1]) {
                    return Err(malformed(format!(
                        "directive `@{directive}` takes exactly one word"
                    )));
                }
                let word = fields[1].to_lowercase();
                match directive {
                    "article" => lexicon.articles.insert(word),
                    "invariant" => lexicon.invariant_nouns.insert(word),
                    other => return Err(malformed(format!("unknown directive `@{other}`"))),
                };
                continue;
            }
            if fields.len() != 5 {
                return Err(malformed(format!(
                    "expected 5 tab-separated fields, found {}",
                    fields.len()
                )));
            }
            if let Some(bad) = fields.iter().find(|f| !is_word(f)) {
                return Err(malformed(format!("`{bad}` is not a word")));
            }
            let fields: Vec<String> = fields.iter().map(|f| f.to_lowercase()).collect();
            let mut entry = VerbLemmaEntry {
                lemma: fields[0].clone(),
                past: fields[1].clone(),
                past_participle: fields[2].clone(),
                present_participle: fields[3].clone(),
                third_singular: fields[4].clone(),
                regular: false,
            };
            entry.compute_regular();
            if lexicon.verbs.contains_key(&entry.lemma) {
                return Err(LexiconError::DuplicateLemma {
                    line: line_no,
                    lemma: entry.lemma,
                });
            }
            lexicon.insert_verb(entry);
        }
        Ok(lexicon)
    }

    fn insert_verb(&mut self, entry: VerbLemmaEntry) {
        for feature in MorphFeature::ALL {
            self.inflection_index
                .entry(entry.form(feature).to_string())
                .or_default()
                .insert((entry.lemma.clone(), feature));
        }
        self.verbs.insert(entry.lemma.clone(), entry);
    }

    pub fn pronouns(&self) -> &'static [PronounElement; 13] {
        &PRONOUN_TABLE
    }

    pub fn verb(&self, lemma: &str) -> Option<&VerbLemmaEntry> {
        self.verbs.get(lemma)
    }

    pub fn verbs(&self) -> impl Iterator<Item = &VerbLemmaEntry> {
        self.verbs.values()
    }

    pub fn verb_count(&self) -> usize {
        self.verbs.len()
    }

    /// Indexed analyses of an inflected (or base) form.
    pub fn inflection_candidates<'a>(
        &'a self,
        form: &str,
    ) -> impl Iterator<Item = (&'a str, MorphFeature)> + 'a {
        self.inflection_index
            .get(form)
            .into_iter()
            .flat_map(|set| set.iter().map(|(l, f)| (l.as_str(), *f)))
    }

    pub fn is_article(&self, token: &str) -> bool {
        self.articles.contains(&token.to_lowercase())
    }

    pub fn articles(&self) -> impl Iterator<Item = &str> {
        self.articles.iter().map(String::as_str)
    }

    /// Plural iff the head ends in "s" and is not a listed invariant noun.
    pub fn noun_number(&self, head: &str) -> Number {
        let head = head.to_lowercase();
        if head.ends_with('s') && !self.invariant_nouns.contains(&head) {
            Plural
        } else {
            Singular
        }
    }
}

fn is_word(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_alphabetic() || c == '-' || c == '\'')
}
