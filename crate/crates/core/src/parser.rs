//! Tokenization and SVO clause parsing.
//!
//! A clause is `subject-NP verb-group object-NP [.!]`. The verb group is
//! classified into one of twelve tense/form cells `v_ij`:
//!
//! | cell | pattern                               |
//! |------|---------------------------------------|
//! | v11  | base / 3sg                            |
//! | v12  | am\|is\|are + V-ing                   |
//! | v13  | have\|has + V-en                      |
//! | v14  | have\|has + been + V-ing              |
//! | v21  | past                                  |
//! | v22  | was\|were + V-ing                     |
//! | v23  | had + V-en                            |
//! | v24  | had + been + V-ing                    |
//! | v31  | shall\|will + base                    |
//! | v32  | shall\|will + be + V-ing              |
//! | v33  | shall\|will + have + V-en             |
//! | v34  | shall\|will + have + been + V-ing     |

use std::fmt;

use thiserror::Error;

use crate::lexicon::{compound_np, lookup_pronoun_as, CaseRole, Lexicon, NounPhrase};
use crate::morphology::{analyze_verb_token, AnalysisSource, MorphFeature, Number};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    pub lowered: String,
    pub position: usize,
    pub sentence_initial: bool,
}

impl Token {
    fn new(surface: &str, position: usize) -> Self {
        Token {
            surface: surface.to_string(),
            lowered: surface.to_lowercase(),
            position,
            sentence_initial: position == 0,
        }
    }

    pub fn is_terminal_punct(&self) -> bool {
        !self.surface.is_empty() && self.surface.chars().all(is_terminal)
    }
}

fn is_terminal(c: char) -> bool {
    matches!(c, '.' | '!' | '?')
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("no noun phrase at token {position}")]
    NoNounPhrase { position: usize },
    #[error("unknown verb form at token {position}")]
    UnknownVerbForm { position: usize },
    #[error("transitive verb has no object (token {position})")]
    MissingObject { position: usize },
    #[error("not a simple affirmative SVO clause (token {position})")]
    NotSvo { position: usize },
}

impl ParseError {
    pub fn position(&self) -> Option<usize> {
        match *self {
            ParseError::Empty => None,
            ParseError::NoNounPhrase { position }
            | ParseError::UnknownVerbForm { position }
            | ParseError::MissingObject { position }
            | ParseError::NotSvo { position } => Some(position),
        }
    }
}

/// Splits on whitespace and detaches trailing `.`, `!` or `?`.
pub fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let words: Vec<&str> = text.split_whitespace().collect();
    let Some((&last, init)) = words.split_last() else {
        return Err(ParseError::Empty);
    };
    let mut pieces: Vec<&str> = init.to_vec();
    let word_end = last.trim_end_matches(is_terminal);
    if word_end.is_empty() || word_end.len() == last.len() {
        pieces.push(last);
    } else {
        pieces.push(word_end);
        pieces.push(&last[word_end.len()..]);
    }
    Ok(pieces
        .into_iter()
        .enumerate()
        .map(|(i, s)| Token::new(s, i))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tense {
    Present = 1,
    Past = 2,
    Future = 3,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Aspect {
    Simple = 1,
    Continuous = 2,
    Perfect = 3,
    PerfectContinuous = 4,
}

/// Verb-form coordinates `v_ij`: `i` the tense, `j` the form of the tense.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VerbForm {
    pub tense: Tense,
    pub aspect: Aspect,
}

impl VerbForm {
    pub const ALL: [VerbForm; 12] = {
        use Aspect::*;
        use Tense::*;
        [
            VerbForm::new(Present, Simple),
            VerbForm::new(Present, Continuous),
            VerbForm::new(Present, Perfect),
            VerbForm::new(Present, PerfectContinuous),
            VerbForm::new(Past, Simple),
            VerbForm::new(Past, Continuous),
            VerbForm::new(Past, Perfect),
            VerbForm::new(Past, PerfectContinuous),
            VerbForm::new(Future, Simple),
            VerbForm::new(Future, Continuous),
            VerbForm::new(Future, Perfect),
            VerbForm::new(Future, PerfectContinuous),
        ]
    };

    pub const fn new(tense: Tense, aspect: Aspect) -> Self {
        VerbForm { tense, aspect }
    }

    /// From `(i, j)` coordinates.
    pub fn from_indices(i: u8, j: u8) -> Option<Self> {
        if !(1..=3).contains(&i) || !(1..=4).contains(&j) {
            return None;
        }
        Some(Self::ALL[usize::from((i - 1) * 4 + (j - 1))])
    }

    pub fn i(self) -> u8 {
        self.tense as u8
    }

    pub fn j(self) -> u8 {
        self.aspect as u8
    }
}

impl fmt::Display for VerbForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}{}", self.i(), self.j())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Modal {
    Shall,
    Will,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbGroup {
    pub form: VerbForm,
    pub lemma: String,
    /// Present exactly for future-tense groups.
    pub modal: Option<Modal>,
    pub aux_tokens: Vec<String>,
    pub head_token: String,
}

impl VerbGroup {
    pub fn tokens(&self) -> Vec<&str> {
        self.aux_tokens
            .iter()
            .chain(std::iter::once(&self.head_token))
            .map(String::as_str)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseSvo {
    pub subject: NounPhrase,
    pub verb: VerbGroup,
    pub object: NounPhrase,
    pub terminal_punct: Option<String>,
}

impl ClauseSvo {
    /// Subject, verb group, object and punctuation tokens in input order.
    pub fn tokens(&self) -> Vec<&str> {
        let mut out = self.subject.tokens();
        out.extend(self.verb.tokens());
        out.extend(self.object.tokens());
        out.extend(self.terminal_punct.as_deref());
        out
    }
}

/// How nominal phrases get their grammatical number.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum NounNumber {
    /// Plural iff the head ends in "s" (minus invariant nouns).
    #[default]
    Auto,
    Singular,
    Plural,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ParseOptions {
    pub noun_number: NounNumber,
}

const AUXILIARIES: &[&str] = &[
    "am", "is", "are", "was", "were", "be", "been", "being", "have", "has", "had", "shall", "will",
];

const BE_FORMS: &[&str] = &["am", "is", "are", "was", "were", "be", "been", "being"];

/// Words that can head neither a noun phrase nor a verb group.
const CLOSED_CLASS: &[&str] = &[
    "not", "never", "no", "by", "to", "of", "in", "on", "at", "with", "for", "from", "and", "or",
    "but", "if", "very", "also", "always", "can", "could", "would", "should", "may", "might",
    "must",
];

fn is_auxiliary(lowered: &str) -> bool {
    AUXILIARIES.contains(&lowered)
}

fn is_word(token: &Token) -> bool {
    token.surface.chars().any(char::is_alphabetic)
        && token
            .surface
            .chars()
            .all(|c| c.is_alphabetic() || c == '-' || c == '\'')
        && !token.lowered.ends_with("n't")
}

fn can_head_noun(lexicon: &Lexicon, token: &Token) -> bool {
    is_word(token)
        && !is_auxiliary(&token.lowered)
        && !CLOSED_CLASS.contains(&token.lowered.as_str())
        && !lexicon.is_article(&token.lowered)
        && lookup_pronoun_as(&token.lowered, CaseRole::Subjective).is_none()
}

fn can_head_verb(token: &Token) -> bool {
    is_word(token)
        && !BE_FORMS.contains(&token.lowered.as_str())
        && !matches!(token.lowered.as_str(), "shall" | "will")
        && !CLOSED_CLASS.contains(&token.lowered.as_str())
}

/// Whether the token has a verb analysis beyond the bare-token fallback.
fn looks_verbal(lexicon: &Lexicon, token: &Token) -> bool {
    is_auxiliary(&token.lowered)
        || analyze_verb_token(lexicon, &token.lowered)
            .iter()
            .any(|a| a.source != AnalysisSource::Fallback)
}

fn nominal(
    lexicon: &Lexicon,
    determiner: Option<&str>,
    heads: &[Token],
    options: &ParseOptions,
) -> NounPhrase {
    let last = &heads[heads.len() - 1].lowered;
    let number = match options.noun_number {
        NounNumber::Auto => lexicon.noun_number(last),
        NounNumber::Singular => Number::Singular,
        NounNumber::Plural => Number::Plural,
    };
    let surfaces: Vec<&str> = heads.iter().map(|t| t.surface.as_str()).collect();
    compound_np(lexicon, determiner, &surfaces, number)
        .expect("determiner checked against the article set")
}

/// Every noun phrase that can start at `start`, with the index after it.
/// Pronoun readings come first, then nominal readings by increasing length.
pub fn np_candidates(
    lexicon: &Lexicon,
    tokens: &[Token],
    start: usize,
    role: CaseRole,
    options: &ParseOptions,
) -> Vec<(NounPhrase, usize)> {
    let mut out = Vec::new();
    let Some(first) = tokens.get(start) else {
        return out;
    };
    if let Some(p) = lookup_pronoun_as(&first.lowered, role) {
        out.push((NounPhrase::pronoun(p), start + 1));
    }
    let mut heads_from = vec![(None, start)];
    if lexicon.is_article(&first.lowered) {
        heads_from = vec![(Some(first.lowered.as_str()), start + 1)];
    }
    for (determiner, from) in heads_from {
        let mut end = from;
        while end < tokens.len() && can_head_noun(lexicon, &tokens[end]) {
            end += 1;
            out.push((
                nominal(lexicon, determiner, &tokens[from..end], options),
                end,
            ));
        }
    }
    out
}

/// Greedy noun phrase: a lone pronoun, or `[determiner] head+` where the
/// head run stops before the first token that looks like a verb.
pub fn parse_np(
    lexicon: &Lexicon,
    tokens: &[Token],
    start: usize,
) -> Result<(NounPhrase, usize), ParseError> {
    parse_np_with(
        lexicon,
        tokens,
        start,
        CaseRole::Subjective,
        &ParseOptions::default(),
    )
}

pub fn parse_np_with(
    lexicon: &Lexicon,
    tokens: &[Token],
    start: usize,
    role: CaseRole,
    options: &ParseOptions,
) -> Result<(NounPhrase, usize), ParseError> {
    let err = ParseError::NoNounPhrase { position: start };
    let first = tokens.get(start).ok_or(err.clone())?;
    let from = if lexicon.is_article(&first.lowered) {
        start + 1
    } else {
        start
    };
    let determiner = (from > start).then_some(first.lowered.as_str());
    let mut end = from;
    while end < tokens.len()
        && can_head_noun(lexicon, &tokens[end])
        && (end == from || !looks_verbal(lexicon, &tokens[end]))
    {
        end += 1;
    }
    if end > from {
        return Ok((
            nominal(lexicon, determiner, &tokens[from..end], options),
            end,
        ));
    }
    match lookup_pronoun_as(&first.lowered, role) {
        Some(p) => Ok((NounPhrase::pronoun(p), start + 1)),
        None => Err(err),
    }
}

/// A verb-group match together with whether it rests on real verb
/// evidence (an auxiliary, or an analysed head) rather than fallback.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbCandidate {
    pub group: VerbGroup,
    pub next: usize,
    pub attested: bool,
}

impl VerbCandidate {
    /// Tokens covered by the verb group.
    pub fn span(&self) -> usize {
        self.group.aux_tokens.len() + 1
    }
}

fn head_analysis(
    lexicon: &Lexicon,
    token: &Token,
    features: &[MorphFeature],
) -> Option<(String, AnalysisSource)> {
    if !can_head_verb(token)
        || lexicon.is_article(&token.lowered)
        || lookup_pronoun_as(&token.lowered, CaseRole::Subjective).is_some()
    {
        return None;
    }
    analyze_verb_token(lexicon, &token.lowered)
        .into_iter()
        .filter(|a| features.contains(&a.feature))
        .min_by(|a, b| a.source.cmp(&b.source))
        .map(|a| (a.lemma, a.source))
}

/// All pattern matches at `start`, longest first.
pub fn verb_group_candidates(
    lexicon: &Lexicon,
    tokens: &[Token],
    start: usize,
) -> Vec<VerbCandidate> {
    use Aspect::*;
    use MorphFeature::{Base, PastParticiple, PresentParticiple, ThirdSingular};
    use Tense::*;

    let word = |k: usize| tokens.get(start + k).map(|t| t.lowered.as_str());
    let mut out = Vec::new();
    let mut try_pattern = |form: VerbForm, aux_len: usize, features: &[MorphFeature]| {
        let Some(head) = tokens.get(start + aux_len) else {
            return;
        };
        let Some((lemma, source)) = head_analysis(lexicon, head, features) else {
            return;
        };
        let aux_tokens: Vec<String> = tokens[start..start + aux_len]
            .iter()
            .map(|t| t.surface.clone())
            .collect();
        let modal = match form.tense {
            Future => match word(0) {
                Some("shall") => Some(Modal::Shall),
                _ => Some(Modal::Will),
            },
            _ => None,
        };
        out.push(VerbCandidate {
            group: VerbGroup {
                form,
                lemma,
                modal,
                aux_tokens,
                head_token: head.surface.clone(),
            },
            next: start + aux_len + 1,
            attested: aux_len > 0 || source != AnalysisSource::Fallback,
        });
    };

    match word(0) {
        Some("am" | "is" | "are") => {
            try_pattern(VerbForm::new(Present, Continuous), 1, &[PresentParticiple]);
        }
        Some("was" | "were") => {
            try_pattern(VerbForm::new(Past, Continuous), 1, &[PresentParticiple]);
        }
        Some("have" | "has") => {
            if word(1) == Some("been") {
                try_pattern(
                    VerbForm::new(Present, PerfectContinuous),
                    2,
                    &[PresentParticiple],
                );
            }
            try_pattern(VerbForm::new(Present, Perfect), 1, &[PastParticiple]);
        }
        Some("had") => {
            if word(1) == Some("been") {
                try_pattern(
                    VerbForm::new(Past, PerfectContinuous),
                    2,
                    &[PresentParticiple],
                );
            }
            try_pattern(VerbForm::new(Past, Perfect), 1, &[PastParticiple]);
        }
        Some("shall" | "will") => {
            if word(1) == Some("have") {
                if word(2) == Some("been") {
                    try_pattern(
                        VerbForm::new(Future, PerfectContinuous),
                        3,
                        &[PresentParticiple],
                    );
                }
                try_pattern(VerbForm::new(Future, Perfect), 2, &[PastParticiple]);
            }
            if word(1) == Some("be") {
                try_pattern(VerbForm::new(Future, Continuous), 2, &[PresentParticiple]);
            }
            try_pattern(VerbForm::new(Future, Simple), 1, &[Base]);
        }
        _ => {}
    }
    try_pattern(VerbForm::new(Present, Simple), 0, &[Base, ThirdSingular]);
    try_pattern(VerbForm::new(Past, Simple), 0, &[MorphFeature::Past]);
    out.sort_by(|a, b| b.span().cmp(&a.span()).then(b.attested.cmp(&a.attested)));
    out
}

/// Longest verb-group pattern at `start`.
pub fn parse_verb_group(
    lexicon: &Lexicon,
    tokens: &[Token],
    start: usize,
) -> Result<(VerbGroup, usize), ParseError> {
    verb_group_candidates(lexicon, tokens, start)
        .into_iter()
        .next()
        .map(|c| (c.group, c.next))
        .ok_or(ParseError::UnknownVerbForm { position: start })
}

pub fn parse_clause(lexicon: &Lexicon, text: &str) -> Result<ClauseSvo, ParseError> {
    parse_clause_with(lexicon, text, &ParseOptions::default())
}

/// Parses `subject verb object [punct]`, trying every split of the tokens
/// into the three constituents. Among complete parses the preferred one has
/// an attested verb group, then the longest verb group, then the shortest
/// subject.
pub fn parse_clause_with(
    lexicon: &Lexicon,
    text: &str,
    options: &ParseOptions,
) -> Result<ClauseSvo, ParseError> {
    let tokens = tokenize(text)?;
    let (body, terminal_punct) = match tokens.split_last() {
        Some((last, body)) if last.is_terminal_punct() => {
            if last.surface.contains('?') {
                return Err(ParseError::NotSvo {
                    position: last.position,
                });
            }
            (body, Some(last.surface.clone()))
        }
        _ => (tokens.as_slice(), None),
    };
    if body.is_empty() {
        return Err(ParseError::NotSvo { position: 0 });
    }

    let subjects = np_candidates(lexicon, body, 0, CaseRole::Subjective, options);
    if subjects.is_empty() {
        return Err(ParseError::NotSvo { position: 0 });
    }

    let mut best: Option<((bool, usize, usize), ClauseSvo)> = None;
    let mut missing_object = None;
    let mut any_verb = false;
    for (subject, verb_at) in &subjects {
        for cand in verb_group_candidates(lexicon, body, *verb_at) {
            any_verb = true;
            if cand.next == body.len() {
                missing_object.get_or_insert(cand.next);
                continue;
            }
            let objects = np_candidates(lexicon, body, cand.next, CaseRole::Objective, options);
            for (object, end) in objects {
                if end != body.len() {
                    continue;
                }
                let key = (!cand.attested, usize::MAX - cand.span(), *verb_at);
                if best.as_ref().is_none_or(|(k, _)| key < *k) {
                    best = Some((
                        key,
                        ClauseSvo {
                            subject: subject.clone(),
                            verb: cand.group.clone(),
                            object,
                            terminal_punct: terminal_punct.clone(),
                        },
                    ));
                }
            }
        }
    }

    if let Some((_, clause)) = best {
        return Ok(clause);
    }
    if let Some(position) = missing_object {
        return Err(ParseError::MissingObject { position });
    }
    if !any_verb {
        let position = subjects.iter().map(|(_, next)| *next).max().unwrap_or(0);
        let position = parse_np(lexicon, body, 0).map_or(position, |(_, next)| next);
        return Err(ParseError::UnknownVerbForm { position });
    }
    let position = subjects
        .iter()
        .flat_map(|(_, at)| verb_group_candidates(lexicon, body, *at))
        .map(|c| c.next)
        .max()
        .unwrap_or(0);
    Err(ParseError::NotSvo { position })
}
