//! Active-to-passive transformation `T(S # V * O) = O^-1 (x) V''' * S^-1`.
//!
//! The object is inverted and promoted, the subject inverted and demoted
//! behind "by", the verb replaced by its passive core, and the auxiliary
//! chosen by the agreement table from the verb cell and the new subject.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::lexicon::{np_invert, CaseRole, Lexicon, NounPhrase, NpKind};
use crate::morphology::{participle_of, Number};
use crate::parser::{Aspect, ClauseSvo, Tense, VerbForm, VerbGroup};

/// Verb cells with no passive image: `{v14, v24, v32, v34}`.
pub const KERNEL: [VerbForm; 4] = [
    VerbForm::new(Tense::Present, Aspect::PerfectContinuous),
    VerbForm::new(Tense::Past, Aspect::PerfectContinuous),
    VerbForm::new(Tense::Future, Aspect::Continuous),
    VerbForm::new(Tense::Future, Aspect::PerfectContinuous),
];

pub fn kernel_check(v: &VerbGroup) -> bool {
    in_kernel(v.form)
}

pub fn in_kernel(form: VerbForm) -> bool {
    KERNEL.contains(&form)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("{0} has no passive form")]
    KernelForm(VerbForm),
}

/// Agreement column of the new subject.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubjectClass {
    I,
    We,
    You,
    He,
    She,
    They,
    NounSingular,
    NounPlural,
}

impl SubjectClass {
    pub const ALL: [SubjectClass; 8] = [
        SubjectClass::I,
        SubjectClass::We,
        SubjectClass::You,
        SubjectClass::He,
        SubjectClass::She,
        SubjectClass::They,
        SubjectClass::NounSingular,
        SubjectClass::NounPlural,
    ];

    pub fn of(np: &NounPhrase) -> SubjectClass {
        match np.kind {
            NpKind::Pronoun(p) => match p.exponent.abs() {
                1 => SubjectClass::I,
                2 => SubjectClass::We,
                3 => SubjectClass::You,
                4 => SubjectClass::He,
                5 => SubjectClass::She,
                _ => SubjectClass::They,
            },
            NpKind::Nominal => match np.number {
                Number::Singular => SubjectClass::NounSingular,
                Number::Plural => SubjectClass::NounPlural,
            },
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SubjectClass::I => "i",
            SubjectClass::We => "we",
            SubjectClass::You => "you",
            SubjectClass::He => "he",
            SubjectClass::She => "she",
            SubjectClass::They => "they",
            SubjectClass::NounSingular => "noun-singular",
            SubjectClass::NounPlural => "noun-plural",
        }
    }

    pub fn from_name(name: &str) -> Option<SubjectClass> {
        Self::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl fmt::Display for SubjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// Columns: I, we, you, he, she, they, noun-singular, noun-plural.
const AGREEMENT_ROWS: [((u8, u8), [&str; 8]); 8] = [
    ((1, 1), ["am", "are", "are", "is", "is", "are", "is", "are"]),
    ((1, 2), ["am", "are", "are", "is", "is", "are", "is", "are"]),
    (
        (1, 3),
        ["have", "have", "have", "has", "has", "have", "has", "have"],
    ),
    (
        (2, 1),
        ["was", "were", "were", "was", "was", "were", "was", "were"],
    ),
    (
        (2, 2),
        ["was", "were", "were", "was", "was", "were", "was", "were"],
    ),
    (
        (2, 3),
        ["had", "had", "had", "had", "had", "had", "had", "had"],
    ),
    (
        (3, 1),
        [
            "shall", "will", "will", "will", "will", "will", "will", "will",
        ],
    ),
    (
        (3, 3),
        [
            "shall have",
            "will have",
            "will have",
            "will have",
            "will have",
            "will have",
            "will have",
            "will have",
        ],
    ),
];

/// Passive auxiliary by `(verb cell, new-subject class)`; defined on the
/// eight cells outside the kernel.
#[derive(Debug, Clone)]
pub struct AgreementTable {
    cells: HashMap<(VerbForm, SubjectClass), Vec<&'static str>>,
}

impl Default for AgreementTable {
    fn default() -> Self {
        Self::standard()
    }
}

impl AgreementTable {
    pub fn standard() -> Self {
        let mut cells = HashMap::new();
        for ((i, j), row) in AGREEMENT_ROWS {
            let form = VerbForm::from_indices(i, j).expect("valid cell");
            for (class, cell) in SubjectClass::ALL.into_iter().zip(row) {
                cells.insert((form, class), cell.split(' ').collect());
            }
        }
        AgreementTable { cells }
    }

    pub fn cell(&self, form: VerbForm, class: SubjectClass) -> Option<&[&'static str]> {
        self.cells.get(&(form, class)).map(Vec::as_slice)
    }

    /// Verb cells the table is defined on, in `v_ij` order.
    pub fn forms(&self) -> Vec<VerbForm> {
        VerbForm::ALL
            .into_iter()
            .filter(|f| self.cells.contains_key(&(*f, SubjectClass::I)))
            .collect()
    }
}

/// Passive verb core: the past participle with its "being"/"been"/"be" prefix.
pub fn passive_core(lexicon: &Lexicon, v: &VerbGroup) -> Result<Vec<String>, TransformError> {
    let participle = participle_of(lexicon, &v.lemma);
    let prefix = match (v.form.tense, v.form.aspect) {
        (_, Aspect::PerfectContinuous) | (Tense::Future, Aspect::Continuous) => {
            return Err(TransformError::KernelForm(v.form))
        }
        (Tense::Present | Tense::Past, Aspect::Simple) => None,
        (Tense::Present | Tense::Past, Aspect::Continuous) => Some("being"),
        (_, Aspect::Perfect) => Some("been"),
        (Tense::Future, Aspect::Simple) => Some("be"),
    };
    Ok(prefix
        .map(str::to_string)
        .into_iter()
        .chain(std::iter::once(participle))
        .collect())
}

pub fn passive_auxiliary(
    table: &AgreementTable,
    v: &VerbGroup,
    new_subject: &NounPhrase,
) -> Result<Vec<String>, TransformError> {
    table
        .cell(v.form, SubjectClass::of(new_subject))
        .map(|cell| cell.iter().map(|s| s.to_string()).collect())
        .ok_or(TransformError::KernelForm(v.form))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PassiveClause {
    pub promoted_subject: NounPhrase,
    pub auxiliary: Vec<String>,
    pub core: Vec<String>,
    pub agent: NounPhrase,
    pub terminal_punct: Option<String>,
}

pub fn transform(
    lexicon: &Lexicon,
    table: &AgreementTable,
    clause: &ClauseSvo,
) -> Result<PassiveClause, TransformError> {
    if kernel_check(&clause.verb) {
        return Err(TransformError::KernelForm(clause.verb.form));
    }
    let promoted_subject = np_invert(&clause.object);
    let agent = np_invert(&clause.subject);
    let auxiliary = passive_auxiliary(table, &clause.verb, &promoted_subject)?;
    let core = passive_core(lexicon, &clause.verb)?;
    Ok(PassiveClause {
        promoted_subject,
        auxiliary,
        core,
        agent,
        terminal_punct: clause.terminal_punct.clone(),
    })
}

fn np_words(np: &NounPhrase, role: CaseRole) -> Vec<String> {
    match np.kind {
        NpKind::Pronoun(p) => vec![p.in_case(role).display_surface().to_string()],
        NpKind::Nominal => np
            .determiner
            .iter()
            .map(|d| d.to_lowercase())
            .chain(np.head_tokens.iter().cloned())
            .collect(),
    }
}

impl PassiveClause {
    /// Words in OVS order, without punctuation or capitalisation.
    pub fn words(&self) -> Vec<String> {
        let mut words = np_words(&self.promoted_subject, CaseRole::Subjective);
        words.extend(self.auxiliary.iter().cloned());
        words.extend(self.core.iter().cloned());
        words.push("by".to_string());
        words.extend(np_words(&self.agent, CaseRole::Objective));
        words
    }
}

pub fn render(p: &PassiveClause) -> String {
    let mut text = p.words().join(" ");
    if let Some(first) = text.chars().next() {
        let upper: String = first.to_uppercase().collect();
        text.replace_range(..first.len_utf8(), &upper);
    }
    if let Some(punct) = &p.terminal_punct {
        text.push_str(punct);
    }
    text
}

impl fmt::Display for PassiveClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}
