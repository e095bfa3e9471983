//! Rule-based active-to-passive voice transformation for simple affirmative
//! English transitive clauses.
//!
//! ```
//! use passivize_core::Passivizer;
//!
//! let engine = Passivizer::new();
//! let passive = engine.passivize("They are looking the movie.").unwrap();
//! assert_eq!(passive.to_string(), "The movie is being looked by them.");
//! ```

pub mod lexicon;
pub mod morphology;
pub mod parser;
pub mod transformer;

use thiserror::Error;

pub use lexicon::{
    compound_np, invert_pronoun, lookup_pronoun, lookup_pronoun_as, np_invert, CaseRole, Lexicon,
    LexiconError, NounPhrase, NpKind, Person, PronounElement, VerbLemmaEntry,
};
pub use morphology::{
    classify_verb_token, np_number, participle_of, regular_inflect, MorphFeature, Number,
};
pub use parser::{
    parse_clause, parse_clause_with, tokenize, ClauseSvo, Modal, NounNumber, ParseError,
    ParseOptions, Token, VerbForm, VerbGroup,
};
pub use transformer::{
    kernel_check, passive_auxiliary, passive_core, render, transform, AgreementTable,
    PassiveClause, SubjectClass, TransformError, KERNEL,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Transform(#[from] TransformError),
}

/// Step-by-step record of one transformation.
#[derive(Debug, Clone)]
pub struct Explanation {
    pub clause: ClauseSvo,
    pub kernel: bool,
    pub promoted_subject: Option<NounPhrase>,
    pub agent: Option<NounPhrase>,
    pub agreement: Option<(SubjectClass, Vec<String>)>,
    pub passive: Option<PassiveClause>,
}

/// Lexicon, agreement table and parse options bundled together.
#[derive(Debug, Clone, Default)]
pub struct Passivizer {
    pub lexicon: Lexicon,
    pub table: AgreementTable,
    pub options: ParseOptions,
}

impl Passivizer {
    /// Built-in lexicon and the standard agreement table.
    pub fn new() -> Self {
        Self::with_lexicon(Lexicon::builtin())
    }

    pub fn with_lexicon(lexicon: Lexicon) -> Self {
        Passivizer {
            lexicon,
            table: AgreementTable::standard(),
            options: ParseOptions::default(),
        }
    }

    pub fn with_options(mut self, options: ParseOptions) -> Self {
        self.options = options;
        self
    }

    pub fn parse(&self, text: &str) -> Result<ClauseSvo, ParseError> {
        parse_clause_with(&self.lexicon, text, &self.options)
    }

    pub fn passivize(&self, text: &str) -> Result<PassiveClause, Error> {
        let clause = self.parse(text)?;
        Ok(transform(&self.lexicon, &self.table, &clause)?)
    }

    /// Parses and transforms, keeping every intermediate value. Kernel
    /// clauses stop after the kernel verdict.
    pub fn explain(&self, text: &str) -> Result<Explanation, ParseError> {
        let clause = self.parse(text)?;
        let kernel = kernel_check(&clause.verb);
        let mut explanation = Explanation {
            kernel,
            promoted_subject: None,
            agent: None,
            agreement: None,
            passive: None,
            clause,
        };
        if kernel {
            return Ok(explanation);
        }
        let clause = &explanation.clause;
        let promoted = np_invert(&clause.object);
        explanation.agreement = passive_auxiliary(&self.table, &clause.verb, &promoted)
            .ok()
            .map(|aux| (SubjectClass::of(&promoted), aux));
        explanation.agent = Some(np_invert(&clause.subject));
        explanation.promoted_subject = Some(promoted);
        explanation.passive = transform(&self.lexicon, &self.table, clause).ok();
        Ok(explanation)
    }
}
