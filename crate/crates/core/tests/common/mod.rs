//! Generated active-voice corpus and a lookup-only passive oracle.
//!
//! Nothing here calls into the library: the active sentences are assembled
//! from literal inflection tables, and the expected passive sentences from
//! literal copies of the pronoun inversion, the verb-core column and the
//! agreement table.

#![allow(dead_code)]

pub struct Verb {
    pub lemma: &'static str,
    pub base: &'static str,
    pub third: &'static str,
    pub past: &'static str,
    pub participle: &'static str,
    pub ing: &'static str,
}

pub const VERBS: [Verb; 5] = [
    Verb {
        lemma: "write",
        base: "write",
        third: "writes",
        past: "wrote",
        participle: "written",
        ing: "writing",
    },
    Verb {
        lemma: "eat",
        base: "eat",
        third: "eats",
        past: "ate",
        participle: "eaten",
        ing: "eating",
    },
    Verb {
        lemma: "catch",
        base: "catch",
        third: "catches",
        past: "caught",
        participle: "caught",
        ing: "catching",
    },
    Verb {
        lemma: "look",
        base: "look",
        third: "looks",
        past: "looked",
        participle: "looked",
        ing: "looking",
    },
    Verb {
        lemma: "carry",
        base: "carry",
        third: "carries",
        past: "carried",
        participle: "carried",
        ing: "carrying",
    },
];

pub struct Subject {
    /// As written at the start of a sentence.
    pub initial: &'static str,
    /// Demoted "by" form.
    pub agent: &'static str,
    pub be: &'static str,
    pub have: &'static str,
    pub was: &'static str,
    pub third_singular: bool,
    pub modal: &'static str,
}

pub const SUBJECTS: [Subject; 8] = [
    Subject {
        initial: "I",
        agent: "me",
        be: "am",
        have: "have",
        was: "was",
        third_singular: false,
        modal: "shall",
    },
    Subject {
        initial: "We",
        agent: "us",
        be: "are",
        have: "have",
        was: "were",
        third_singular: false,
        modal: "shall",
    },
    Subject {
        initial: "You",
        agent: "you",
        be: "are",
        have: "have",
        was: "were",
        third_singular: false,
        modal: "will",
    },
    Subject {
        initial: "He",
        agent: "him",
        be: "is",
        have: "has",
        was: "was",
        third_singular: true,
        modal: "will",
    },
    Subject {
        initial: "She",
        agent: "her",
        be: "is",
        have: "has",
        was: "was",
        third_singular: true,
        modal: "will",
    },
    Subject {
        initial: "They",
        agent: "them",
        be: "are",
        have: "have",
        was: "were",
        third_singular: false,
        modal: "will",
    },
    Subject {
        initial: "The policeman",
        agent: "the policeman",
        be: "is",
        have: "has",
        was: "was",
        third_singular: true,
        modal: "will",
    },
    Subject {
        initial: "The teachers",
        agent: "the teachers",
        be: "are",
        have: "have",
        was: "were",
        third_singular: false,
        modal: "shall",
    },
];

/// Active object and its promoted form; the index is the agreement column.
pub const OBJECTS: [(&str, &str); 8] = [
    ("me", "I"),
    ("us", "we"),
    ("you", "you"),
    ("him", "he"),
    ("her", "she"),
    ("them", "they"),
    ("the movie", "the movie"),
    ("the letters", "the letters"),
];

/// Column names, in the same order as `OBJECTS`.
pub const COLUMNS: [&str; 8] = [
    "i",
    "we",
    "you",
    "he",
    "she",
    "they",
    "noun-singular",
    "noun-plural",
];

/// Each subject is paired with three objects at these offsets (mod 8),
/// so every agreement column appears three times across the corpus.
pub const OBJECT_OFFSETS: [usize; 3] = [1, 3, 5];

pub const FORMS: [(u8, u8); 12] = [
    (1, 1),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 1),
    (2, 2),
    (2, 3),
    (2, 4),
    (3, 1),
    (3, 2),
    (3, 3),
    (3, 4),
];

pub const KERNEL: [(u8, u8); 4] = [(1, 4), (2, 4), (3, 2), (3, 4)];

/// Agreement table, rows by verb cell, columns as `COLUMNS`.
pub fn agreement_cell(form: (u8, u8), column: usize) -> Option<&'static str> {
    let row: [&str; 8] = match form {
        (1, 1) | (1, 2) => ["am", "are", "are", "is", "is", "are", "is", "are"],
        (1, 3) => ["have", "have", "have", "has", "has", "have", "has", "have"],
        (2, 1) | (2, 2) => ["was", "were", "were", "was", "was", "were", "was", "were"],
        (2, 3) => ["had"; 8],
        (3, 1) => [
            "shall", "will", "will", "will", "will", "will", "will", "will",
        ],
        (3, 3) => [
            "shall have",
            "will have",
            "will have",
            "will have",
            "will have",
            "will have",
            "will have",
            "will have",
        ],
        _ => return None,
    };
    Some(row[column])
}

/// Passive core for a verb cell, `{}` standing for the participle.
pub fn core_template(form: (u8, u8)) -> Option<&'static str> {
    match form {
        (1, 1) | (2, 1) => Some("{}"),
        (1, 2) | (2, 2) => Some("being {}"),
        (1, 3) | (2, 3) => Some("been {}"),
        (3, 1) => Some("be {}"),
        (3, 3) => Some("been {}"),
        _ => None,
    }
}

pub fn active_verb(form: (u8, u8), subject: &Subject, verb: &Verb) -> String {
    let m = subject.modal;
    match form {
        (1, 1) => (if subject.third_singular {
            verb.third
        } else {
            verb.base
        })
        .to_string(),
        (1, 2) => format!("{} {}", subject.be, verb.ing),
        (1, 3) => format!("{} {}", subject.have, verb.participle),
        (1, 4) => format!("{} been {}", subject.have, verb.ing),
        (2, 1) => verb.past.to_string(),
        (2, 2) => format!("{} {}", subject.was, verb.ing),
        (2, 3) => format!("had {}", verb.participle),
        (2, 4) => format!("had been {}", verb.ing),
        (3, 1) => format!("{m} {}", verb.base),
        (3, 2) => format!("{m} be {}", verb.ing),
        (3, 3) => format!("{m} have {}", verb.participle),
        (3, 4) => format!("{m} have been {}", verb.ing),
        _ => unreachable!(),
    }
}

fn capitalize(s: &str) -> String {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) => c.to_uppercase().chain(chars).collect(),
        None => String::new(),
    }
}

/// Expected passive rendering, or `None` for kernel cells.
pub fn oracle(form: (u8, u8), subject: usize, object: usize, verb: usize) -> Option<String> {
    let aux = agreement_cell(form, object)?;
    let core = core_template(form)?.replace("{}", VERBS[verb].participle);
    Some(format!(
        "{} {} {} by {}.",
        capitalize(OBJECTS[object].1),
        aux,
        core,
        SUBJECTS[subject].agent
    ))
}

#[derive(Debug, Clone)]
pub struct Case {
    pub sentence: String,
    pub form: (u8, u8),
    pub subject: usize,
    pub object: usize,
    pub verb: usize,
    pub lemma: &'static str,
    pub expected: Option<String>,
}

impl Case {
    pub fn is_kernel(&self) -> bool {
        KERNEL.contains(&self.form)
    }
}

/// 12 forms x 8 subjects x 5 verbs x 3 objects.
pub fn corpus() -> Vec<Case> {
    let mut out = Vec::new();
    for form in FORMS {
        for (s, subject) in SUBJECTS.iter().enumerate() {
            for (v, verb) in VERBS.iter().enumerate() {
                for offset in OBJECT_OFFSETS {
                    let o = (s + offset) % OBJECTS.len();
                    let sentence = format!(
                        "{} {} {}.",
                        subject.initial,
                        active_verb(form, subject, verb),
                        OBJECTS[o].0
                    );
                    out.push(Case {
                        sentence,
                        form,
                        subject: s,
                        object: o,
                        verb: v,
                        lemma: verb.lemma,
                        expected: oracle(form, s, o, v),
                    });
                }
            }
        }
    }
    out
}
