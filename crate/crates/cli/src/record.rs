use serde::{Deserialize, Serialize};

use passivize_core::{
    kernel_check, np_invert, ClauseSvo, Error, Passivizer, SubjectClass, TransformError,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    Kernel,
    ParseError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::ParseError => 1,
            Status::Kernel => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub subject_exponent: i8,
    pub tense: u8,
    pub form: u8,
    pub lemma: String,
    /// Agreement class of the promoted object.
    pub object_class: String,
}

impl Analysis {
    pub fn of(clause: &ClauseSvo) -> Self {
        Analysis {
            subject_exponent: clause.subject.exponent(),
            tense: clause.verb.form.i(),
            form: clause.verb.form.j(),
            lemma: clause.verb.lemma.clone(),
            object_class: SubjectClass::of(&np_invert(&clause.object))
                .name()
                .to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorDetail {
    pub message: String,
    pub position: Option<usize>,
}

/// Outcome of one sentence. `output` is set iff the status is ok;
/// `error_detail` iff it is not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransformRecord {
    pub input: String,
    pub status: Status,
    pub output: Option<String>,
    pub analysis: Option<Analysis>,
    pub error_detail: Option<ErrorDetail>,
}

impl TransformRecord {
    pub fn run(engine: &Passivizer, input: &str) -> Self {
        let clause = match engine.parse(input) {
            Ok(clause) => clause,
            Err(e) => {
                return TransformRecord {
                    input: input.to_string(),
                    status: Status::ParseError,
                    output: None,
                    analysis: None,
                    error_detail: Some(ErrorDetail {
                        message: e.to_string(),
                        position: e.position(),
                    }),
                }
            }
        };
        let analysis = Some(Analysis::of(&clause));
        let result = if kernel_check(&clause.verb) {
            Err(Error::Transform(TransformError::KernelForm(
                clause.verb.form,
            )))
        } else {
            passivize_core::transform(&engine.lexicon, &engine.table, &clause).map_err(Error::from)
        };
        match result {
            Ok(passive) => TransformRecord {
                input: input.to_string(),
                status: Status::Ok,
                output: Some(passive.to_string()),
                analysis,
                error_detail: None,
            },
            Err(e) => TransformRecord {
                input: input.to_string(),
                status: Status::Kernel,
                output: None,
                analysis,
                error_detail: Some(ErrorDetail {
                    message: e.to_string(),
                    position: None,
                }),
            },
        }
    }

    /// The line printed in text mode.
    pub fn to_text(&self) -> String {
        match (self.status, &self.output, &self.error_detail) {
            (Status::Ok, Some(output), _) => output.clone(),
            (Status::Kernel, _, detail) => format!(
                "kernel: {} [{}]",
                detail
                    .as_ref()
                    .map_or("no passive form", |d| d.message.as_str()),
                self.input
            ),
            (_, _, detail) => format!(
                "error: {} [{}]",
                detail
                    .as_ref()
                    .map_or("parse error", |d| d.message.as_str()),
                self.input
            ),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }
}
