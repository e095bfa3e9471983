//! Library side of the `passivize` command: records, batch processing and
//! the explanation dump.

pub mod explain;
pub mod record;

use rayon::prelude::*;

use passivize_core::Passivizer;

pub use record::{Analysis, ErrorDetail, Status, TransformRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    JsonLines,
}

pub fn format_record(record: &TransformRecord, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => record.to_text(),
        OutputFormat::JsonLines => record.to_json(),
    }
}

/// Sentences of a corpus file; blank lines and `#` comments are skipped
/// and counted.
pub fn corpus_sentences(text: &str) -> (Vec<&str>, usize) {
    let mut skipped = 0;
    let sentences = text
        .lines()
        .filter(|line| {
            let t = line.trim();
            let keep = !t.is_empty() && !t.starts_with('#');
            if !keep {
                skipped += 1;
            }
            keep
        })
        .map(str::trim)
        .collect();
    (sentences, skipped)
}

/// Transforms every sentence, returning records in input order. `jobs == 1`
/// runs on the calling thread; `0` uses rayon's default pool size.
pub fn run_batch(engine: &Passivizer, sentences: &[&str], jobs: usize) -> Vec<TransformRecord> {
    if jobs == 1 {
        return sentences
            .iter()
            .map(|s| TransformRecord::run(engine, s))
            .collect();
    }
    let work = || {
        sentences
            .par_iter()
            .map(|s| TransformRecord::run(engine, s))
            .collect()
    };
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(work),
        Err(_) => work(),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub ok: usize,
    pub kernel: usize,
    pub error: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(records: &[TransformRecord], skipped: usize) -> Self {
        let mut s = Summary {
            skipped,
            ..Default::default()
        };
        for r in records {
            match r.status {
                Status::Ok => s.ok += 1,
                Status::Kernel => s.kernel += 1,
                Status::ParseError => s.error += 1,
            }
        }
        s
    }

    /// Kernel sentences are a defined outcome, so only parse errors fail.
    pub fn exit_code(&self) -> i32 {
        if self.error == 0 {
            0
        } else {
            1
        }
    }
}

impl std::fmt::Display for Summary {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "summary ok/kernel/error: {}/{}/{} (skipped {})",
            self.ok, self.kernel, self.error, self.skipped
        )
    }
}
